"""Finite partially ordered sets stored by their covering (Hasse) relation.

Faces are dense integer ids ``0..n-1``. The full strict order is derived
from the covering relation once, as per-face bitmasks, and cached on the
poset:

* ``alpha_masks[h]``  faces strictly below ``h`` (combinatorial closure)
* ``beta_masks[h]``   faces strictly above ``h`` (combinatorial opening)
* ``theta_masks[h]``  their union (the strict neighborhood)

A suborder is a :class:`SuborderView`: the ambient poset plus a member
bitmask. All recognizers in this package work on such views, so a face
never gets renumbered while recursing through neighborhoods, and the
member bitmask doubles as the memoization key.

Posets are immutable after construction and safe to share across threads
for reading; lazily filled caches only move from "absent" to the one
correct value, so concurrent readers cannot observe an inconsistency.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError

__all__ = [
    "Poset",
    "SuborderView",
    "as_view",
    "restrict",
    "theta_view",
    "iter_bits",
    "local_sets",
    "rank",
    "connected_components",
    "join",
    "is_separated_union",
    "is_isomorphic",
    "to_hasse",
    "from_hasse",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset given by its covering relation.

    ``covers[h]`` lists the immediate strict predecessors of face ``h``;
    the strict order is its transitive closure. Construction rejects
    cyclic input, so the closure is always a strict partial order.
    """

    def __init__(self, covers: Sequence[Iterable[int]], labels: Sequence[str | None] | None = None):
        cover_lists = []
        for cs in covers:
            cover_lists.append(tuple(sorted({int(c) for c in cs})))
        n = len(cover_lists)
        for h, cs in enumerate(cover_lists):
            for c in cs:
                if not 0 <= c < n:
                    raise DomainError(f"face {h} covers unknown face {c}")
                if c == h:
                    raise DomainError(f"face {h} covers itself")
        if labels is None:
            label_tuple: tuple[str | None, ...] = (None,) * n
        else:
            label_tuple = tuple(labels)
            if len(label_tuple) != n:
                raise DomainError("labels length does not match face count")

        self._covers = tuple(cover_lists)
        self._labels = label_tuple
        self._n = n
        self.full_mask = (1 << n) - 1

        # One topological pass over the cover DAG gives closures, ranks,
        # and the acyclicity check.
        up: list[list[int]] = [[] for _ in range(n)]
        indeg = [len(cs) for cs in cover_lists]
        for h, cs in enumerate(cover_lists):
            for c in cs:
                up[c].append(h)
        order = [h for h in range(n) if indeg[h] == 0]
        alpha = [0] * n
        ranks = [0] * n
        qi = 0
        while qi < len(order):
            h = order[qi]
            qi += 1
            a = 0
            r = 0
            for c in cover_lists[h]:
                a |= alpha[c] | (1 << c)
                if ranks[c] + 1 > r:
                    r = ranks[c] + 1
            alpha[h] = a
            ranks[h] = r
            for g in up[h]:
                indeg[g] -= 1
                if indeg[g] == 0:
                    order.append(g)
        if len(order) != n:
            raise DomainError("covering relation is cyclic")
        beta = [0] * n
        for h in reversed(order):
            b = 0
            for g in up[h]:
                b |= beta[g] | (1 << g)
            beta[h] = b

        self.alpha_masks = tuple(alpha)
        self.beta_masks = tuple(beta)
        self.theta_masks = tuple(a | b for a, b in zip(alpha, beta))
        self.face_ranks = tuple(ranks)
        self._rank = max(ranks) if n else -1
        self._memo: dict[str, dict] = {}

    def __len__(self) -> int:
        return self._n

    def __repr__(self) -> str:
        return f"Poset({self._n} faces, rank {self._rank})"

    @property
    def labels(self) -> tuple[str | None, ...]:
        return self._labels

    def label(self, h: int) -> str | None:
        self._check_face(h)
        return self._labels[h]

    def covers(self, h: int) -> tuple[int, ...]:
        """Immediate strict predecessors of ``h``."""
        self._check_face(h)
        return self._covers[h]

    @property
    def cover_lists(self) -> tuple[tuple[int, ...], ...]:
        return self._covers

    def rank(self) -> int:
        return self._rank

    def _check_face(self, h: int) -> None:
        if not isinstance(h, int) or not 0 <= h < self._n:
            raise DomainError(f"unknown face id {h!r}")

    def memo(self, name: str) -> dict:
        """Named cache scoped to this poset (compute-once contract)."""
        return self._memo.setdefault(name, {})


@dataclass(frozen=True)
class SuborderView:
    """A suborder of an ambient poset, identified by a member bitmask.

    The induced order is the ambient order restricted to the members;
    ranks inside a view are recomputed for the induced order, never
    inherited from the ambient poset.
    """

    ambient: Poset
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask & ~self.ambient.full_mask:
            raise DomainError("view members outside the ambient poset")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, h: int) -> bool:
        return isinstance(h, int) and 0 <= h and bool(self.mask >> h & 1)

    def rank(self) -> int:
        return view_rank(self.ambient, self.mask)

    def face_rank(self, h: int) -> int:
        if h not in self:
            raise DomainError(f"face {h} is not a member of the view")
        return view_face_ranks(self.ambient, self.mask)[h]

    def restrict(self, faces: Iterable[int]) -> "SuborderView":
        sub = mask_of(self, faces)
        return SuborderView(self.ambient, sub)

    def to_poset(self) -> Poset:
        """Materialize the view as a standalone poset.

        New ids follow ascending ambient ids (``members[i]`` becomes ``i``);
        labels are carried over. Covering is recomputed for the induced
        order, which in general differs from the ambient covering.
        """
        members = self.members
        pos = {h: i for i, h in enumerate(members)}
        alpha = self.ambient.alpha_masks
        beta = self.ambient.beta_masks
        covers = []
        for h in members:
            below = alpha[h] & self.mask
            covers.append(sorted(pos[x] for x in iter_bits(below) if not beta[x] & below))
        labels = [self.ambient._labels[h] for h in members]
        return Poset(covers, labels)


def as_view(obj: "Poset | SuborderView") -> SuborderView:
    if isinstance(obj, SuborderView):
        return obj
    if isinstance(obj, Poset):
        return SuborderView(obj, obj.full_mask)
    raise DomainError(f"expected a Poset or SuborderView, got {type(obj).__name__}")


def mask_of(view: SuborderView, faces: Iterable[int]) -> int:
    m = 0
    for h in faces:
        if h not in view:
            raise DomainError(f"face {h} is not a member of the poset/view")
        m |= 1 << h
    return m


def restrict(obj: "Poset | SuborderView", faces: Iterable[int]) -> SuborderView:
    """The suborder view induced by ``faces``."""
    view = as_view(obj)
    return SuborderView(view.ambient, mask_of(view, faces))


def theta_view(obj: "Poset | SuborderView", h: int) -> SuborderView:
    """The strict neighborhood of ``h`` as a suborder view."""
    view = as_view(obj)
    if h not in view:
        raise DomainError(f"face {h} is not a member of the poset/view")
    return SuborderView(view.ambient, view.ambient.theta_masks[h] & view.mask)


# ---------------------------------------------------------------------------
# mask-level machinery shared by the recognizers


def view_face_ranks(poset: Poset, mask: int) -> dict[int, int]:
    """Per-face ranks of the suborder induced by ``mask`` (recomputed)."""
    ranks: dict[int, int] = {}
    alpha = poset.alpha_masks
    for h in sorted(iter_bits(mask), key=poset.face_ranks.__getitem__):
        below = alpha[h] & mask
        ranks[h] = 1 + max(ranks[x] for x in iter_bits(below)) if below else 0
    return ranks


def view_rank(poset: Poset, mask: int, use_memo: bool = True) -> int:
    """Rank of the suborder induced by ``mask``; -1 when empty."""
    if mask == 0:
        return -1
    memo = poset.memo("view_rank") if use_memo else None
    if memo is not None:
        got = memo.get(mask)
        if got is not None:
            return got
    r = max(view_face_ranks(poset, mask).values())
    if memo is not None:
        memo[mask] = r
    return r


def is_connected_mask(poset: Poset, mask: int) -> bool:
    """Path-connectedness of a view under strict theta adjacency."""
    if mask == 0:
        return True
    theta = poset.theta_masks
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= theta[low.bit_length() - 1]
            f ^= low
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def component_masks(poset: Poset, mask: int) -> list[int]:
    """Connected components of a view, ordered by their lowest member."""
    theta = poset.theta_masks
    comps = []
    rest = mask
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= theta[low.bit_length() - 1]
                f ^= low
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


# ---------------------------------------------------------------------------
# public operator algebra


_KIND_ATTR = {"alpha": "alpha_masks", "beta": "beta_masks", "theta": "theta_masks"}


def local_sets(
    obj: "Poset | SuborderView",
    faces: int | Iterable[int],
    kind: str,
    strict: bool = True,
) -> frozenset[int]:
    """Closure (alpha), opening (beta) or neighborhood (theta) of faces.

    ``faces`` may be a single id or an iterable; over a set the result is
    the union over its members. Non-strict variants include the faces
    themselves.
    """
    view = as_view(obj)
    try:
        masks = getattr(view.ambient, _KIND_ATTR[kind])
    except KeyError:
        raise DomainError(f"unknown operator kind {kind!r}; use alpha, beta or theta") from None
    if isinstance(faces, int):
        faces = (faces,)
    out = 0
    for h in faces:
        if h not in view:
            raise DomainError(f"face {h} is not a member of the poset/view")
        m = masks[h] & view.mask
        if not strict:
            m |= 1 << h
        out |= m
    return frozenset(iter_bits(out))


def rank(obj: "Poset | SuborderView", h: int | None = None) -> int:
    """Rank of the poset/view, or of one face within it."""
    view = as_view(obj)
    if h is None:
        return view_rank(view.ambient, view.mask)
    return view.face_rank(h)


def connected_components(obj: "Poset | SuborderView") -> tuple[frozenset[int], ...]:
    """Partition of the members under strict theta adjacency."""
    view = as_view(obj)
    return tuple(frozenset(iter_bits(m)) for m in component_masks(view.ambient, view.mask))


def join(p: Poset, q: Poset) -> Poset:
    """Order join: every face of ``p`` sits below every face of ``q``.

    ``q``'s ids are offset by ``len(p)``; labels are preserved. The
    covering relation of the result is the transitive reduction of the
    joined order: both internal cover relations plus (maximal faces of
    ``p``) x (minimal faces of ``q``).
    """
    np_ = len(p)
    covers: list[list[int]] = [list(p.covers(h)) for h in range(np_)]
    p_max = [h for h in range(np_) if p.beta_masks[h] == 0]
    for h in range(len(q)):
        cs = [c + np_ for c in q.covers(h)]
        if not cs and np_:
            cs = list(p_max)
        covers.append(cs)
    return Poset(covers, p.labels + q.labels)


def is_separated_union(obj: "Poset | SuborderView", a: Iterable[int], b: Iterable[int]) -> bool:
    """True when no theta adjacency crosses between the parts ``a``, ``b``.

    ``a`` and ``b`` must be disjoint and together cover the poset/view.
    """
    view = as_view(obj)
    am = mask_of(view, a)
    bm = mask_of(view, b)
    if am & bm:
        raise DomainError("the two parts overlap")
    if am | bm != view.mask:
        raise DomainError("the two parts do not cover the poset/view")
    theta = view.ambient.theta_masks
    reach = 0
    for h in iter_bits(am):
        reach |= theta[h]
    return not reach & bm


# ---------------------------------------------------------------------------
# isomorphism (small-instance test oracle)


def _materialize(obj: "Poset | SuborderView") -> Poset:
    if isinstance(obj, Poset):
        return obj
    return as_view(obj).to_poset()


def _iso_signatures(p: Poset, rounds: int = 2) -> list:
    """Per-face invariants refined over the cover graph (WL-style)."""
    n = len(p)
    up: list[list[int]] = [[] for _ in range(n)]
    for h in range(n):
        for c in p.covers(h):
            up[c].append(h)
    sig: list = [(p.face_ranks[h], len(p.covers(h)), len(up[h])) for h in range(n)]
    for _ in range(rounds):
        sig = [
            (
                sig[h],
                tuple(sorted(sig[c] for c in p.covers(h))),
                tuple(sorted(sig[g] for g in up[h])),
            )
            for h in range(n)
        ]
    return sig


def is_isomorphic(p: "Poset | SuborderView", q: "Poset | SuborderView", max_faces: int = 40) -> bool:
    """Order-isomorphism by backtracking search; small inputs only.

    Inputs larger than ``max_faces`` are refused with a DomainError (the
    search is exponential in general; this is a test oracle, not a
    production primitive).
    """
    pa = _materialize(p)
    qa = _materialize(q)
    if len(pa) > max_faces or len(qa) > max_faces:
        raise DomainError(f"isomorphism test refused: inputs above {max_faces} faces")
    if len(pa) != len(qa):
        return False
    if pa.rank() != qa.rank():
        return False

    sig_p = _iso_signatures(pa)
    sig_q = _iso_signatures(qa)
    if sorted(map(repr, sig_p)) != sorted(map(repr, sig_q)):
        return False

    n = len(pa)
    candidates: list[list[int]] = []
    by_sig: dict[str, list[int]] = {}
    for j in range(n):
        by_sig.setdefault(repr(sig_q[j]), []).append(j)
    for h in range(n):
        candidates.append(by_sig.get(repr(sig_p[h]), []))
        if not candidates[-1]:
            return False

    order = sorted(range(n), key=lambda h: len(candidates[h]))
    mapping = [-1] * n
    used = [False] * n

    up_p: list[list[int]] = [[] for _ in range(n)]
    up_q: list[list[int]] = [[] for _ in range(n)]
    for h in range(n):
        for c in pa.covers(h):
            up_p[c].append(h)
        for c in qa.covers(h):
            up_q[c].append(h)
    covers_q = [set(qa.covers(h)) for h in range(n)]
    coverers_q = [set(up_q[h]) for h in range(n)]

    def extend(i: int) -> bool:
        if i == n:
            return True
        a = order[i]
        for b in candidates[a]:
            if used[b]:
                continue
            ok = True
            for c in pa.covers(a):
                m = mapping[c]
                if m >= 0 and m not in covers_q[b]:
                    ok = False
                    break
            if ok:
                for g in up_p[a]:
                    m = mapping[g]
                    if m >= 0 and m not in coverers_q[b]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[a] = b
            used[b] = True
            if extend(i + 1):
                return True
            mapping[a] = -1
            used[b] = False
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# Hasse text format


def to_hasse(p: Poset) -> str:
    """Serialize a poset: one ``f <id> <label?> : <covered-id>*`` per face."""
    lines = ["# f <id> <label?> : <covered-id>*"]
    lines.append(f"rank {p.rank()}")
    for h in range(len(p)):
        lab = p.label(h)
        if lab is None:
            head = f"f {h} :"
        else:
            lab = str(lab)
            if not lab or lab == ":" or any(ch.isspace() for ch in lab):
                raise DomainError(f"label of face {h} cannot be serialized: {lab!r}")
            head = f"f {h} {lab} :"
        tail = " ".join(str(c) for c in p.covers(h))
        lines.append(f"{head} {tail}" if tail else head)
    return "\n".join(lines) + "\n"


def from_hasse(text: str) -> Poset:
    """Parse the Hasse text format; ids must be dense from 0.

    A ``rank <n>`` line is optional and verified against the computed rank.
    """
    records: dict[int, tuple[str | None, list[int]]] = {}
    declared: int | None = None
    declared_line = 0
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "rank":
            if len(toks) != 2:
                raise ParseError("malformed rank line", no)
            try:
                declared = int(toks[1])
            except ValueError:
                raise ParseError(f"rank is not an integer: {toks[1]!r}", no) from None
            declared_line = no
        elif toks[0] == "f":
            if len(toks) < 3:
                raise ParseError("face record needs at least 'f <id> :'", no)
            try:
                fid = int(toks[1])
            except ValueError:
                raise ParseError(f"face id is not an integer: {toks[1]!r}", no) from None
            if toks[2] == ":":
                label, rest = None, toks[3:]
            elif len(toks) > 3 and toks[3] == ":":
                label, rest = toks[2], toks[4:]
            else:
                raise ParseError("missing ':' separator in face record", no)
            try:
                covered = [int(t) for t in rest]
            except ValueError:
                raise ParseError("covered ids must be integers", no) from None
            if fid in records:
                raise ParseError(f"duplicate face id {fid}", no)
            records[fid] = (label, covered)
        else:
            raise ParseError(f"unknown record {toks[0]!r}", no)
    n = len(records)
    if sorted(records) != list(range(n)):
        raise ParseError("face ids are not dense from 0")
    covers = [records[h][1] for h in range(n)]
    labels = [records[h][0] for h in range(n)]
    try:
        poset = Poset(covers, labels)
    except DomainError as exc:
        raise ParseError(str(exc)) from None
    if declared is not None and declared != poset.rank():
        raise ParseError(
            f"declared rank {declared} does not match computed rank {poset.rank()}",
            declared_line,
        )
    return poset
