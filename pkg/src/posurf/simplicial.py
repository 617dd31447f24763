"""Simplicial complexes: construction, links, joins, pseudomanifold tests.

A simplex is a frozenset of integer vertex labels; its dimension is its
cardinality minus one. A complex stores every nonempty face and is closed
under inclusion (checked) and therefore under intersection. The face
poset bridges a complex to the poset-level recognizers; there, the rank
of every face equals its dimension.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .errors import DomainError, ParseError
from .poset import Poset

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "simplicial_join",
    "read_facets",
    "write_facets",
]

Simplex = frozenset


def _as_simplex(vertices: Iterable[int]) -> frozenset[int]:
    s = frozenset(int(v) for v in vertices)
    if not s:
        raise DomainError("the empty simplex is not a face")
    return s


def _canonical_key(s: frozenset) -> tuple:
    return (len(s), tuple(sorted(s)))


class SimplicialComplex:
    """An inclusion-closed, intersection-closed family of nonempty simplices."""

    def __init__(self, simplices: Iterable[Iterable[int]]):
        faces = {_as_simplex(s) for s in simplices}
        for f in faces:
            if len(f) > 1:
                for v in f:
                    if f - {v} not in faces:
                        raise DomainError(
                            f"not closed under inclusion: {sorted(f - {v})} missing under {sorted(f)}"
                        )
        self._faces = frozenset(faces)
        self._canonical = tuple(sorted(faces, key=_canonical_key))
        self._dim = max((len(f) for f in faces), default=0) - 1
        non_maximal = set()
        for f in faces:
            if len(f) > 1:
                for v in f:
                    non_maximal.add(f - {v})
        self._facets = tuple(sorted((f for f in faces if f not in non_maximal), key=_canonical_key))
        self._vertices = tuple(sorted(set().union(*faces))) if faces else ()
        self._poset: Poset | None = None
        self._face_ids: dict[frozenset, int] | None = None

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of the given facets; each facet must be nonempty."""
        faces: set[frozenset] = set()
        for f0 in facets:
            f = _as_simplex(f0)
            vs = sorted(f)
            for r in range(1, len(vs) + 1):
                faces.update(frozenset(c) for c in combinations(vs, r))
        return cls(faces)

    # -- basic queries ------------------------------------------------------

    @property
    def dim(self) -> int:
        """Top dimension; -1 for the empty complex."""
        return self._dim

    @property
    def faces(self) -> tuple[frozenset, ...]:
        """All faces in canonical order (by dimension, then vertex tuple)."""
        return self._canonical

    @property
    def facets(self) -> tuple[frozenset, ...]:
        """The maximal faces, in canonical order."""
        return self._facets

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._canonical)

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self._canonical)

    def __contains__(self, simplex) -> bool:
        try:
            s = _as_simplex(simplex)
        except DomainError:
            return False
        return s in self._faces

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self._faces == other._faces

    def __hash__(self) -> int:
        return hash(self._faces)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self)} faces, dim {self._dim})"

    def faces_of_dim(self, d: int) -> tuple[frozenset, ...]:
        return tuple(f for f in self._canonical if len(f) == d + 1)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by dimension, from 0 up to dim."""
        counts = [0] * (self._dim + 1)
        for f in self._faces:
            counts[len(f) - 1] += 1
        return tuple(counts)

    # -- face poset bridge --------------------------------------------------

    def face_poset(self) -> Poset:
        """Poset of all faces under inclusion; covering is codimension 1.

        Ids follow the canonical face order and labels record the sorted
        vertex tuple, comma separated. Cached on the complex.
        """
        if self._poset is None:
            idx = {f: i for i, f in enumerate(self._canonical)}
            covers = []
            labels = []
            for f in self._canonical:
                labels.append(",".join(str(v) for v in sorted(f)))
                covers.append(sorted(idx[f - {v}] for v in f) if len(f) > 1 else [])
            self._poset = Poset(covers, labels)
            self._face_ids = idx
        return self._poset

    def face_id(self, simplex) -> int:
        s = _as_simplex(simplex)
        self.face_poset()
        assert self._face_ids is not None
        try:
            return self._face_ids[s]
        except KeyError:
            raise DomainError(f"{sorted(s)} is not a face of the complex") from None

    # -- links and structural predicates ------------------------------------

    def link(self, simplex) -> "SimplicialComplex":
        """Faces disjoint from ``simplex`` whose union with it is a face."""
        h = _as_simplex(simplex)
        if h not in self._faces:
            raise DomainError(f"{sorted(h)} is not a face of the complex")
        return SimplicialComplex(f for f in self._faces if not f & h and (f | h) in self._faces)

    def is_pure(self) -> bool:
        """Every face lies under a top-dimensional facet."""
        return all(len(f) - 1 == self._dim for f in self._facets)

    def ridge_facet_counts(self) -> dict[frozenset, int]:
        """For each (dim-1)-face under a top facet: its number of top cofaces."""
        counts: dict[frozenset, int] = {}
        for f in self._facets:
            if len(f) - 1 == self._dim and len(f) > 1:
                for v in f:
                    r = f - {v}
                    counts[r] = counts.get(r, 0) + 1
        return counts

    def is_codim1_connected(self, within=None) -> bool:
        """Facet dual-graph connectivity (facets adjacent via a shared ridge).

        This decides the existence of paths between top faces that use only
        faces of the top two dimensions. With ``within`` a face h, restricts
        to facets and ridges containing h, which decides the connectivity of
        h's coface set. Requires a pure complex.
        """
        if not self.is_pure():
            raise DomainError("codim-1 connectivity requires a pure complex")
        facets = self._facets
        if within is not None:
            w = _as_simplex(within)
            if w not in self._faces:
                raise DomainError(f"{sorted(w)} is not a face of the complex")
            facets = tuple(f for f in facets if w <= f)
        if len(facets) <= 1:
            return True
        buckets: dict[frozenset, list[int]] = {}
        for i, f in enumerate(facets):
            if len(f) > 1:
                for v in f:
                    r = f - {v}
                    if within is not None and not w <= r:
                        continue
                    buckets.setdefault(r, []).append(i)
        parent = list(range(len(facets)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for group in buckets.values():
            for other in group[1:]:
                ra, rb = find(group[0]), find(other)
                if ra != rb:
                    parent[rb] = ra
        roots = {find(i) for i in range(len(facets))}
        return len(roots) == 1

    def is_pseudomanifold(self) -> bool:
        """Pure, each ridge under one or two top faces, dual graph connected.

        A rank-0 complex qualifies only as the degenerate single vertex;
        the empty complex does not qualify.
        """
        n = self._dim
        if n < 0:
            return False
        if n == 0:
            return len(self._faces) == 1
        if not self.is_pure():
            return False
        if any(c not in (1, 2) for c in self.ridge_facet_counts().values()):
            return False
        return self.is_codim1_connected()

    def is_normal_pseudomanifold(self) -> bool:
        """Pseudomanifold whose links of codimension >= 2 faces are pseudomanifolds."""
        if not self.is_pseudomanifold():
            return False
        n = self._dim
        for f in self._canonical:
            if len(f) - 1 <= n - 2 and not self.link(f).is_pseudomanifold():
                return False
        return True


def simplicial_join(k: SimplicialComplex, l: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes: both plus all unions of a face from each.

    When the vertex sets collide, the second complex is renumbered upward
    by an offset; the result's dimension is dim(k) + dim(l) + 1.
    """
    l_faces = list(l.faces)
    if k.vertices and l.vertices and set(k.vertices) & set(l.vertices):
        offset = max(k.vertices) + 1 - min(l.vertices)
        l_faces = [frozenset(v + offset for v in f) for f in l_faces]
    faces = set(k.faces) | set(l_faces)
    faces.update(x | y for x in k.faces for y in l_faces)
    return SimplicialComplex(faces)


def read_facets(text: str) -> SimplicialComplex:
    """Parse the facet-list format: one facet per line, '#' comments."""
    facets = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        try:
            verts = [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"facet vertices must be integers: {line!r}", no) from None
        if len(set(verts)) != len(verts):
            raise ParseError(f"repeated vertex in facet: {line!r}", no)
        facets.append(verts)
    return SimplicialComplex.from_facets(facets)


def write_facets(k: SimplicialComplex) -> str:
    """Serialize a complex as its facet list, canonically ordered."""
    lines = [" ".join(str(v) for v in sorted(f)) for f in k.facets]
    return "\n".join(lines) + ("\n" if lines else "")
