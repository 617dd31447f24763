"""Border/interior operators and the PCM recognizers.

The border of a rank-n suborder collects the faces whose strict
neighborhood fails the (n-1)-surface test; the interior is the rest.
The PCM recognizers follow the recursive definitions literally, over the
same memoized view machinery as the surface recognizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .poset import (
    Poset,
    SuborderView,
    as_view,
    component_masks,
    is_connected_mask,
    iter_bits,
    mask_of,
    view_rank,
)
from .surfaces import NOT_SURFACE, SurfaceVerdict, surface_rank_of_mask

__all__ = [
    "BorderDecomposition",
    "PcmVerdict",
    "border",
    "is_pcm",
    "is_smooth_pcm",
    "check_condition_C",
    "border_mask_of",
    "pcm_rank_of_mask",
    "smooth_pcm_rank_of_mask",
]

NOT_PCM = -2


@dataclass(frozen=True)
class PcmVerdict:
    """Outcome of a PCM recognizer; ``rank`` is set only when it holds."""

    holds: bool
    rank: int | None


@dataclass(frozen=True)
class BorderDecomposition:
    """The border of a view, its interior, and the border's components.

    Each component comes with its own surface verdict, evaluated as a
    standalone suborder.
    """

    border_faces: frozenset[int]
    interior_faces: frozenset[int]
    components: tuple[tuple[frozenset[int], SurfaceVerdict], ...]

    @property
    def is_empty(self) -> bool:
        return not self.border_faces


def border_mask_of(poset: Poset, mask: int, memo: dict | None) -> int:
    """Bitmask of the border faces of a view of rank >= 0."""
    n = view_rank(poset, mask, memo is not None)
    if n < 0:
        raise DomainError("the border is undefined on the empty order")
    theta = poset.theta_masks
    out = 0
    for h in iter_bits(mask):
        if surface_rank_of_mask(poset, theta[h] & mask, memo) != n - 1:
            out |= 1 << h
    return out


def border(obj: "Poset | SuborderView", use_memo: bool = True) -> BorderDecomposition:
    """Border decomposition of a poset or suborder view (rank >= 0).

    Scans the faces in id order and tests each strict neighborhood against
    the (rank-1)-surface target; the border faces are then partitioned
    into theta-connected components, each with its surface verdict.
    """
    view = as_view(obj)
    poset = view.ambient
    memo = poset.memo("surface") if use_memo else None
    bmask = border_mask_of(poset, view.mask, memo)
    comps = []
    for cm in component_masks(poset, bmask):
        r = surface_rank_of_mask(poset, cm, memo)
        verdict = SurfaceVerdict(r != NOT_SURFACE, None if r == NOT_SURFACE else r, cm)
        comps.append((frozenset(iter_bits(cm)), verdict))
    return BorderDecomposition(
        border_faces=frozenset(iter_bits(bmask)),
        interior_faces=frozenset(iter_bits(view.mask & ~bmask)),
        components=tuple(comps),
    )


def pcm_rank_of_mask(poset: Poset, mask: int, smemo: dict | None, pmemo: dict | None) -> int:
    """PCM rank of a view, or NOT_PCM.

    Base cases: the empty order is the (-1)-PCM and a singleton the 0-PCM.
    For rank n >= 1 the view must be connected with a nonempty border, and
    every strict neighborhood must be an (n-1)-surface (interior face) or
    an (n-1)-PCM (border face).
    """
    if pmemo is not None:
        got = pmemo.get(mask)
        if got is not None:
            return got
    count = mask.bit_count()
    if count == 0:
        result = -1
    elif count == 1:
        result = 0
    else:
        n = view_rank(poset, mask, pmemo is not None)
        if n == 0 or not is_connected_mask(poset, mask):
            result = NOT_PCM
        else:
            theta = poset.theta_masks
            has_border = False
            result = n
            for h in iter_bits(mask):
                t = theta[h] & mask
                if surface_rank_of_mask(poset, t, smemo) == n - 1:
                    continue
                if pcm_rank_of_mask(poset, t, smemo, pmemo) == n - 1:
                    has_border = True
                    continue
                result = NOT_PCM
                break
            if result == n and not has_border:
                result = NOT_PCM
    if pmemo is not None:
        pmemo[mask] = result
    return result


def _border_is_surface_union(poset: Poset, bmask: int, target: int, smemo: dict | None) -> bool:
    """Is the border view a separated union of target-rank surfaces?

    Components of a suborder are never theta-adjacent inside it, so the
    separation between parts is automatic. For target >= 1 surfaces are
    connected, hence each component must itself be a target-surface. A
    0-surface is two mutually non-adjacent faces, so for target 0 the
    border must consist of singleton components in even number (any pairing
    then realizes the union of 0-surfaces).
    """
    comps = component_masks(poset, bmask)
    if target == 0:
        if any(cm.bit_count() != 1 for cm in comps):
            return False
        return bmask.bit_count() % 2 == 0
    return all(surface_rank_of_mask(poset, cm, smemo) == target for cm in comps)


def smooth_pcm_rank_of_mask(poset: Poset, mask: int, smemo: dict | None, mmemo: dict | None) -> int:
    """Smooth PCM rank of a view, or NOT_PCM.

    Like the PCM recursion, but border faces must have smooth (n-1)-PCM
    neighborhoods and the border itself must be a separated union of
    (n-1)-surfaces.
    """
    if mmemo is not None:
        got = mmemo.get(mask)
        if got is not None:
            return got
    count = mask.bit_count()
    if count == 0:
        result = -1
    elif count == 1:
        result = 0
    else:
        n = view_rank(poset, mask, mmemo is not None)
        if n == 0 or not is_connected_mask(poset, mask):
            result = NOT_PCM
        else:
            theta = poset.theta_masks
            bmask = 0
            result = n
            for h in iter_bits(mask):
                t = theta[h] & mask
                if surface_rank_of_mask(poset, t, smemo) == n - 1:
                    continue
                if smooth_pcm_rank_of_mask(poset, t, smemo, mmemo) == n - 1:
                    bmask |= 1 << h
                    continue
                result = NOT_PCM
                break
            if result == n:
                if not bmask or not _border_is_surface_union(poset, bmask, n - 1, smemo):
                    result = NOT_PCM
    if mmemo is not None:
        mmemo[mask] = result
    return result


def is_pcm(obj: "Poset | SuborderView", use_memo: bool = True) -> PcmVerdict:
    view = as_view(obj)
    smemo = view.ambient.memo("surface") if use_memo else None
    pmemo = view.ambient.memo("pcm") if use_memo else None
    r = pcm_rank_of_mask(view.ambient, view.mask, smemo, pmemo)
    return PcmVerdict(r != NOT_PCM, None if r == NOT_PCM else r)


def is_smooth_pcm(obj: "Poset | SuborderView", use_memo: bool = True) -> PcmVerdict:
    view = as_view(obj)
    smemo = view.ambient.memo("surface") if use_memo else None
    mmemo = view.ambient.memo("smooth") if use_memo else None
    r = smooth_pcm_rank_of_mask(view.ambient, view.mask, smemo, mmemo)
    return PcmVerdict(r != NOT_PCM, None if r == NOT_PCM else r)


def check_condition_C(complex, border_faces: Iterable[int] | None = None, use_memo: bool = True) -> bool:
    """Border-smoothness condition for a simplicial PCM of rank >= 2.

    Holds when every border face has, inside the border suborder, a strict
    neighborhood that is an (n-2)-surface. When ``border_faces`` is omitted
    the input is first verified to be an n-PCM (DomainError otherwise) and
    the border is computed from the definition; callers that have already
    established PCM-hood pass the border to skip both steps.

    The condition is sufficient for smoothness; it is not claimed necessary,
    so a negative answer alone does not settle non-smoothness.
    """
    from .simplicial import SimplicialComplex

    if not isinstance(complex, SimplicialComplex):
        raise DomainError("condition (C) applies to simplicial complexes")
    n = complex.dim
    if n < 2:
        raise DomainError("condition (C) applies to complexes of rank >= 2")
    poset = complex.face_poset()
    smemo = poset.memo("surface") if use_memo else None
    if border_faces is None:
        pmemo = poset.memo("pcm") if use_memo else None
        if pcm_rank_of_mask(poset, poset.full_mask, smemo, pmemo) != n:
            raise DomainError("condition (C) requires an n-PCM input")
        bmask = border_mask_of(poset, poset.full_mask, smemo)
    else:
        bmask = mask_of(as_view(poset), border_faces)
    theta = poset.theta_masks
    for h in iter_bits(bmask):
        if surface_rank_of_mask(poset, theta[h] & bmask, smemo) != n - 2:
            return False
    return True
