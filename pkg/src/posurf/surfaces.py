"""The recursive discrete-surface recognizer and the coherence check.

Both operate on suborder views and memoize per view; the memo key is the
member bitmask, scoped to the ambient poset. The recursion is naturally
depth-bounded: a strict neighborhood always has rank strictly below the
view it was taken in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poset import (
    Poset,
    SuborderView,
    as_view,
    is_connected_mask,
    iter_bits,
    view_rank,
)

__all__ = ["SurfaceVerdict", "is_k_surface", "is_coherent", "NOT_SURFACE", "surface_rank_of_mask"]

NOT_SURFACE = -2


@dataclass(frozen=True)
class SurfaceVerdict:
    """Outcome of the surface recognizer on one suborder view.

    ``rank`` is the k for which the view is a k-surface (possibly -1 for
    the empty order) and is absent when ``is_surface`` is false. ``mask``
    is the view identity the verdict was memoized under.
    """

    is_surface: bool
    rank: int | None
    mask: int


def surface_rank_of_mask(poset: Poset, mask: int, memo: dict | None) -> int:
    """Surface rank of a view, or NOT_SURFACE.

    Literal recursion over the definition: the empty order is the
    (-1)-surface; exactly two mutually non-adjacent faces form the
    0-surface; otherwise the view must be connected with every strict
    neighborhood a (k-1)-surface, and k must equal the view's rank.
    """
    if memo is not None:
        got = memo.get(mask)
        if got is not None:
            return got
    theta = poset.theta_masks
    count = mask.bit_count()
    if count == 0:
        result = -1
    elif count == 1:
        result = NOT_SURFACE
    elif count == 2:
        low = (mask & -mask).bit_length() - 1
        result = 0 if not theta[low] & mask else NOT_SURFACE
    elif not is_connected_mask(poset, mask):
        result = NOT_SURFACE
    else:
        consensus = None
        ok = True
        for h in iter_bits(mask):
            child = surface_rank_of_mask(poset, theta[h] & mask, memo)
            if child < 0:
                ok = False
                break
            if consensus is None:
                consensus = child
            elif child != consensus:
                ok = False
                break
        if ok and view_rank(poset, mask, memo is not None) == consensus + 1:
            result = consensus + 1
        else:
            result = NOT_SURFACE
    if memo is not None:
        memo[mask] = result
    return result


def is_k_surface(obj: "Poset | SuborderView", use_memo: bool = True) -> SurfaceVerdict:
    """Run the recursive surface recognizer on a poset or suborder view."""
    view = as_view(obj)
    memo = view.ambient.memo("surface") if use_memo else None
    r = surface_rank_of_mask(view.ambient, view.mask, memo)
    if r == NOT_SURFACE:
        return SurfaceVerdict(False, None, view.mask)
    return SurfaceVerdict(True, r, view.mask)


def _coherent_mask(poset: Poset, mask: int, memo: dict | None) -> bool:
    if memo is not None:
        got = memo.get(mask)
        if got is not None:
            return got
    if mask == 0:
        result = True
    else:
        n = view_rank(poset, mask, memo is not None)
        theta = poset.theta_masks
        result = True
        for h in iter_bits(mask):
            t = theta[h] & mask
            if view_rank(poset, t, memo is not None) != n - 1 or not _coherent_mask(poset, t, memo):
                result = False
                break
    if memo is not None:
        memo[mask] = result
    return result


def is_coherent(obj: "Poset | SuborderView", use_memo: bool = True) -> bool:
    """True when every strict neighborhood drops rank by exactly one, recursively."""
    view = as_view(obj)
    memo = view.ambient.memo("coherent") if use_memo else None
    return _coherent_mask(view.ambient, view.mask, memo)
