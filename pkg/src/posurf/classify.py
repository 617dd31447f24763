"""Dual-path classification.

``classify_recursive`` applies the recursive recognizers literally.
``classify_fast`` classifies a simplicial complex through the normal
pseudomanifold test instead: for rank >= 2, a pure complex is a discrete
surface exactly when it is a normal pseudomanifold with empty border, and
a PCM exactly when it is a normal pseudomanifold with nonempty border.
``cross_check`` runs both paths over a corpus and fails loudly on any
disagreement.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .border import (
    border_mask_of,
    check_condition_C,
    is_pcm,
    is_smooth_pcm,
)
from .errors import CrossCheckError, DomainError
from .poset import as_view, iter_bits, view_rank
from .simplicial import SimplicialComplex, write_facets
from .surfaces import is_k_surface

__all__ = [
    "Classification",
    "classify_recursive",
    "classify_fast",
    "classify_both",
    "CrossCheckRow",
    "CrossCheckReport",
    "cross_check",
]


@dataclass
class Classification:
    """Structured verdict for one instance.

    Fields are None where the corresponding check was not evaluated (for
    example, pseudomanifold tests on non-simplicial posets, or the border
    of a non-normal complex on the fast path). ``timings`` holds per-check
    wall durations in seconds.
    """

    rank: int
    is_surface: bool | None = None
    is_pcm: bool | None = None
    is_smooth_pcm: bool | None = None
    is_pseudomanifold: bool | None = None
    is_normal_pseudomanifold: bool | None = None
    border_empty: bool | None = None
    path: str = "recursive"
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def category(self) -> str:
        """'empty', 'surface', 'pcm' or 'neither': the top-level verdict."""
        if self.rank < 0:
            return "empty"
        if self.is_surface:
            return "surface"
        if self.is_pcm:
            return "pcm"
        return "neither"

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "is_surface": self.is_surface,
            "is_pcm": self.is_pcm,
            "is_smooth_pcm": self.is_smooth_pcm,
            "is_pseudomanifold": self.is_pseudomanifold,
            "is_normal_pseudomanifold": self.is_normal_pseudomanifold,
            "border_empty": self.border_empty,
            "category": self.category,
            "path": self.path,
            "timings_ms": {k: round(v * 1000.0, 3) for k, v in self.timings.items()},
        }


def _timed(timings: dict, name: str, fn):
    t0 = time.perf_counter()
    out = fn()
    timings[name] = time.perf_counter() - t0
    return out


def classify_recursive(obj, use_memo: bool = True) -> Classification:
    """Classify by the recursive definitions.

    Accepts a SimplicialComplex (pseudomanifold checks included) or a
    Poset/SuborderView (poset-level recognizers only).
    """
    complex_ = obj if isinstance(obj, SimplicialComplex) else None
    view = as_view(complex_.face_poset() if complex_ is not None else obj)
    timings: dict[str, float] = {}
    sv = _timed(timings, "surface", lambda: is_k_surface(view, use_memo))
    pv = _timed(timings, "pcm", lambda: is_pcm(view, use_memo))
    mv = _timed(timings, "smooth_pcm", lambda: is_smooth_pcm(view, use_memo))
    r = view_rank(view.ambient, view.mask, use_memo)
    if r < 0:
        border_empty = True
    else:
        memo = view.ambient.memo("surface") if use_memo else None
        border_empty = _timed(
            timings, "border", lambda: border_mask_of(view.ambient, view.mask, memo) == 0
        )
    cls = Classification(
        rank=r,
        is_surface=sv.is_surface,
        is_pcm=pv.holds,
        is_smooth_pcm=mv.holds,
        border_empty=border_empty,
        path="recursive",
        timings=timings,
    )
    if complex_ is not None:
        cls.is_pseudomanifold = _timed(timings, "pseudomanifold", complex_.is_pseudomanifold)
        cls.is_normal_pseudomanifold = _timed(
            timings, "normal_pseudomanifold", complex_.is_normal_pseudomanifold
        )
    return cls


def classify_fast(k, use_memo: bool = True) -> Classification:
    """Classify a simplicial complex through the normal pseudomanifold test.

    For rank >= 2: not a normal pseudomanifold means neither surface nor
    PCM; a normal pseudomanifold is a surface when its border is empty
    (every ridge under two top faces) and a PCM otherwise. Smoothness of a
    PCM is decided by the border condition when it holds; since that
    condition is only known sufficient, a negative is confirmed by the
    recursive smoothness check before reporting. Ranks below 2 fall back
    to the recursive path wholesale.
    """
    if not isinstance(k, SimplicialComplex):
        raise DomainError("fast classification requires a simplicial complex")
    n = k.dim
    if n <= 1:
        cls = classify_recursive(k, use_memo)
        cls.path = "fast"
        return cls
    timings: dict[str, float] = {}
    pm = _timed(timings, "pseudomanifold", k.is_pseudomanifold)
    normal = pm and _timed(timings, "normal_pseudomanifold", k.is_normal_pseudomanifold)
    if not normal:
        return Classification(
            rank=n,
            is_surface=False,
            is_pcm=False,
            is_smooth_pcm=False,
            is_pseudomanifold=pm,
            is_normal_pseudomanifold=False,
            border_empty=None,
            path="fast",
            timings=timings,
        )
    t0 = time.perf_counter()
    boundary_ridges = [r for r, c in k.ridge_facet_counts().items() if c == 1]
    border_empty = not boundary_ridges
    timings["border"] = time.perf_counter() - t0
    smooth: bool | None = False
    if border_empty:
        surface, pcm = True, False
    else:
        surface, pcm = False, True
        # The border of a simplicial PCM is the inclusion closure of its
        # boundary ridges, so it can be assembled without rank recursion.
        t0 = time.perf_counter()
        poset = k.face_poset()
        bmask = 0
        for ridge in boundary_ridges:
            fid = k.face_id(ridge)
            bmask |= poset.alpha_masks[fid] | (1 << fid)
        border_faces = tuple(iter_bits(bmask))
        cond = check_condition_C(k, border_faces=border_faces, use_memo=use_memo)
        timings["condition_C"] = time.perf_counter() - t0
        if cond:
            smooth = True
        else:
            smooth = _timed(
                timings, "smooth_pcm_fallback", lambda: is_smooth_pcm(poset, use_memo).holds
            )
    return Classification(
        rank=n,
        is_surface=surface,
        is_pcm=pcm,
        is_smooth_pcm=smooth,
        is_pseudomanifold=True,
        is_normal_pseudomanifold=True,
        border_empty=border_empty,
        path="fast",
        timings=timings,
    )


def _disagreements(fast: Classification, recursive: Classification) -> list[str]:
    out = []
    if fast.category != recursive.category:
        out.append(f"category: fast={fast.category} recursive={recursive.category}")
    if fast.rank != recursive.rank:
        out.append(f"rank: fast={fast.rank} recursive={recursive.rank}")
    for name in (
        "is_surface",
        "is_pcm",
        "is_smooth_pcm",
        "is_pseudomanifold",
        "is_normal_pseudomanifold",
        "border_empty",
    ):
        a = getattr(fast, name)
        b = getattr(recursive, name)
        if a is not None and b is not None and a != b:
            out.append(f"{name}: fast={a} recursive={b}")
    return out


def classify_both(k, use_memo: bool = True) -> Classification:
    """Run both paths on one complex; any disagreement raises, never reconciles."""
    fast = classify_fast(k, use_memo)
    recursive = classify_recursive(k, use_memo)
    issues = _disagreements(fast, recursive)
    if issues:
        raise CrossCheckError("fast/recursive disagreement: " + "; ".join(issues))
    merged = Classification(
        rank=recursive.rank,
        is_surface=recursive.is_surface,
        is_pcm=recursive.is_pcm,
        is_smooth_pcm=recursive.is_smooth_pcm,
        is_pseudomanifold=recursive.is_pseudomanifold,
        is_normal_pseudomanifold=recursive.is_normal_pseudomanifold,
        border_empty=recursive.border_empty,
        path="both",
    )
    merged.timings = {f"fast.{n}": v for n, v in fast.timings.items()}
    merged.timings.update({f"recursive.{n}": v for n, v in recursive.timings.items()})
    return merged


@dataclass
class CrossCheckRow:
    name: str
    faces: int
    category: str
    fast_s: float
    recursive_s: float

    @property
    def speedup(self) -> float:
        return self.recursive_s / self.fast_s if self.fast_s > 0 else float("inf")


@dataclass
class CrossCheckReport:
    rows: list[CrossCheckRow]

    @property
    def category_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for row in self.rows:
            counts[row.category] = counts.get(row.category, 0) + 1
        return dict(sorted(counts.items()))

    def table(self) -> str:
        header = f"{'instance':<28} {'faces':>6} {'category':>9} {'fast ms':>9} {'recursive ms':>13} {'speedup':>8}"
        lines = [header, "-" * len(header)]
        for r in self.rows:
            lines.append(
                f"{r.name:<28} {r.faces:>6} {r.category:>9} "
                f"{r.fast_s * 1000:>9.2f} {r.recursive_s * 1000:>13.2f} {r.speedup:>8.2f}"
            )
        mix = ", ".join(f"{k}={v}" for k, v in self.category_counts.items())
        lines.append(f"instance mix: {mix}")
        return "\n".join(lines)


def _fresh(k: SimplicialComplex) -> SimplicialComplex:
    # Rebuild so neither path warms the other's caches during timing.
    return SimplicialComplex.from_facets(k.facets) if len(k) else SimplicialComplex(())


def cross_check(
    instances: Iterable[tuple[str, SimplicialComplex]],
    dump_dir: str | Path | None = None,
) -> CrossCheckReport:
    """Run both classifiers over named complexes and compare.

    On any disagreement the offending instance is written out as a facet
    file for triage and a CrossCheckError is raised.
    """
    rows = []
    for name, k in instances:
        t0 = time.perf_counter()
        fast = classify_fast(_fresh(k))
        t_fast = time.perf_counter() - t0
        t0 = time.perf_counter()
        recursive = classify_recursive(_fresh(k))
        t_rec = time.perf_counter() - t0
        issues = _disagreements(fast, recursive)
        if issues:
            safe = re.sub(r"[^A-Za-z0-9._-]", "-", name)
            target = Path(dump_dir or ".") / f"crosscheck-{safe}.facets"
            target.write_text(write_facets(k))
            raise CrossCheckError(f"{name}: " + "; ".join(issues), artifact=str(target))
        rows.append(CrossCheckRow(name, len(k), recursive.category, t_fast, t_rec))
    return CrossCheckReport(rows)
