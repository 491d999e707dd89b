"""Pareto-front quality indicators: 2-D hypervolume, Schott spacing, extent."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import asdict, dataclass

import numpy as np

from .nsga2 import dominance_matrix


def _as_points(points) -> np.ndarray:
    if len(points) == 0:
        return np.zeros((0, 0))
    lengths = {len(p) for p in points}
    if len(lengths) != 1:
        raise ValueError(f"points have mixed lengths {sorted(lengths)}")
    return np.asarray(points, dtype=np.float64)


def nondominated_filter(points) -> list[tuple[float, ...]]:
    """Distinct points not dominated by any other, in first-seen order."""
    F = _as_points(points)
    if F.size == 0:
        return []
    keep = ~dominance_matrix(F).any(axis=0)
    out: list[tuple[float, ...]] = []
    seen = set()
    for row, k in zip(F, keep):
        t = tuple(float(v) for v in row)
        if k and t not in seen:
            seen.add(t)
            out.append(t)
    return out


def hypervolume_2d(front, ref: Sequence[float]) -> float:
    """Area dominated by ``front`` and bounded above by ``ref`` (minimization).

    Points are swept in increasing first objective and each one that lowers
    the running second-objective minimum adds a horizontal slab. Points not
    strictly better than ``ref`` in both objectives are ignored.
    """
    F = _as_points(front)
    if len(ref) != 2 or (F.size and F.shape[1] != 2):
        raise ValueError("hypervolume_2d is only defined for two objectives")
    if F.size == 0:
        return 0.0
    F = F[(F[:, 0] < ref[0]) & (F[:, 1] < ref[1])]
    if not len(F):
        return 0.0
    F = F[np.lexsort((F[:, 1], F[:, 0]))]
    area = 0.0
    prev_f2 = ref[1]
    for f1, f2 in F:
        if f2 < prev_f2:
            area += (ref[0] - f1) * (prev_f2 - f2)
            prev_f2 = f2
    return float(area)


def schott_spacing(front) -> float:
    """Schott's spacing with L1 nearest-neighbour distances; 0 is perfectly even."""
    F = _as_points(front)
    n = len(F)
    if n < 2:
        raise ValueError("spacing needs at least two points")
    if n == 2:
        return 0.0
    l1 = np.abs(F[:, None, :] - F[None, :, :]).sum(axis=2)
    np.fill_diagonal(l1, math.inf)
    d = l1.min(axis=1)
    return float(math.sqrt(((d.mean() - d) ** 2).sum() / (n - 1)))


@dataclass(frozen=True)
class FrontSummary:
    size: int
    hypervolume: float | None
    spacing: float
    extent: tuple[tuple[float, float], ...]

    def widths(self) -> tuple[float, ...]:
        return tuple(hi - lo for lo, hi in self.extent)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["extent"] = [list(e) for e in self.extent]
        return d


def front_summary(points, ref: Sequence[float] | None = None) -> FrontSummary:
    """Summary of the non-dominated subset of ``points``.

    Hypervolume is only reported for two objectives with a reference point.
    """
    if len(points) == 0:
        raise ValueError("cannot summarize an empty point set")
    front = nondominated_filter(points)
    F = np.asarray(front, dtype=np.float64)
    hv = hypervolume_2d(front, ref) if ref is not None and F.shape[1] == 2 else None
    spacing = schott_spacing(front) if len(front) > 2 else 0.0
    extent = tuple((float(lo), float(hi)) for lo, hi in zip(F.min(axis=0), F.max(axis=0)))
    return FrontSummary(size=len(front), hypervolume=hv, spacing=spacing, extent=extent)
