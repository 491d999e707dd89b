"""Variation operators on permutation tours.

Order crossover, the segment-shuffling Jumping Gene mutation, 2-opt local
search, and the multi-objective 2-opt that picks a scalarization at random
before each search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import TOUR_DTYPE, MotspInstance

LS_MODES = ("one_pass", "to_local_optimum")


@dataclass(frozen=True)
class SegmentBounds:
    p: int
    q: int

    def check(self, n: int) -> None:
        if not 0 <= self.p <= self.q < n:
            raise ValueError(f"segment {self.p}..{self.q} invalid for length {n}")


@dataclass(frozen=True)
class TwoOptMove:
    """Reversal of tour positions ``i..j`` (``i < j``)."""

    i: int
    j: int


@dataclass(frozen=True)
class Scalarization:
    """Which cost 2-opt minimizes: one objective ``k``, or the sum of all (``k is None``)."""

    k: int | None = None

    @property
    def summed(self) -> bool:
        return self.k is None

    def matrix(self, inst: MotspInstance) -> np.ndarray:
        if self.k is None:
            return inst.summed
        if not 0 <= self.k < inst.m:
            raise ValueError(f"objective {self.k} out of range for m={inst.m}")
        return inst.matrices[self.k]


SUMMED = Scalarization(None)


def random_bounds(n: int, rng: np.random.Generator) -> SegmentBounds:
    p, q = sorted(int(x) for x in rng.integers(0, n, size=2))
    return SegmentBounds(p, q)


def _ox_child(keep: np.ndarray, donor: np.ndarray, p: int, q: int) -> np.ndarray:
    n = len(keep)
    seg = keep[p:q + 1]
    rest = np.roll(donor, -(q + 1))
    rest = rest[~np.isin(rest, seg)]
    child = np.empty_like(keep)
    child[p:q + 1] = seg
    child[np.arange(q + 1, q + 1 + len(rest)) % n] = rest
    return child


def order_crossover(p1: np.ndarray, p2: np.ndarray, bounds: SegmentBounds) -> tuple[np.ndarray, np.ndarray]:
    """OX: each child keeps its own parent's ``p..q`` segment in place and
    takes the remaining cities in the other parent's order, starting just
    after ``q`` and wrapping around.
    """
    if len(p1) != len(p2):
        raise ValueError(f"parents differ in length: {len(p1)} vs {len(p2)}")
    bounds.check(len(p1))
    return _ox_child(p1, p2, bounds.p, bounds.q), _ox_child(p2, p1, bounds.p, bounds.q)


def jumping_gene(tour: np.ndarray, bounds: SegmentBounds, rng: np.random.Generator) -> np.ndarray:
    # The segment's own cities are reshuffled; refilling it with fresh random
    # values would break the permutation.
    bounds.check(len(tour))
    out = np.array(tour, dtype=TOUR_DTYPE)
    if bounds.q > bounds.p:
        out[bounds.p:bounds.q + 1] = rng.permutation(out[bounds.p:bounds.q + 1])
    return out


def _check_move(move: TwoOptMove, n: int) -> None:
    if not 0 <= move.i < move.j < n:
        raise ValueError(f"2-opt move ({move.i}, {move.j}) invalid for tour length {n}")


def apply_two_opt_move(tour: np.ndarray, move: TwoOptMove) -> np.ndarray:
    _check_move(move, len(tour))
    out = np.array(tour, dtype=TOUR_DTYPE)
    out[move.i:move.j + 1] = out[move.i:move.j + 1][::-1].copy()
    return out


def move_delta(tour: np.ndarray, move: TwoOptMove, d: np.ndarray) -> float:
    """Change in closed-tour cost caused by ``move``; negative means shorter.

    With ``a, b`` the cities at positions ``i-1, i`` and ``c, e`` those at
    ``j, j+1`` (cyclic), the move swaps edges ``(a,b), (c,e)`` for
    ``(a,c), (b,e)``.
    """
    n = len(tour)
    if d.shape != (n, n):
        raise ValueError(f"matrix shape {d.shape} does not match tour length {n}")
    _check_move(move, n)
    if move.i == 0 and move.j == n - 1:
        # whole-tour reversal: the "two" deleted edges coincide
        return 0.0
    a, b = tour[move.i - 1], tour[move.i]
    c, e = tour[move.j], tour[(move.j + 1) % n]
    return float(d[a, c] + d[b, e] - d[a, b] - d[c, e])


def two_opt_local_search(tour: np.ndarray, d: np.ndarray, mode: str = "to_local_optimum") -> np.ndarray:
    """First-improvement 2-opt. ``one_pass`` does a single sweep over all
    moves; ``to_local_optimum`` sweeps until nothing improves.
    """
    n = len(tour)
    if d.shape != (n, n):
        raise ValueError(f"matrix shape {d.shape} does not match tour length {n}")
    if mode not in LS_MODES:
        raise ValueError(f"unknown local search mode {mode!r}")
    out = np.array(tour, dtype=TOUR_DTYPE)
    _kernels.two_opt_sweeps(out, d, 1 if mode == "one_pass" else -1)
    return out


def choose_scalarization(m: int, rng: np.random.Generator) -> Scalarization:
    """Half the time the summed cost, otherwise one objective drawn uniformly."""
    if m < 1:
        raise ValueError("need at least one objective")
    if rng.random() < 0.5:
        return SUMMED
    return Scalarization(int(rng.integers(m)))


def single_objective_choice(m: int, rng: np.random.Generator) -> Scalarization:
    return Scalarization(int(rng.integers(m)))


def modified_two_opt(tour: np.ndarray, inst: MotspInstance, mode: str, rng: np.random.Generator,
                     choice: Scalarization | None = None) -> np.ndarray:
    """2-opt under a randomly drawn scalarization (pass ``choice`` to force one)."""
    if choice is None:
        choice = choose_scalarization(inst.m, rng)
    return two_opt_local_search(tour, choice.matrix(inst), mode)
