"""Multi-objective TSP instances, permutation tours and their evaluation."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

TOUR_DTYPE = np.int64


class InvalidTourError(ValueError):
    pass


def as_tour(order: Sequence[int] | np.ndarray, n: int | None = None) -> np.ndarray:
    """Return ``order`` as a tour array, checking it is a permutation of ``0..n-1``."""
    tour = np.asarray(order, dtype=TOUR_DTYPE)
    if tour.ndim != 1:
        raise InvalidTourError("a tour must be one-dimensional")
    if n is None:
        n = len(tour)
    if len(tour) != n:
        raise InvalidTourError(f"tour has {len(tour)} cities, expected {n}")
    if not is_valid_tour(tour, n):
        raise InvalidTourError("tour is not a permutation: some city is missing or repeated")
    return tour


def is_valid_tour(tour: np.ndarray, n: int) -> bool:
    if len(tour) != n:
        return False
    seen = np.zeros(n, dtype=bool)
    t = np.asarray(tour)
    if t.size and (t.min() < 0 or t.max() >= n):
        return False
    seen[t] = True
    return bool(seen.all())


@dataclass(frozen=True)
class MotspInstance:
    """``m`` symmetric distance matrices over the same ``n`` cities.

    The entrywise sum of all matrices is precomputed once; it is the cost
    used when local search scalarizes by summing the objectives.
    """

    matrices: tuple[np.ndarray, ...]
    names: tuple[str, ...] = ()
    summed: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        mats = tuple(np.ascontiguousarray(m, dtype=np.float64) for m in self.matrices)
        if not mats:
            raise ValueError("an instance needs at least one objective matrix")
        n = mats[0].shape[0]
        for k, mat in enumerate(mats):
            if mat.shape != (n, n):
                raise ValueError(f"matrix {k} has shape {mat.shape}, expected {(n, n)}")
            mat.setflags(write=False)
        total = np.sum(mats, axis=0) if len(mats) > 1 else mats[0]
        total.setflags(write=False)
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "summed", total)

    @property
    def n(self) -> int:
        return self.matrices[0].shape[0]

    @property
    def m(self) -> int:
        return len(self.matrices)


def tour_cost_under(tour: np.ndarray, d: np.ndarray) -> float:
    """Closed-tour length of ``tour`` under a single distance matrix."""
    if len(tour) != d.shape[0]:
        raise ValueError(f"tour has {len(tour)} cities but matrix is {d.shape[0]}x{d.shape[0]}")
    return float(d[tour, np.roll(tour, -1)].sum())


def evaluate(tour: np.ndarray, inst: MotspInstance) -> tuple[float, ...]:
    """Fitness vector: one closed-tour length per objective, all minimized."""
    if len(tour) != inst.n:
        raise ValueError(f"tour has {len(tour)} cities, instance has {inst.n}")
    nxt = np.roll(tour, -1)
    return tuple(float(d[tour, nxt].sum()) for d in inst.matrices)


def random_tour(n: int, rng: np.random.Generator) -> np.ndarray:
    if n < 3:
        raise ValueError(f"a tour needs at least 3 cities, got {n}")
    return rng.permutation(n).astype(TOUR_DTYPE, copy=False)


class Individual:
    """A tour and its cached fitness, plus the rank and crowding set by sorting.

    The only way to get an individual with a fitness is to build it from a
    tour and an instance, so the cached vector cannot go stale.
    """

    __slots__ = ("tour", "fitness", "rank", "crowding")

    def __init__(self, tour: np.ndarray, inst: MotspInstance):
        self.tour = as_tour(tour, inst.n)
        self.tour.setflags(write=False)
        self.fitness = evaluate(tour, inst)
        self.rank: int | None = None
        self.crowding: float | None = None

    def clone(self) -> Individual:
        """Unranked copy sharing the (read-only) tour and fitness."""
        other = object.__new__(Individual)
        other.tour = self.tour
        other.fitness = self.fitness
        other.rank = None
        other.crowding = None
        return other

    def __repr__(self) -> str:
        return f"Individual(fitness={self.fitness}, rank={self.rank}, crowding={self.crowding})"
