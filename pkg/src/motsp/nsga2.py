"""Elitist NSGA-II generation loop over tour individuals.

Populations are plain lists of :class:`~motsp.core.Individual`. Sorting sets
``rank`` (1 = best front) and ``crowding`` on the individuals in place.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from .config import RunConfig
from .core import Individual, MotspInstance, random_tour
from .operators import (SUMMED, choose_scalarization, jumping_gene, order_crossover, random_bounds,
                        single_objective_choice, two_opt_local_search)


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    if len(a) != len(b):
        raise ValueError(f"fitness vectors differ in length: {len(a)} vs {len(b)}")
    strict = False
    for x, y in zip(a, b):
        if x > y:
            return False
        if x < y:
            strict = True
    return strict


def dominance_matrix(F: np.ndarray) -> np.ndarray:
    """``D[i, j]`` is true when row ``i`` of ``F`` dominates row ``j``."""
    le = (F[:, None, :] <= F[None, :, :]).all(axis=2)
    lt = (F[:, None, :] < F[None, :, :]).any(axis=2)
    return le & lt


def nondominated_sort_indices(F: np.ndarray) -> list[np.ndarray]:
    """Front membership as index arrays, best front first, indices ascending."""
    n = len(F)
    if n == 0:
        return []
    dom = dominance_matrix(np.asarray(F, dtype=np.float64))
    remaining = dom.sum(axis=0)
    assigned = np.zeros(n, dtype=bool)
    fronts = []
    current = np.flatnonzero(remaining == 0)
    while current.size:
        fronts.append(current)
        assigned[current] = True
        remaining = remaining - dom[current].sum(axis=0)
        current = np.flatnonzero((remaining == 0) & ~assigned)
    return fronts


def fast_nondominated_sort(pop: Sequence[Individual]) -> list[list[Individual]]:
    F = np.array([ind.fitness for ind in pop], dtype=np.float64)
    fronts = []
    for rank, idx in enumerate(nondominated_sort_indices(F), start=1):
        front = [pop[i] for i in idx]
        for ind in front:
            ind.rank = rank
        fronts.append(front)
    return fronts


def crowding_distances(F: np.ndarray) -> np.ndarray:
    n, m = F.shape
    dist = np.zeros(n)
    if n <= 2:
        dist[:] = math.inf
        return dist
    for k in range(m):
        order = np.argsort(F[:, k], kind="stable")
        vals = F[order, k]
        span = vals[-1] - vals[0]
        dist[order[0]] = dist[order[-1]] = math.inf
        if span > 0:
            dist[order[1:-1]] += (vals[2:] - vals[:-2]) / span
    return dist


def crowding_distance(front: Sequence[Individual]) -> list[float]:
    """Crowding distance of each member (also stored on the members)."""
    if not front:
        return []
    dist = crowding_distances(np.array([ind.fitness for ind in front], dtype=np.float64))
    for ind, c in zip(front, dist):
        ind.crowding = float(c)
    return [float(c) for c in dist]


def assign_rank_and_crowding(pop: Sequence[Individual]) -> list[list[Individual]]:
    fronts = fast_nondominated_sort(pop)
    for front in fronts:
        crowding_distance(front)
    return fronts


def crowded_compare(a: Individual, b: Individual) -> Individual:
    """Lower rank wins, then larger crowding; a full tie goes to ``a``."""
    if a.rank is None or b.rank is None or a.crowding is None or b.crowding is None:
        raise ValueError("crowded comparison needs rank and crowding on both individuals")
    if a.rank != b.rank:
        return a if a.rank < b.rank else b
    if b.crowding > a.crowding:
        return b
    return a


def binary_tournament(pop: Sequence[Individual], rng: np.random.Generator) -> Individual:
    i, j = rng.integers(len(pop), size=2)
    return crowded_compare(pop[i], pop[j])


def environmental_selection(P: Sequence[Individual], Q: Sequence[Individual],
                            size: int | None = None) -> list[Individual]:
    """Best ``size`` (default ``len(P)``) of ``P + Q`` by front, then crowding.

    The returned individuals carry rank and crowding recomputed on the new
    population.
    """
    size = len(P) if size is None else size
    union = list(P) + list(Q)
    chosen: list[Individual] = []
    for front in fast_nondominated_sort(union):
        if len(chosen) + len(front) <= size:
            chosen.extend(front)
            if len(chosen) == size:
                break
            continue
        dist = crowding_distance(front)
        order = sorted(range(len(front)), key=lambda i: -dist[i])
        chosen.extend(front[i] for i in order[:size - len(chosen)])
        break
    assign_rank_and_crowding(chosen)
    return chosen


def local_search(tour: np.ndarray, inst: MotspInstance, cfg: RunConfig,
                 rng: np.random.Generator) -> np.ndarray:
    variant = cfg.local_search_variant
    if variant == "off" or rng.random() >= cfg.p_local_search:
        return tour
    if variant == "modified":
        choice = choose_scalarization(inst.m, rng)
    elif variant == "method_a_only":
        choice = single_objective_choice(inst.m, rng)
    else:
        choice = SUMMED
    return two_opt_local_search(tour, choice.matrix(inst), cfg.local_search_mode)


def make_offspring(P: Sequence[Individual], cfg: RunConfig, inst: MotspInstance,
                   rng: np.random.Generator) -> list[Individual]:
    N = len(P)
    n = inst.n
    Q: list[Individual] = []
    while len(Q) < N:
        a = binary_tournament(P, rng)
        b = binary_tournament(P, rng)
        if rng.random() < cfg.p_crossover:
            children = order_crossover(a.tour, b.tour, random_bounds(n, rng))
            varied = [True, True]
        else:
            children = (a.tour, b.tour)
            varied = [False, False]
        for c, (tour, changed) in enumerate(zip(children, varied)):
            if len(Q) == N:
                break
            if rng.random() < cfg.p_jg:
                tour = jumping_gene(tour, random_bounds(n, rng), rng)
                changed = True
            improved = local_search(tour, inst, cfg, rng)
            if improved is not tour:
                tour, changed = improved, True
            Q.append(Individual(tour, inst) if changed else (a, b)[c].clone())
    return Q


def initial_population(N: int, inst: MotspInstance, rng: np.random.Generator) -> list[Individual]:
    pop = [Individual(random_tour(inst.n, rng), inst) for _ in range(N)]
    assign_rank_and_crowding(pop)
    return pop


def run_generation(P: Sequence[Individual], cfg: RunConfig, inst: MotspInstance,
                   rng: np.random.Generator) -> list[Individual]:
    Q = make_offspring(P, cfg, inst, rng)
    return environmental_selection(P, Q)
