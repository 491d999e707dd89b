"""Compiled inner loops for 2-opt. Tours are int64 arrays, matrices float64."""

import numba

# Deltas above this are treated as non-improving; with integer matrices any
# real improvement is at least 1.
IMPROVE_EPS = 1e-9


@numba.njit(cache=True)
def reverse_segment(tour, i, j):
    while i < j:
        tmp = tour[i]
        tour[i] = tour[j]
        tour[j] = tmp
        i += 1
        j -= 1


@numba.njit(cache=True)
def two_opt_sweeps(tour, d, max_sweeps):
    """First-improvement 2-opt on ``tour`` in place.

    Scans moves ``1 <= i < j <= n-1`` in lexicographic order, reversing
    ``tour[i..j]`` as soon as it shortens the tour. Stops after
    ``max_sweeps`` sweeps, or when a sweep changes nothing if
    ``max_sweeps < 0``. Returns the number of moves applied.
    """
    n = tour.shape[0]
    applied = 0
    sweeps = 0
    while max_sweeps < 0 or sweeps < max_sweeps:
        sweeps += 1
        improved = False
        for i in range(1, n - 1):
            for j in range(i + 1, n):
                a = tour[i - 1]
                b = tour[i]
                c = tour[j]
                e = tour[(j + 1) % n]
                delta = d[a, c] + d[b, e] - d[a, b] - d[c, e]
                if delta < -IMPROVE_EPS:
                    reverse_segment(tour, i, j)
                    applied += 1
                    improved = True
        if not improved:
            break
    return applied
