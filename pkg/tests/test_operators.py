import itertools
import math
import random
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_instance
from motsp.core import MotspInstance, is_valid_tour, random_tour, tour_cost_under
from motsp.operators import (SUMMED, Scalarization, SegmentBounds, TwoOptMove, apply_two_opt_move,
                             choose_scalarization, jumping_gene, modified_two_opt, move_delta,
                             order_crossover, random_bounds, two_opt_local_search)
from oracles import improving_moves, naive_tour_cost, random_int_matrix


def test_ox_worked_example():
    p1 = np.array([1, 2, 3, 4, 5, 6, 7, 8, 9])
    p2 = np.array([4, 5, 2, 1, 8, 7, 6, 9, 3])
    c1, c2 = order_crossover(p1, p2, SegmentBounds(3, 6))
    assert c1.tolist() == [2, 1, 8, 4, 5, 6, 7, 9, 3]
    # second child by the same hand procedure with the roles swapped
    assert c2.tolist() == [3, 4, 5, 1, 8, 7, 6, 9, 2]


def test_ox_identical_parents_and_full_segment():
    p = np.array([3, 0, 2, 1, 4])
    c1, c2 = order_crossover(p, p, SegmentBounds(1, 3))
    assert c1.tolist() == p.tolist() and c2.tolist() == p.tolist()
    q = np.array([4, 3, 2, 1, 0])
    c1, c2 = order_crossover(p, q, SegmentBounds(0, 4))
    assert c1.tolist() == p.tolist() and c2.tolist() == q.tolist()


def test_ox_length_mismatch():
    with pytest.raises(ValueError):
        order_crossover(np.arange(4), np.arange(5), SegmentBounds(0, 1))


def test_jg_single_point_identity():
    t = np.array([0, 1, 2, 3, 4, 5])
    assert jumping_gene(t, SegmentBounds(2, 2), np.random.default_rng(0)).tolist() == t.tolist()


def test_jg_keeps_outside_fixed():
    t = np.array([0, 1, 2, 3, 4, 5])
    rng = np.random.default_rng(1)
    for _ in range(50):
        out = jumping_gene(t, SegmentBounds(1, 3), rng)
        assert out[0] == 0 and out[4] == 4 and out[5] == 5
        assert sorted(out[1:4]) == [1, 2, 3]
    assert t.tolist() == [0, 1, 2, 3, 4, 5]


def test_jg_uniform_over_arrangements():
    t = np.array([0, 1, 2, 3, 4, 5])
    rng = np.random.default_rng(2024)
    counts = Counter(tuple(jumping_gene(t, SegmentBounds(1, 3), rng)[1:4]) for _ in range(6000))
    assert set(counts) == set(itertools.permutations([1, 2, 3]))
    for c in counts.values():
        assert abs(c / 6000 - 1 / 6) <= 0.05


def test_two_opt_move_uncrosses_square(square_matrix):
    t = np.array([0, 2, 1, 3])
    move = TwoOptMove(1, 2)
    out = apply_two_opt_move(t, move)
    assert out.tolist() == [0, 1, 2, 3]
    assert tour_cost_under(t, square_matrix) == pytest.approx(2 + 2 * math.sqrt(2))
    assert tour_cost_under(out, square_matrix) == pytest.approx(4.0)
    assert move_delta(t, move, square_matrix) == pytest.approx(4 - (2 + 2 * math.sqrt(2)))
    assert move_delta(t, move, square_matrix) == pytest.approx(-0.8284, abs=1e-4)


def test_two_opt_move_involution_and_full_reversal(square_matrix):
    t = np.array([3, 0, 2, 1])
    m = TwoOptMove(1, 3)
    assert apply_two_opt_move(apply_two_opt_move(t, m), m).tolist() == t.tolist()
    full = TwoOptMove(0, 3)
    assert tour_cost_under(apply_two_opt_move(t, full), square_matrix) == tour_cost_under(t, square_matrix)
    assert move_delta(t, full, square_matrix) == 0


def test_move_delta_zero_when_edges_coincide(square_matrix):
    # reversing positions 1..n-1 swaps (a,b),(c,a) for (a,c),(b,a)
    t = np.array([0, 1, 2, 3])
    assert move_delta(t, TwoOptMove(1, 3), square_matrix) == 0


def test_invalid_moves(square_matrix):
    t = np.array([0, 1, 2, 3])
    for i, j in [(2, 2), (3, 1), (-1, 2), (0, 4)]:
        with pytest.raises(ValueError):
            apply_two_opt_move(t, TwoOptMove(i, j))
    with pytest.raises(ValueError):
        move_delta(t, TwoOptMove(0, 1), np.zeros((5, 5)))


def test_move_delta_exact_integer():
    rnd = random.Random(17)
    for _ in range(300):
        n = rnd.randint(4, 30)
        d = np.array(random_int_matrix(n, rnd))
        order = list(range(n))
        rnd.shuffle(order)
        i = rnd.randrange(n - 1)
        j = rnd.randrange(i + 1, n)
        t = np.array(order)
        after = apply_two_opt_move(t, TwoOptMove(i, j))
        assert move_delta(t, TwoOptMove(i, j), d) == naive_tour_cost(after, d) - naive_tour_cost(order, d)


def test_local_search_square(square_matrix):
    out = two_opt_local_search(np.array([0, 2, 1, 3]), square_matrix, "to_local_optimum")
    assert tour_cost_under(out, square_matrix) == pytest.approx(4.0)


def test_local_search_fixed_point(square_matrix):
    t = np.array([1, 2, 3, 0])
    for mode in ("one_pass", "to_local_optimum"):
        assert two_opt_local_search(t, square_matrix, mode).tolist() == t.tolist()


def test_local_search_errors(square_matrix):
    with pytest.raises(ValueError):
        two_opt_local_search(np.arange(4), np.zeros((5, 5)))
    with pytest.raises(ValueError):
        two_opt_local_search(np.arange(4), square_matrix, "best")


def test_local_optimum_certificate_8_cities():
    rnd = random.Random(8)
    d = np.array(random_int_matrix(8, rnd))
    t = np.array(random_tour(8, np.random.default_rng(8)))
    out = two_opt_local_search(t, d, "to_local_optimum")
    assert naive_tour_cost(out, d) <= naive_tour_cost(t, d)
    assert improving_moves(list(out), d.tolist()) == []


def test_one_pass_is_a_single_sweep():
    # reference single sweep written out in Python
    rnd = random.Random(5)
    for _ in range(20):
        n = rnd.randint(5, 25)
        d = np.array(random_int_matrix(n, rnd))
        order = list(range(n))
        rnd.shuffle(order)
        ref = list(order)
        for i in range(1, n - 1):
            for j in range(i + 1, n):
                a, b, c, e = ref[i - 1], ref[i], ref[j], ref[(j + 1) % n]
                if d[a][c] + d[b][e] - d[a][b] - d[c][e] < 0:
                    ref[i:j + 1] = ref[i:j + 1][::-1]
        assert two_opt_local_search(np.array(order), d, "one_pass").tolist() == ref


def test_scalarization_m1(square_matrix):
    inst = MotspInstance((square_matrix,))
    rng = np.random.default_rng(0)
    for _ in range(20):
        assert np.array_equal(choose_scalarization(1, rng).matrix(inst), square_matrix)


def _freqs(m, draws, seed):
    rng = np.random.default_rng(seed)
    c = Counter(choose_scalarization(m, rng) for _ in range(draws))
    return {k: v / draws for k, v in c.items()}


def test_scalarization_m2_frequencies():
    f = _freqs(2, 100_000, 1)
    assert f[SUMMED] == pytest.approx(0.5, abs=0.01)
    assert f[Scalarization(0)] == pytest.approx(0.25, abs=0.01)
    assert f[Scalarization(1)] == pytest.approx(0.25, abs=0.01)


def test_scalarization_m3_frequencies():
    f = _freqs(3, 100_000, 2)
    assert f[SUMMED] == pytest.approx(0.5, abs=0.01)
    for k in range(3):
        assert f[Scalarization(k)] == pytest.approx(1 / 6, abs=0.01)


def test_scalarization_bad_index(square_instance):
    with pytest.raises(ValueError):
        Scalarization(1).matrix(square_instance)


def test_modified_equal_matrices():
    rng = np.random.default_rng(3)
    base = random_instance(15, 1, rng)
    inst = MotspInstance((base.matrices[0], base.matrices[0].copy()))
    for _ in range(10):
        t = random_tour(15, rng)
        plain = two_opt_local_search(t, base.matrices[0], "to_local_optimum")
        assert modified_two_opt(t, inst, "to_local_optimum", rng).tolist() == plain.tolist()


def test_modified_forced_summed():
    rng = np.random.default_rng(4)
    inst = random_instance(7, 2, rng)
    summed = inst.matrices[0] + inst.matrices[1]
    for _ in range(10):
        t = random_tour(7, rng)
        got = modified_two_opt(t, inst, "to_local_optimum", rng, choice=SUMMED)
        assert got.tolist() == two_opt_local_search(t, summed, "to_local_optimum").tolist()


def test_modified_forced_single_objective():
    rng = np.random.default_rng(6)
    inst = random_instance(30, 2, rng)
    for _ in range(10):
        t = random_tour(30, rng)
        out = modified_two_opt(t, inst, "one_pass", rng, choice=Scalarization(0))
        assert tour_cost_under(out, inst.matrices[0]) <= tour_cost_under(t, inst.matrices[0])


@given(st.integers(4, 100), st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_operators_preserve_permutation(n, seed):
    rng = np.random.default_rng(seed)
    inst = random_instance(n, 2, rng)
    p1, p2 = random_tour(n, rng), random_tour(n, rng)
    b = random_bounds(n, rng)
    c1, c2 = order_crossover(p1, p2, b)
    assert is_valid_tour(c1, n) and is_valid_tour(c2, n)
    assert np.array_equal(c1[b.p:b.q + 1], p1[b.p:b.q + 1])
    assert np.array_equal(c2[b.p:b.q + 1], p2[b.p:b.q + 1])
    j = jumping_gene(c1, random_bounds(n, rng), rng)
    assert is_valid_tour(j, n)
    out = modified_two_opt(j, inst, "one_pass", rng)
    assert is_valid_tour(out, n)


@given(st.integers(4, 40), st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_search_never_increases_drawn_cost(n, seed):
    rng = np.random.default_rng(seed)
    inst = random_instance(n, 2, rng)
    t = random_tour(n, rng)
    choice = choose_scalarization(2, rng)
    d = choice.matrix(inst)
    cost = tour_cost_under(t, d)
    for _ in range(4):
        t = two_opt_local_search(t, d, "one_pass")
        new = tour_cost_under(t, d)
        assert new <= cost
        cost = new
