"""Walk counts, eigenvalue estimates, and the degree/embedding bounds."""

import math
import random

import numpy as np
import pytest

from planetrees import (
    LimitError,
    closed_walk_count,
    count_trees,
    enumerate_closed_walks,
    enumerate_decreasing_trees,
    lambda1_power_iteration,
    lambda1_trace_estimate,
    leaning_eigen_bound,
    leaning_lambda1,
    leaning_tree,
    max_degree,
    parse_tree,
    random_plane_tree,
    stevanovic_bounds,
    uh_min,
    walk_count_table,
    walk_growth_estimate,
)
from planetrees.spectral import adjacency_lists, leaning_lambda1_bracket

PHI = (1.0 + math.sqrt(5.0)) / 2.0


def dense_eigenvalue(t):
    """Independent oracle: full symmetric eigendecomposition."""
    adj = adjacency_lists(t)
    size = len(adj)
    matrix = np.zeros((size, size))
    for v, nbrs in enumerate(adj):
        for w in nbrs:
            matrix[v, w] = 1.0
    return float(np.linalg.eigvalsh(matrix)[-1])


def test_walk_count_trivial_lengths():
    t = leaning_tree(3)
    assert closed_walk_count(t, 0) == 1
    for k in range(1, 7):
        assert closed_walk_count(leaning_tree(k), 2) == k  # root degree


def test_walk_count_hand_value():
    # fourth power of the path adjacency, diagonal entry at an interior vertex
    assert closed_walk_count(leaning_tree(2), 4, 0) == 5


def test_walk_counts_match_enumeration():
    for k in range(1, 5):
        for n in range(0, 5):
            exact = closed_walk_count(leaning_tree(k), 2 * n)
            assert exact == len(enumerate_closed_walks(k, 2 * n))


def test_walk_count_table_consistency():
    t = leaning_tree(4)
    table = walk_count_table(t, 10)
    assert table[0] == 1
    assert table[2] == 4
    for length, value in table.items():
        assert value == closed_walk_count(t, length)
    # appending a down-up pair injects, so counts never decrease
    values = [table[m] for m in sorted(table)]
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_walk_count_rejects_odd_and_budget():
    with pytest.raises(ValueError):
        closed_walk_count(leaning_tree(2), 3)
    with pytest.raises(LimitError):
        closed_walk_count(leaning_tree(10), 40, max_work=100)


def test_path_walk_counts_are_fibonacci():
    # the 4-vertex path: interior diagonal of A^(2n) walks the odd Fibonacci line
    t = leaning_tree(2)
    assert closed_walk_count(t, 20, 0) == 10946
    assert closed_walk_count(t, 20, 2) == 4181  # a leaf vertex


def test_power_iteration_anchors():
    assert lambda1_power_iteration(parse_tree("1")) == 0.0
    assert abs(lambda1_power_iteration(leaning_tree(1)) - 1.0) < 1e-9
    assert abs(lambda1_power_iteration(leaning_tree(2)) - PHI) < 1e-9


def test_power_iteration_star():
    for leaves in (4, 9):
        star = parse_tree("2(%s)" % " ".join(["1"] * leaves))
        assert abs(lambda1_power_iteration(star) - math.sqrt(leaves)) < 1e-8


def test_power_iteration_matches_dense_oracle():
    rng = random.Random(4242)
    for _ in range(30):
        t = random_plane_tree(rng.randint(2, 25), rng)
        assert abs(lambda1_power_iteration(t) - dense_eigenvalue(t)) < 1e-8


def test_trace_estimate_single_edge():
    assert lambda1_trace_estimate(leaning_tree(1), 7) == (1.0, 1.0)


def test_trace_estimate_path():
    low, high = lambda1_trace_estimate(leaning_tree(2), 10)
    assert low == pytest.approx(4181 ** (1 / 20), rel=1e-12)
    assert high == pytest.approx(10946 ** (1 / 20), rel=1e-12)
    # the max-based estimate is already within 2%; the min-based one is
    # about 6% low at this length and only converges from below
    assert abs(high - PHI) / PHI < 0.02
    assert low < high <= PHI + 1e-12


def test_trace_estimate_tightens_with_length():
    t = leaning_tree(5)
    lam = lambda1_power_iteration(t)
    previous = None
    for half in (4, 8, 12, 16):
        _, high = lambda1_trace_estimate(t, half)
        assert high <= lam + 1e-9
        if previous is not None:
            assert high >= previous - 1e-9  # max-based estimates increase toward the limit
        previous = high


def test_trace_estimate_order6():
    t = leaning_tree(6)
    _, high = lambda1_trace_estimate(t, 20)
    lam = lambda1_power_iteration(t)
    assert abs(high - lam) / lam < 0.10


def test_root_growth_estimate_close_at_length_40():
    for k in (2, 6, 10):
        t = leaning_tree(k)
        est = walk_growth_estimate(t, 20)
        lam = lambda1_power_iteration(t)
        assert abs(est - lam) / lam < 0.05


def test_stevanovic_values():
    low, high = stevanovic_bounds(2)
    assert low == pytest.approx(math.sqrt(2))
    assert high == 2.0
    assert stevanovic_bounds(1) == (1.0, 0.0)  # degenerate, vacuous upper formula
    with pytest.raises(ValueError):
        stevanovic_bounds(0)


def test_sandwich_on_leaning_and_random_trees():
    rng = random.Random(7)
    cases = [leaning_tree(k) for k in range(2, 13)]
    cases += [random_plane_tree(rng.randint(3, 25), rng) for _ in range(20)]
    for t in cases:
        delta = max_degree(t)
        if delta < 2:
            continue
        low, high = stevanovic_bounds(delta)
        lam = lambda1_power_iteration(t)
        assert low - 1e-8 <= lam <= high + 1e-8


def test_leaning_bisection_matches_power_iteration():
    for k in range(0, 11):
        by_bisect = leaning_lambda1(k)
        by_power = lambda1_power_iteration(leaning_tree(k)) if k > 0 else 0.0
        assert abs(by_bisect - by_power) < 1e-8
    lo, hi = leaning_lambda1_bracket(2, 1e-12)
    assert lo <= PHI <= hi


def test_leaning_bisection_scales_to_large_orders():
    # far beyond any explicit 2^k-vertex tree
    lam = leaning_lambda1(200)
    assert 0.5 <= lam * lam / 400 <= 1.1


def test_leaning_eigen_bound_values():
    assert abs(leaning_eigen_bound(2) - 1.0) < 1e-9
    assert abs(leaning_eigen_bound(3) - PHI) < 1e-9
    value = leaning_eigen_bound(11)
    assert 0.5 * 20 <= value * value <= 1.1 * 20
    # the two methods agree where both apply
    assert abs(leaning_eigen_bound(9, method="power") - leaning_eigen_bound(9, method="bisect")) < 1e-8
    with pytest.raises(LimitError):
        leaning_eigen_bound(40, method="power")
    assert leaning_eigen_bound(40) > 0  # auto falls back to bisection


def test_embedding_bound_on_enumerated_trees():
    # every decreasing tree is dominated by the leaning tree of its own
    # minimised Ulam-Harris order
    for n in range(2, 7):
        for t in enumerate_decreasing_trees(n, 4):
            uh = uh_min(t).uh
            assert lambda1_power_iteration(t) <= leaning_eigen_bound(uh) + 1e-8


def test_walk_count_identity_with_coefficients():
    for k in range(1, 6):
        t = leaning_tree(k)
        for n in range(0, 7):
            walks = closed_walk_count(t, 2 * n)
            assert walks == count_trees(n + 1, k + 1) - count_trees(n + 1, k)
