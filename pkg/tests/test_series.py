"""Series arithmetic and the three counting routes."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planetrees import (
    LimitError,
    TruncatedSeries,
    count_trees,
    count_trees_by_compositions,
    count_with_root_label,
    gk_series,
    series_from_json,
    series_invert_unit,
    series_to_json,
    sk_series,
)
from planetrees.series import compositions


def test_invert_geometric():
    s = TruncatedSeries((1, -1, 0, 0, 0, 0))
    assert series_invert_unit(s).coeffs == (1, 1, 1, 1, 1, 1)


def test_invert_identity():
    one = TruncatedSeries.constant(1, 4)
    assert series_invert_unit(one).coeffs == (1, 0, 0, 0)


def test_invert_fibonacci():
    s = TruncatedSeries((1, -1, -1, 0, 0))
    inv = series_invert_unit(s)
    assert inv.coeffs == (1, 1, 2, 3, 5)
    # multiply back: must be 1 modulo z^5
    assert (s * inv).coeffs == (1, 0, 0, 0, 0)


def test_invert_rejects_nonunit():
    with pytest.raises(ValueError):
        series_invert_unit(TruncatedSeries((2, 1)))
    with pytest.raises(ValueError):
        series_invert_unit(TruncatedSeries((0, 1)))


@given(st.lists(st.integers(min_value=-9, max_value=9), min_size=0, max_size=10))
@settings(max_examples=200)
def test_invert_roundtrip_random_units(tail):
    s = TruncatedSeries((1, *tail))
    product = s * series_invert_unit(s)
    assert product.coeffs == (1,) + (0,) * len(tail)


def test_gk_series_one_label():
    assert gk_series(1, 4).coeffs == (0, 1, 0, 0)
    assert gk_series(1, 1).coeffs == (0,)


def test_gk_series_two_labels():
    # one node: labels 1 or 2; n >= 2 nodes: the root must be 2, children all 1
    assert gk_series(2, 5).coeffs == (0, 2, 1, 1, 1)


def test_gk_series_three_labels():
    assert gk_series(3, 4).coeffs == (0, 3, 3, 6)


def test_sk_series_values():
    assert sk_series(1, 3).coeffs == (1, -1, 0)
    assert sk_series(2, 5).coeffs == (1, -2, -1, -1, -1)
    for k in range(1, 9):
        assert sk_series(k, 6).coeffs[0] == 1


def test_sk_is_complement_of_gk():
    for k in range(1, 9):
        g = gk_series(k, 30)
        s = sk_series(k, 30)
        assert tuple(a + b for a, b in zip(g.coeffs, s.coeffs)) == (1,) + (0,) * 29


def test_series_sign_invariants():
    for k in range(1, 8):
        g = gk_series(k, 20)
        assert g.coeffs[0] == 0
        assert all(c >= 0 for c in g.coeffs)
        s = sk_series(k, 20)
        assert all(c <= 0 for c in s.coeffs[1:])


def test_count_trees_anchors():
    assert count_trees(1, 1) == 1
    assert count_trees(5, 1) == 0
    assert count_trees(3, 3) == 6  # the path 3-2-1 plus five two-child stars
    assert [count_trees(1, k) for k in range(1, 7)] == [1, 2, 3, 4, 5, 6]
    assert [count_trees(2, k) for k in range(2, 6)] == [1, 3, 6, 10]  # k(k-1)/2


def test_count_monotone_in_labels():
    for n in range(1, 10):
        for k in range(2, 8):
            assert count_trees(n, k) >= count_trees(n, k - 1)


def test_compositions_enumerator():
    assert list(compositions(0)) == [()]
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(list(compositions(8))) == 128  # 2^(n-1)


def test_count_by_compositions_basics():
    assert [count_trees_by_compositions(1, k) for k in range(1, 7)] == [1, 2, 3, 4, 5, 6]
    assert count_trees_by_compositions(2, 2) == 1


def test_count_methods_agree():
    for n in range(1, 13):
        for k in range(1, 9):
            assert count_trees(n, k) == count_trees_by_compositions(n, k)


def test_count_literal_compositions():
    for n in range(1, 11):
        for k in range(1, 6):
            assert count_trees_by_compositions(n, k, literal=True) == count_trees(n, k)


def test_count_literal_guard():
    with pytest.raises(LimitError):
        count_trees_by_compositions(13, 3, literal=True)


def test_count_with_root_label():
    assert all(count_with_root_label(1, k) == 1 for k in range(1, 7))
    assert [count_with_root_label(2, k) for k in range(1, 7)] == [0, 1, 2, 3, 4, 5]
    assert count_with_root_label(3, 3) == 5
    # the root labels partition the family
    for n in range(1, 9):
        for k in range(1, 7):
            assert sum(count_with_root_label(n, j) for j in range(1, k + 1)) == count_trees(n, k)


def test_parameter_validation():
    for bad in (0, -1):
        with pytest.raises(ValueError):
            count_trees(bad, 2)
        with pytest.raises(ValueError):
            count_trees(2, bad)
        with pytest.raises(ValueError):
            gk_series(1, bad)


def test_series_json_roundtrip():
    s = gk_series(3, 4)
    text = series_to_json(s)
    assert text == '["0","3","3","6"]'
    assert series_from_json(text) == s


def test_series_json_preserves_big_integers():
    s = gk_series(4, 61)
    assert s.coeffs[60] > 10**30  # far beyond any fixed-width integer
    assert series_from_json(series_to_json(s)) == s
