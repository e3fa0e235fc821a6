"""Walk validity, the two conversion algorithms, and their round trips."""

import pytest

from planetrees import (
    UP,
    LimitError,
    Walk,
    WalkError,
    build_tree_from_walk,
    build_walk_from_tree,
    count_with_root_label,
    enumerate_closed_walks,
    enumerate_decreasing_trees,
    format_tree,
    format_walk,
    parse_tree,
    parse_walk,
    validate_walk,
)


def test_empty_walk_gives_single_node():
    assert format_tree(build_tree_from_walk(Walk(4, ()))) == "5"


def test_hand_traced_examples():
    assert format_tree(build_tree_from_walk(Walk(2, (1, 1, UP, UP)))) == "3(2(1))"
    assert format_tree(build_tree_from_walk(Walk(2, (2, UP, 2, UP)))) == "3(1 1)"


def test_walk_from_tree_examples():
    assert build_walk_from_tree(parse_tree("5")) == Walk(4, ())
    assert build_walk_from_tree(parse_tree("3(2(1))")) == Walk(2, (1, 1, UP, UP))
    assert build_walk_from_tree(parse_tree("3(1 1)")) == Walk(2, (2, UP, 2, UP))


def test_invalid_walks_report_offending_index():
    with pytest.raises(WalkError) as err:
        build_tree_from_walk(Walk(2, (UP,)))
    assert err.value.index == 0
    with pytest.raises(WalkError) as err:
        build_tree_from_walk(Walk(2, (1, 2, UP, UP)))  # rank 2 at an order-1 vertex
    assert err.value.index == 1
    with pytest.raises(WalkError) as err:
        build_tree_from_walk(Walk(2, (1,)))  # does not return to the root
    assert err.value.index == 1
    with pytest.raises(WalkError):
        validate_walk(Walk(3, (3, 1, UP, UP)))  # rank 1 at an order-0 vertex


def test_walk_from_tree_rejects_nondecreasing():
    with pytest.raises(ValueError):
        build_walk_from_tree(parse_tree("2(2)"))
    with pytest.raises(ValueError):
        build_walk_from_tree(parse_tree("3(1(2))"))


def test_walk_text_roundtrip():
    w = Walk(3, (1, 2, UP, UP, 3, UP))
    assert format_walk(w) == "+1 +2 - - +3 -"
    assert parse_walk("+1 +2 - - +3 -", 3) == w
    assert parse_walk("", 4) == Walk(4, ())
    with pytest.raises(WalkError):
        parse_walk("+1 up", 3)
    with pytest.raises(WalkError):
        parse_walk("+0 -", 3)


def test_enumerate_closed_walks_smallest():
    assert enumerate_closed_walks(3, 0) == [Walk(3, ())]
    assert [format_walk(w) for w in enumerate_closed_walks(2, 2)] == ["+1 -", "+2 -"]
    for k in range(1, 6):
        assert len(enumerate_closed_walks(k, 2)) == k


def test_enumerate_closed_walks_guards():
    with pytest.raises(LimitError):
        enumerate_closed_walks(2, 14)
    with pytest.raises(LimitError):
        enumerate_closed_walks(7, 4)
    with pytest.raises(ValueError):
        enumerate_closed_walks(2, 3)


def test_walk_counts_match_root_label_counts():
    for k in range(1, 6):
        for n in range(0, 5):
            walks = enumerate_closed_walks(k, 2 * n)
            assert len(walks) == count_with_root_label(n + 1, k + 1)


def test_roundtrip_walk_tree_walk():
    for k in range(0, 5):
        for length in range(0, 9, 2):
            for w in enumerate_closed_walks(k, length):
                assert build_walk_from_tree(build_tree_from_walk(w)) == w


def test_roundtrip_tree_walk_tree():
    for k in range(1, 5):
        for n in range(1, 7):
            for t in enumerate_decreasing_trees(n, k + 1):
                if t.label != k + 1:
                    continue
                assert build_tree_from_walk(build_walk_from_tree(t)) == t


def test_image_of_walks_is_the_tree_family():
    for k in range(1, 5):
        for n in range(0, 5):
            image = [
                format_tree(build_tree_from_walk(w))
                for w in enumerate_closed_walks(k, 2 * n)
            ]
            assert len(set(image)) == len(image)
            family = {
                format_tree(t)
                for t in enumerate_decreasing_trees(n + 1, k + 1)
                if t.label == k + 1
            }
            assert set(image) == family
