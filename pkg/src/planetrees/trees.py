"""Labelled plane trees: representation, bracket text format, enumeration.

A plane tree is a rooted tree whose children are linearly ordered.  Nodes
carry positive integer labels.  A tree is "decreasing" for a label bound k
when every label lies in {1..k} and each child's label is strictly smaller
than its parent's.

The regular leaning tree of order k is the recursive tree whose root has k
children carrying, left to right, the leaning trees of orders k-1 down to 0.
It has 2^k nodes.  Instances built here share subtree objects (the structure
is immutable), so construction is cheap even though traversals remain
proportional to the full node count.
"""

from __future__ import annotations

import random
from itertools import product
from operator import itemgetter
from typing import Iterator

from .errors import LimitError, TreeParseError

#: default cap on the leaning-tree order (the tree has 2^k nodes)
LEANING_ORDER_LIMIT = 24
#: default caps for brute-force enumeration of decreasing trees
ENUMERATION_NODE_LIMIT = 9
ENUMERATION_LABEL_LIMIT = 7


class PlaneTree:
    """Immutable rooted ordered tree with a positive integer label per node."""

    __slots__ = ("label", "children", "_hash")

    def __init__(self, label: int, children: tuple["PlaneTree", ...] = ()):
        if not isinstance(label, int) or label < 1:
            raise ValueError(f"labels must be positive integers, got {label!r}")
        self.label = label
        self.children = tuple(children)
        self._hash = None

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return self.label == other.label and self.children == other.children

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.label, self.children))
            self._hash = h
        return h

    def __repr__(self) -> str:
        return f"<PlaneTree {format_tree(self)}>"


def format_tree(t: PlaneTree) -> str:
    """Bracket notation: ``label(child child ...)``, a leaf is its bare label."""
    memo: dict[int, str] = {}

    def fmt(node: PlaneTree) -> str:
        key = id(node)
        text = memo.get(key)
        if text is None:
            if node.children:
                text = "%d(%s)" % (node.label, " ".join(fmt(c) for c in node.children))
            else:
                text = str(node.label)
            memo[key] = text
        return text

    return fmt(t)


def parse_tree(text: str) -> PlaneTree:
    """Parse bracket notation, reporting the position of the first error."""
    pos = 0
    n = len(text)

    def parse_node() -> PlaneTree:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise TreeParseError("expected a label", pos)
        label = int(text[start:pos])
        if label == 0:
            raise TreeParseError("label 0 is not allowed", start)
        children: list[PlaneTree] = []
        if pos < n and text[pos] == "(":
            pos += 1
            children.append(parse_node())
            while pos < n and text[pos] == " ":
                pos += 1
                children.append(parse_node())
            if pos >= n or text[pos] != ")":
                raise TreeParseError("expected ')' or ' '", pos)
            pos += 1
        return PlaneTree(label, tuple(children))

    root = parse_node()
    if pos != n:
        raise TreeParseError("trailing input after tree", pos)
    return root


def node_count(t: PlaneTree) -> int:
    """Number of nodes, counting shared subtrees once per occurrence."""
    total = 0
    stack = [t]
    while stack:
        node = stack.pop()
        total += 1
        stack.extend(node.children)
    return total


def max_degree(t: PlaneTree) -> int:
    """Maximum vertex degree of the underlying (undirected) tree.

    The root contributes its child count; every other node contributes its
    child count plus one for the parent edge.
    """
    best = len(t.children)
    stack = list(t.children)
    while stack:
        node = stack.pop()
        best = max(best, len(node.children) + 1)
        stack.extend(node.children)
    return best


def iter_nodes(t: PlaneTree) -> Iterator[PlaneTree]:
    """Preorder traversal (root first, then each child subtree in order)."""
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def is_decreasing(t: PlaneTree, k: int) -> bool:
    """True iff all labels lie in {1..k} and strictly decrease away from the root."""
    if t.label > k:
        return False
    stack = [t]
    while stack:
        node = stack.pop()
        for child in node.children:
            if child.label >= node.label:
                return False
            stack.append(child)
    return True


def leaning_tree(k: int, *, max_order: int = LEANING_ORDER_LIMIT) -> PlaneTree:
    """Regular leaning tree of order k, with every node labelled order + 1.

    The labelling makes it a valid decreasing tree with root label k + 1:
    a node of order j has children of orders j-1, ..., 0.  Subtree objects
    are shared, so this is O(k^2) to build despite the 2^k logical nodes.
    """
    if k < 0:
        raise ValueError("order must be nonnegative")
    if k > max_order:
        raise LimitError(f"leaning tree order {k} exceeds the guard {max_order} (2^k nodes)")
    levels: list[PlaneTree] = [PlaneTree(1)]
    for j in range(1, k + 1):
        levels.append(PlaneTree(j + 1, tuple(levels[i] for i in range(j - 1, -1, -1))))
    return levels[k]


def enumerate_decreasing_trees(
    n: int,
    k: int,
    *,
    max_nodes: int = ENUMERATION_NODE_LIMIT,
    max_labels: int = ENUMERATION_LABEL_LIMIT,
) -> list[PlaneTree]:
    """Every n-node decreasing tree with labels in {1..k}, each exactly once.

    Plane-tree shapes are enumerated as preorder child-count structures,
    then labels are assigned top-down with per-edge strictness.  The result
    is sorted lexicographically by bracket serialisation, which fixes a
    deterministic canonical order.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if n > max_nodes or k > max_labels:
        raise LimitError(
            f"enumeration limited to n <= {max_nodes}, k <= {max_labels} (got n={n}, k={k})"
        )

    forest_memo: dict[int, list[tuple]] = {}

    def forests(m: int) -> list[tuple]:
        # all tuples of shapes totalling m nodes; a shape is its tuple of child shapes
        cached = forest_memo.get(m)
        if cached is not None:
            return cached
        if m == 0:
            result: list[tuple] = [()]
        else:
            result = []
            for first_size in range(1, m + 1):
                for head in forests(first_size - 1):  # shapes with first_size nodes
                    for tail in forests(m - first_size):
                        result.append((head,) + tail)
        forest_memo[m] = result
        return result

    labelled_memo: dict[tuple, list[tuple[str, PlaneTree]]] = {}
    upto_memo: dict[tuple, list[tuple[str, PlaneTree]]] = {}
    make = _fast_tree

    def labelled(shape: tuple, root_label: int) -> list[tuple[str, PlaneTree]]:
        key = (shape, root_label)
        cached = labelled_memo.get(key)
        if cached is not None:
            return cached
        if not shape:
            result = [(str(root_label), make(root_label, ()))]
        else:
            pools = [upto(child, root_label - 1) for child in shape]
            result = []
            if all(pools):
                head = "%d(" % root_label
                join = " ".join
                append = result.append
                for combo in product(*pools):
                    texts, subtrees = zip(*combo)
                    append((head + join(texts) + ")", make(root_label, subtrees)))
        labelled_memo[key] = result
        return result

    def upto(shape: tuple, bound: int) -> list[tuple[str, PlaneTree]]:
        if bound <= 0:
            return []
        key = (shape, bound)
        cached = upto_memo.get(key)
        if cached is not None:
            return cached
        result = upto(shape, bound - 1) + labelled(shape, bound)
        upto_memo[key] = result
        return result

    entries: list[tuple[str, PlaneTree]] = []
    for shape in forests(n - 1):
        for root_label in range(1, k + 1):
            entries.extend(labelled(shape, root_label))
    entries.sort(key=itemgetter(0))
    return [tree for _, tree in entries]


def _fast_tree(label: int, children: tuple[PlaneTree, ...]) -> PlaneTree:
    # construction without argument validation, for enumeration hot paths
    t = PlaneTree.__new__(PlaneTree)
    t.label = label
    t.children = children
    t._hash = None
    return t


def random_plane_tree(size: int, rng: random.Random) -> PlaneTree:
    """Random rooted tree on ``size`` nodes by uniform attachment, labels all 1.

    Each new node picks a uniformly random earlier node as its parent, which
    keeps typical heights logarithmic.  Used by the verification harness and
    the test suite; no uniformity over tree shapes is claimed.
    """
    if size < 1:
        raise ValueError("size must be positive")
    kids: list[list[int]] = [[] for _ in range(size)]
    for i in range(1, size):
        kids[rng.randrange(i)].append(i)

    def build(i: int) -> PlaneTree:
        return PlaneTree(1, tuple(build(c) for c in kids[i]))

    return build(0)
