"""Ulam-Harris numbers of rooted trees.

Give the root label 1 and, for a node labelled r with s children, label the
children r+1, ..., r+s in order.  The Ulam-Harris number of an ordered tree
is the maximum label assigned this way; for an unordered tree it is the
minimum of that quantity over all child orderings.  Input labels on the
trees are ignored throughout this module; only the shape matters.

The minimisation is exact: at each node the children may be ordered
independently, and placing subtrees in descending order of their own minimal
numbers is optimal by the standard exchange argument (verified against the
brute-force sweep in the tests rather than assumed).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import LimitError
from .trees import PlaneTree, format_tree, node_count

#: node-count cap for the brute-force ordering sweep
BRUTEFORCE_NODE_LIMIT = 9


@dataclass(frozen=True)
class UhReport:
    """Ulam-Harris number with a witness ordering and its per-node labels.

    ``labels`` lists the assigned label of every witness node in preorder
    (root first, then each child subtree left to right); ``uh`` is their
    maximum.
    """

    uh: int
    witness: PlaneTree
    labels: tuple[int, ...]


def uh_ordered(t: PlaneTree) -> UhReport:
    """Ulam-Harris number of an ordered tree, children taken as given."""
    labels: list[int] = []

    def assign(node: PlaneTree, label: int) -> int:
        labels.append(label)
        best = label
        for position, child in enumerate(node.children, start=1):
            best = max(best, assign(child, label + position))
        return best

    best = assign(t, 1)
    return UhReport(best, t, tuple(labels))


def uh_min(t: PlaneTree) -> UhReport:
    """Exact minimal Ulam-Harris number over all child orderings.

    Each subtree's minimal number is computed recursively; sorting the
    children by that value, descending, is optimal because swapping any two
    children out of descending order never decreases the maximum of
    position + subtree value.  Ties are broken by the bracket serialisation
    of the reordered subtree, which makes the witness deterministic.
    """
    _, witness = _min_order(t)
    ordered = uh_ordered(witness)
    return UhReport(ordered.uh, witness, ordered.labels)


def _min_order(t: PlaneTree) -> tuple[int, PlaneTree]:
    ranked = sorted(
        (_min_order(child) for child in t.children),
        key=lambda pair: (-pair[0], format_tree(pair[1])),
    )
    best = 1
    for position, (value, _) in enumerate(ranked, start=1):
        best = max(best, position + value)
    return best, PlaneTree(t.label, tuple(w for _, w in ranked))


def uh_min_bruteforce(t: PlaneTree, *, max_nodes: int = BRUTEFORCE_NODE_LIMIT) -> int:
    """Minimum over all products of child permutations, by exhaustion."""
    if node_count(t) > max_nodes:
        raise LimitError(f"brute-force ordering sweep limited to {max_nodes} nodes")

    def minimal(node: PlaneTree) -> int:
        values = [minimal(child) for child in node.children]
        if not values:
            return 1
        best = None
        for perm in permutations(values):
            candidate = max(position + value for position, value in enumerate(perm, 1))
            if best is None or candidate < best:
                best = candidate
        return max(1, best)

    return minimal(t)


def enumerate_unordered_shapes(n: int) -> list[PlaneTree]:
    """All rooted unordered trees on n nodes, one canonical ordered form each.

    Canonical form: children sorted by their own bracket serialisation.  All
    labels are 1 (shape-only semantics).  Counts follow the rooted-tree
    sequence 1, 1, 2, 4, 9, 20, 48, 115, ...
    """
    if n < 1:
        raise ValueError("n must be positive")
    catalog: list[list[PlaneTree]] = [[], [PlaneTree(1)]]  # by node count
    for size in range(2, n + 1):
        # pool of all candidate subtrees, smallest first, with a stable index
        pool = [tree for trees in catalog[1:size] for tree in trees]
        shapes: list[PlaneTree] = []

        def choose(remaining: int, max_index: int, chosen: tuple[PlaneTree, ...]) -> None:
            if remaining == 0:
                ordered = tuple(sorted(chosen, key=format_tree))
                shapes.append(PlaneTree(1, ordered))
                return
            for index in range(max_index, -1, -1):
                sub = pool[index]
                sub_size = node_count(sub)
                if sub_size <= remaining:
                    choose(remaining - sub_size, index, chosen + (sub,))

        choose(size - 1, len(pool) - 1, ())
        # multisets chosen with nonincreasing pool index appear exactly once
        catalog.append(shapes)
    return catalog[n]
