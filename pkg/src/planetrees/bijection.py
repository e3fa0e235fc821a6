"""The bijection between closed root walks in a leaning tree and decreasing trees.

A closed walk of length 2n starting and ending at the root of the order-k
leaning tree corresponds to an (n+1)-node decreasing tree with root label
k+1: every descent into a subtree of order j appends a child labelled j+1
at the current position, and every ascent moves back to the parent.

Walks are stored as move sequences rather than vertex sequences: a positive
move i descends to the current vertex's rank-i child (whose order is the
current order minus i), and ``UP`` ascends to the parent.  Given the frozen
child order of leaning trees this encoding is unambiguous, and the vertex
sequence is recoverable by replay.  Text form: ``+i`` per descent, ``-`` per
ascent, space separated (e.g. ``+1 +1 - -``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LimitError, WalkError
from .trees import PlaneTree

#: move encoding for "ascend to the parent"
UP = -1

#: default caps for exhaustive walk enumeration
WALK_LENGTH_LIMIT = 12
WALK_ORDER_LIMIT = 6


@dataclass(frozen=True)
class Walk:
    """Move sequence in the leaning tree of the given order, starting at its root."""

    order: int
    moves: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("ambient order must be nonnegative")

    def __len__(self) -> int:
        return len(self.moves)


def validate_walk(walk: Walk) -> None:
    """Raise WalkError (with the offending move index) unless the walk is closed.

    Closed means: replay never ascends from the root, never descends past a
    vertex's order, and ends back at the root.
    """
    depth_orders = [walk.order]
    for index, move in enumerate(walk.moves):
        current = depth_orders[-1]
        if move == UP:
            if len(depth_orders) == 1:
                raise WalkError("cannot ascend from the root", index)
            depth_orders.pop()
        elif 1 <= move <= current:
            depth_orders.append(current - move)
        else:
            raise WalkError(
                f"descent rank {move} invalid at a vertex of order {current}", index
            )
    if len(depth_orders) != 1:
        raise WalkError("walk does not return to the root", len(walk.moves))


def build_tree_from_walk(walk: Walk) -> PlaneTree:
    """Decreasing tree with root label order+1 built from a closed walk.

    The tree has n+1 nodes for a walk of length 2n.  Invalid walks are
    rejected with the index of the offending move.
    """
    root_label = walk.order + 1
    # stack of (label, mutable child list); the tree is frozen on ascent
    stack: list[tuple[int, list[PlaneTree]]] = [(root_label, [])]
    for index, move in enumerate(walk.moves):
        label, children = stack[-1]
        if move == UP:
            if len(stack) == 1:
                raise WalkError("cannot ascend from the root", index)
            stack.pop()
            stack[-1][1].append(PlaneTree(label, tuple(children)))
        else:
            current_order = label - 1
            if not 1 <= move <= current_order:
                raise WalkError(
                    f"descent rank {move} invalid at a vertex of order {current_order}",
                    index,
                )
            stack.append((current_order - move + 1, []))
    if len(stack) != 1:
        raise WalkError("walk does not return to the root", len(walk.moves))
    label, children = stack[0]
    return PlaneTree(label, tuple(children))


def build_walk_from_tree(t: PlaneTree) -> Walk:
    """Closed walk in the leaning tree of order root_label - 1 encoding ``t``.

    Inverse of ``build_tree_from_walk``: the walk visits, in depth-first
    order, the subtree roots matching each node's label, descending by rank
    parent_label - child_label.  Rejects trees whose labels do not strictly
    decrease away from the root.
    """
    moves: list[int] = []

    def emit(node: PlaneTree) -> None:
        for child in node.children:
            if child.label >= node.label:
                raise ValueError(
                    f"not a decreasing tree: child label {child.label} under {node.label}"
                )
            moves.append(node.label - child.label)
            emit(child)
            moves.append(UP)

    emit(t)
    return Walk(t.label - 1, tuple(moves))


def enumerate_closed_walks(
    order: int,
    length: int,
    *,
    max_length: int = WALK_LENGTH_LIMIT,
    max_order: int = WALK_ORDER_LIMIT,
) -> list[Walk]:
    """All closed root walks of the given even length, deterministically ordered.

    At each step the descents are tried by ascending rank before the ascent,
    so the output order is a depth-first lexicographic order on moves.
    """
    if length < 0 or length % 2:
        raise ValueError("walk length must be even and nonnegative")
    if order < 0:
        raise ValueError("order must be nonnegative")
    if length > max_length or order > max_order:
        raise LimitError(
            f"walk enumeration limited to length <= {max_length}, order <= {max_order}"
        )
    walks: list[Walk] = []
    moves: list[int] = []
    depth_orders = [order]

    def extend(remaining: int) -> None:
        depth = len(depth_orders) - 1
        if remaining == 0:
            if depth == 0:
                walks.append(Walk(order, tuple(moves)))
            return
        if remaining < depth or (remaining - depth) % 2:
            return  # cannot close the walk any more
        current = depth_orders[-1]
        for rank in range(1, current + 1):
            moves.append(rank)
            depth_orders.append(current - rank)
            extend(remaining - 1)
            depth_orders.pop()
            moves.pop()
        if depth > 0:
            moves.append(UP)
            top = depth_orders.pop()
            extend(remaining - 1)
            depth_orders.append(top)
            moves.pop()

    extend(length)
    return walks


def format_walk(walk: Walk) -> str:
    """Token text: ``+i`` per descent, ``-`` per ascent, space separated."""
    return " ".join("-" if m == UP else f"+{m}" for m in walk.moves)


def parse_walk(text: str, order: int) -> Walk:
    """Parse the token text into a validated walk in the order-``order`` tree."""
    moves: list[int] = []
    stripped = text.strip()
    if stripped:
        for pos, token in enumerate(stripped.split()):
            if token == "-":
                moves.append(UP)
            elif token.startswith("+") and token[1:].isdigit() and int(token[1:]) >= 1:
                moves.append(int(token[1:]))
            else:
                raise WalkError(f"unrecognised walk token {token!r}", pos)
    walk = Walk(order, tuple(moves))
    validate_walk(walk)
    return walk
