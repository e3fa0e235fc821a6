"""Closed-walk counts and largest-eigenvalue machinery for trees.

Walk counts are exact integers throughout (they grow like the largest
eigenvalue to the walk length, so floats would drop digits quickly);
eigenvalue estimates are floats.  Vertices are addressed by preorder index,
root = 0.

Three independent routes to the largest adjacency eigenvalue appear here:

* power iteration on an explicit tree (general-purpose),
* walk-growth estimates ``W^(1/2n)`` from exact closed-walk counts,
* for leaning trees only, bisection on a pivot recursion that exploits the
  fact that every vertex of the order-k leaning tree is the root of a
  smaller leaning tree, giving an O(k)-per-point positivity test.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import LimitError
from .trees import PlaneTree, leaning_tree

#: default work cap for single-vertex walk counts (node count times half-length)
WALK_WORK_LIMIT = 5_000_000
#: default work cap for all-vertex profiles (node count squared times half-length)
PROFILE_WORK_LIMIT = 30_000_000
#: orders up to which leaning-tree eigenvalues use the explicit tree
EXPLICIT_LEANING_ORDER = 12


def adjacency_lists(t: PlaneTree) -> list[list[int]]:
    """Neighbour lists of the underlying tree, vertices in preorder."""
    adj: list[list[int]] = []
    stack: list[tuple[PlaneTree, int]] = [(t, -1)]
    while stack:
        node, parent = stack.pop()
        index = len(adj)
        adj.append([])
        if parent >= 0:
            adj[parent].append(index)
            adj[index].append(parent)
        for child in reversed(node.children):
            stack.append((child, index))
    return adj


def closed_walk_count(
    t: PlaneTree,
    length: int,
    vertex: int = 0,
    *,
    max_work: int = WALK_WORK_LIMIT,
) -> int:
    """Exact number of closed walks of even ``length`` from ``vertex``.

    Computed by repeatedly applying the adjacency operator to the indicator
    vector of the vertex, in integer arithmetic.
    """
    if length < 0 or length % 2:
        raise ValueError("walk length must be even and nonnegative")
    adj = adjacency_lists(t)
    if not 0 <= vertex < len(adj):
        raise ValueError(f"vertex {vertex} out of range")
    if len(adj) * (length // 2) > max_work:
        raise LimitError("walk-count budget exceeded (node count times half-length)")
    x = [0] * len(adj)
    x[vertex] = 1
    for _ in range(length):
        x = [sum(x[w] for w in nbrs) for nbrs in adj]
    return x[vertex]


def walk_count_table(
    t: PlaneTree,
    max_length: int,
    vertex: int = 0,
    *,
    max_work: int = WALK_WORK_LIMIT,
) -> dict[int, int]:
    """Closed-walk counts from ``vertex`` for every even length up to ``max_length``.

    One replay serves all lengths: after m applications of the adjacency
    operator to the indicator vector, the entry at ``vertex`` is the count of
    closed m-walks.
    """
    if max_length < 0 or max_length % 2:
        raise ValueError("max_length must be even and nonnegative")
    adj = adjacency_lists(t)
    if not 0 <= vertex < len(adj):
        raise ValueError(f"vertex {vertex} out of range")
    if len(adj) * (max_length // 2 + 1) > max_work:
        raise LimitError("walk-count budget exceeded (node count times half-length)")
    counts = {0: 1}
    x = [0] * len(adj)
    x[vertex] = 1
    for step in range(1, max_length + 1):
        x = [sum(x[w] for w in nbrs) for nbrs in adj]
        if step % 2 == 0:
            counts[step] = x[vertex]
    return counts


def walk_count_profile(
    t: PlaneTree,
    half_length: int,
    *,
    max_work: int = PROFILE_WORK_LIMIT,
) -> list[int]:
    """Exact closed-walk counts of length 2*half_length from every vertex.

    Powers the adjacency matrix to ``half_length`` over Python integers (the
    matrix is kept as an object array so numpy only supplies the loops), then
    reads the diagonal of its square as row norms; the matrix is symmetric.
    """
    if half_length < 0:
        raise ValueError("half_length must be nonnegative")
    adj = adjacency_lists(t)
    size = len(adj)
    if size * size * max(half_length, 1) > max_work:
        raise LimitError("profile budget exceeded (node count squared times half-length)")
    neighbours = [np.array(nbrs, dtype=np.intp) for nbrs in adj]
    power = np.zeros((size, size), dtype=object)
    for i in range(size):
        power[i, i] = 1
    for _ in range(half_length):
        step = np.empty_like(power)
        for v in range(size):
            step[v] = np.add.reduce(power[neighbours[v]], axis=0)
        power = step
    return [int(np.add.reduce(power[v] * power[v])) for v in range(size)]


def lambda1_trace_estimate(
    t: PlaneTree,
    half_length: int,
    *,
    max_work: int = PROFILE_WORK_LIMIT,
) -> tuple[float, float]:
    """Walk-growth estimates (min over vertices, max over vertices).

    Both values converge to the largest adjacency eigenvalue as the length
    grows, and the max-based value is never above it (each vertex's count is
    at most the eigenvalue to the walk length).  At finite length neither is
    a certified bound for the other side, so treat the pair as an estimate.
    """
    if half_length < 1:
        raise ValueError("half_length must be positive")
    profile = walk_count_profile(t, half_length, max_work=max_work)
    exponent = 1.0 / (2 * half_length)
    low = min(profile)
    high = max(profile)
    return (_int_root(low, exponent), _int_root(high, exponent))


def walk_growth_estimate(
    t: PlaneTree,
    half_length: int,
    vertex: int = 0,
    *,
    max_work: int = WALK_WORK_LIMIT,
) -> float:
    """Single-vertex walk-growth estimate ``count^(1/length)``."""
    count = closed_walk_count(t, 2 * half_length, vertex, max_work=max_work)
    return _int_root(count, 1.0 / (2 * half_length))


def _int_root(value: int, exponent: float) -> float:
    if value == 0:
        return 0.0
    return math.exp(math.log(value) * exponent)


def lambda1_power_iteration(
    t: PlaneTree,
    tol: float = 1e-10,
    *,
    max_iter: int = 1_000_000,
) -> float:
    """Largest adjacency eigenvalue by shifted power iteration.

    Iterates x <- (A + I) x with normalisation.  The shift matters: trees are
    bipartite, so the plain adjacency has eigenvalues in symmetric pairs and
    an unshifted iteration can stall on a mix of the two extreme
    eigenvectors; adding the identity makes the dominant eigenvalue simple.
    The all-ones start vector has positive overlap with the Perron vector of
    a connected graph.  Convergence is declared once the Rayleigh quotient
    of A is stable to ``tol`` over three consecutive iterations.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    adj = adjacency_lists(t)
    size = len(adj)
    if size == 1:
        return 0.0
    src = np.fromiter(
        (v for v in range(size) for w in adj[v] if w > v), dtype=np.intp
    )
    dst = np.fromiter(
        (w for v in range(size) for w in adj[v] if w > v), dtype=np.intp
    )
    x = np.full(size, 1.0 / math.sqrt(size))
    rayleigh_prev = None
    stable = 0
    for _ in range(max_iter):
        y = np.zeros(size)
        np.add.at(y, src, x[dst])
        np.add.at(y, dst, x[src])
        rayleigh = float(x @ y)
        y += x  # the +I shift
        x = y / np.linalg.norm(y)
        if rayleigh_prev is not None and abs(rayleigh - rayleigh_prev) <= tol * max(
            1.0, abs(rayleigh)
        ):
            stable += 1
            if stable >= 3:
                return rayleigh
        else:
            stable = 0
        rayleigh_prev = rayleigh
    raise RuntimeError(
        f"power iteration did not converge in {max_iter} iterations; "
        f"last estimate {rayleigh_prev}"
    )


def stevanovic_bounds(delta: int) -> tuple[float, float]:
    """The degree sandwich (sqrt(delta), 2*sqrt(delta - 1)) for trees.

    Any tree with maximum vertex degree delta has its largest adjacency
    eigenvalue between the two values.  At delta = 1 the upper formula
    collapses to 0 and the pair is degenerate (a single edge has eigenvalue
    1); callers should treat that case as vacuous rather than a bound.
    """
    if delta < 1:
        raise ValueError("maximum degree must be at least 1")
    return (math.sqrt(delta), 2.0 * math.sqrt(delta - 1))


def leaning_pivot_chain(x: float, order: int) -> int | None:
    """LDL pivot recursion for xI - A on the order-``order`` leaning tree.

    Every vertex is the root of a smaller leaning tree, so the pivot of an
    order-j vertex depends only on j: pivot(j) = x - sum over i < j of
    1/pivot(i).  Returns None if all pivots up to ``order`` are positive
    (equivalently, x exceeds the largest eigenvalue), else the first j whose
    pivot is nonpositive.
    """
    inv_sum = 0.0
    for j in range(order + 1):
        pivot = x - inv_sum
        if pivot <= 0.0:
            return j
        inv_sum += 1.0 / pivot
    return None


def leaning_lambda1_bracket(order: int, tol: float = 1e-12) -> tuple[float, float]:
    """Certified bracket for the largest eigenvalue of a leaning tree.

    Bisection on the pivot positivity predicate; O(order) per point, so this
    works for orders far beyond what an explicit 2^order-vertex tree allows.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if order == 0:
        return (0.0, 0.0)
    lo = 0.0  # pivot(0) = 0 there, so the predicate fails: lo <= lambda1
    hi = 2.0 * math.sqrt(order) + 1.0
    if leaning_pivot_chain(hi, order) is not None:
        raise RuntimeError("seed bracket does not straddle the eigenvalue")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # float resolution floor
        if leaning_pivot_chain(mid, order) is None:
            hi = mid
        else:
            lo = mid
    return (lo, hi)


def leaning_lambda1(order: int, tol: float = 1e-12) -> float:
    """Largest eigenvalue of the order-``order`` leaning tree, via bisection."""
    lo, hi = leaning_lambda1_bracket(order, tol)
    return 0.5 * (lo + hi)


def leaning_eigen_bound(
    uh: int,
    tol: float = 1e-10,
    *,
    method: str = "auto",
    max_explicit_order: int = EXPLICIT_LEANING_ORDER,
) -> float:
    """Largest eigenvalue of the leaning tree of order uh - 1.

    Any rooted tree with Ulam-Harris number uh embeds into that leaning
    tree, so the value is an upper bound for the tree's own largest
    adjacency eigenvalue.  ``method`` is "power" (explicit tree, guarded at
    2^order nodes), "bisect" (pivot recursion, any order), or "auto".
    """
    if uh < 1:
        raise ValueError("Ulam-Harris number must be positive")
    order = uh - 1
    if method == "auto":
        method = "power" if order <= max_explicit_order else "bisect"
    if method == "power":
        if order > max_explicit_order:
            raise LimitError(
                f"explicit leaning tree of order {order} exceeds the guard "
                f"{max_explicit_order}; use method='bisect'"
            )
        if order == 0:
            return 0.0
        return lambda1_power_iteration(leaning_tree(order), tol)
    if method == "bisect":
        return leaning_lambda1(order, min(tol, 1e-10))
    raise ValueError(f"unknown method {method!r}")
