"""Dominant singularities and growth constants of the counting series.

Write s_k(z) = 1 - g_k(z), where g_k is the counting series for decreasing
labels from {1..k}.  The chain s_1 = 1 - z, s_k = s_(k-1) - z/s_(k-1) is
positive on [0, zstar_k), where zstar_k is the smallest positive root of
s_k; the counts with k+1 labels then grow like ck * alpha^n with
alpha = 1/zstar_k (the root is a simple pole of the next counting series).

Root location uses bisection on a positivity predicate rather than Newton
steps: near the root the recurrence divides by a vanishing chain member, and
a Newton step can jump past the pole, while the predicate (every chain
member positive) is monotone in z and unconditionally safe to bisect.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: default bracket width for root location (double precision)
DEFAULT_ROOT_TOL = 1e-12


@dataclass(frozen=True)
class BeyondRoot:
    """Sentinel value: the chain became nonpositive first at this index."""

    index: int


@dataclass(frozen=True)
class Dual:
    """Value and first derivative, propagated jointly (forward-mode).

    Arithmetic follows the product and quotient rules exactly; in floating
    point the derivative matches centred finite differences to first order.
    """

    v: float
    d: float

    def __add__(self, other):
        other = _as_dual(other)
        return Dual(self.v + other.v, self.d + other.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_dual(other)
        return Dual(self.v - other.v, self.d - other.d)

    def __rsub__(self, other):
        other = _as_dual(other)
        return Dual(other.v - self.v, other.d - self.d)

    def __mul__(self, other):
        other = _as_dual(other)
        return Dual(self.v * other.v, self.v * other.d + self.d * other.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_dual(other)
        if other.v == 0.0:
            raise ZeroDivisionError("division by a dual with zero value part")
        value = self.v / other.v
        return Dual(value, (self.d - value * other.d) / other.v)

    def __rtruediv__(self, other):
        return _as_dual(other) / self

    def __neg__(self):
        return Dual(-self.v, -self.d)


def _as_dual(x) -> Dual:
    if isinstance(x, Dual):
        return x
    return Dual(float(x), 0.0)


@dataclass(frozen=True)
class RootBracket:
    """Certified interval [lo, hi] around the smallest positive root of s_k.

    The chain is verified positive at lo and verified to fail positivity at
    hi (except in the exactly-solvable k = 1 case, where both endpoints are
    the algebraic root 1).
    """

    k: int
    lo: float
    hi: float

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo


def eval_sk(z: float, k: int) -> float | BeyondRoot:
    """Evaluate s_k(z) through the chain, or report where positivity fails.

    Returns the (positive) value when every chain member stays positive,
    otherwise BeyondRoot(j) for the first index j with s_j(z) <= 0, in which
    case z is at or beyond the root of s_j and hence of s_k.
    """
    if z < 0:
        raise ValueError("z must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    s = 1.0 - z
    if s <= 0.0:
        return BeyondRoot(1)
    for j in range(2, k + 1):
        s = s - z / s
        if s <= 0.0:
            return BeyondRoot(j)
    return s


def eval_gk(z: float, k: int) -> float:
    """Evaluate the counting series g_k(z) inside its disc of convergence."""
    return eval_gk_dual(z, k).v


def eval_gk_dual(z: float, k: int) -> Dual:
    """Evaluate g_k and its derivative jointly via dual-number propagation."""
    if z < 0:
        raise ValueError("z must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    g = Dual(float(z), 1.0)
    zd = Dual(float(z), 1.0)
    for _ in range(2, k + 1):
        denom = 1.0 - g
        if denom.v <= 0.0:
            raise ValueError(f"z={z} is at or beyond the pole of the next level")
        g = g + zd / denom
    return g


def zstar_lower_bound(k: int) -> float:
    """Provable lower bound k - sqrt(k^2 - 1) for the root of s_k.

    Squaring the chain recurrence and telescoping shows s_k(z)^2 is at least
    1 - 2kz + z^2, which stays positive strictly below this value.
    """
    if k < 1:
        raise ValueError("k must be positive")
    return k - math.sqrt(k * k - 1.0)


def zstar_upper_bound(k: int) -> float:
    """Provable upper bound 1/(2k(1 - (4k)^(-1/4))) for the root of s_k.

    Follows from concavity of s_k on [0, root] together with the bound
    s_k(1/(2k)) <= (4k)^(-1/4).  Reported as +inf if the parenthesis is not
    positive (never the case for k >= 1).
    """
    if k < 1:
        raise ValueError("k must be positive")
    parenthesis = 1.0 - (4.0 * k) ** -0.25
    if parenthesis <= 0.0:
        return math.inf
    return 1.0 / (2.0 * k * parenthesis)


def zstar(k: int, tol: float = DEFAULT_ROOT_TOL) -> RootBracket:
    """Certified bracket for the smallest positive root of s_k.

    Bisection on the positivity predicate of ``eval_sk``, seeded with the
    provable lower and upper bounds (intersected with [0, 1]).  k = 1 is
    returned exactly: s_1 = 1 - z has root 1, which coincides with the lower
    bound, so no strictly-positive certificate to its left exists within the
    seeded interval.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if k == 1:
        return RootBracket(1, 1.0, 1.0)
    lo = zstar_lower_bound(k)
    hi = min(1.0, zstar_upper_bound(k))
    if isinstance(eval_sk(lo, k), BeyondRoot):
        raise RuntimeError(f"positivity fails at the lower seed {lo} for k={k}")
    if not isinstance(eval_sk(hi, k), BeyondRoot):
        raise RuntimeError(f"positivity unexpectedly holds at the upper seed {hi} for k={k}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # float resolution floor
        if isinstance(eval_sk(mid, k), BeyondRoot):
            hi = mid
        else:
            lo = mid
    return RootBracket(k, lo, hi)


def alpha(k: int, tol: float = DEFAULT_ROOT_TOL) -> float:
    """Exponential growth rate of the counts with k labels: 1/zstar_(k-1).

    The root bracket is refined to a width that keeps the propagated error
    of the reciprocal below ``tol``.
    """
    if k < 2:
        raise ValueError("growth constants are defined for k >= 2")
    if tol <= 0:
        raise ValueError("tol must be positive")
    coarse = zstar(k - 1, 1e-6)
    width = min(DEFAULT_ROOT_TOL, tol * coarse.lo * coarse.lo)
    return 1.0 / zstar(k - 1, width).midpoint


def alpha_bounds(k: int) -> tuple[float, float]:
    """Provable bracket for the growth rate with k labels.

    Lower: 2(k-1) (1 - 1/(sqrt(2) (k-1)^(1/4))), clamped at 0 if the
    parenthesis were negative.  Upper: 1/((k-1) - sqrt((k-1)^2 - 1)).
    """
    if k < 2:
        raise ValueError("growth constants are defined for k >= 2")
    m = k - 1
    lower = 2.0 * m * (1.0 - 1.0 / (math.sqrt(2.0) * m**0.25))
    lower = max(lower, 0.0)
    upper = 1.0 / (m - math.sqrt(m * m - 1.0))
    return (lower, upper)


def ck(k: int, tol: float = DEFAULT_ROOT_TOL) -> float:
    """Leading constant of the growth law: counts ~ ck(k) * alpha(k)^n.

    The root of s_(k-1) is a simple pole of g_k, and the residue calculus
    for a simple pole of a rational series gives 1/g'_(k-1) evaluated at the
    root.  The derivative is propagated with dual numbers through the same
    recurrence that defines the series, and the formula is validated against
    the empirical series ratio in the tests before being trusted.
    """
    if k < 2:
        raise ValueError("growth constants are defined for k >= 2")
    root = zstar(k - 1, min(tol, DEFAULT_ROOT_TOL))
    derivative = eval_gk_dual(root.midpoint, k - 1).d
    return 1.0 / derivative
