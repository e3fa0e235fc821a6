#!/usr/bin/env python3
"""Largest adjacency eigenvalues of leaning trees, three ways.

Power iteration on the explicit tree, exact closed-walk growth (the count of
closed 2n-walks to the power 1/2n), and, for leaning trees, bisection on a
pivot recursion that costs O(order) per evaluation point and therefore
reaches orders whose explicit trees would have 2^order vertices.
"""

import math

from planetrees import (
    lambda1_power_iteration,
    lambda1_trace_estimate,
    leaning_lambda1,
    leaning_tree,
    max_degree,
    stevanovic_bounds,
    walk_growth_estimate,
)


def main():
    print("Order-2 leaning tree (the 4-vertex path): eigenvalue is the golden ratio")
    print("  power iteration:", lambda1_power_iteration(leaning_tree(2)))
    print("  pivot bisection:", leaning_lambda1(2))
    print("  (1+sqrt(5))/2  :", (1 + math.sqrt(5)) / 2)
    print()

    print("The degree sandwich sqrt(d) <= lambda1 <= 2 sqrt(d-1), d scanned:")
    print("  k    degree   sqrt(d)   lambda1     2 sqrt(d-1)   lambda1^2/(2k)")
    for k in range(2, 13):
        t = leaning_tree(k)
        d = max_degree(t)
        lam = lambda1_power_iteration(t)
        lo, hi = stevanovic_bounds(d)
        print(f"  {k:2d}   {d:4d}     {lo:.4f}    {lam:.6f}   {hi:.4f}        {lam*lam/(2*k):.4f}")
    print("  (the last column drifts toward 1: the eigenvalue behaves like sqrt(2k))")
    print()

    print("Walk growth converges to the eigenvalue (order 6, 64 vertices):")
    t6 = leaning_tree(6)
    lam6 = lambda1_power_iteration(t6)
    for half in (5, 10, 20):
        low, high = lambda1_trace_estimate(t6, half)
        root = walk_growth_estimate(t6, half)
        print(
            f"  2n={2*half:3d}   min-vertex {low:.5f}   root {root:.5f}   "
            f"max-vertex {high:.5f}   target {lam6:.5f}"
        )
    print("  (the max-based estimate approaches from below; the min-based one lags)")
    print()

    print("Bisection reaches orders far beyond explicit trees:")
    for order in (20, 100, 1000):
        lam = leaning_lambda1(order)
        print(
            f"  order {order:5d}: lambda1 = {lam:10.6f}, lambda1^2/(2k) = "
            f"{lam*lam/(2*order):.4f}   (explicit tree would need 2^{order} vertices)"
        )


if __name__ == "__main__":
    main()
