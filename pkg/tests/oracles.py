"""Brute-force oracles on the integer grid, written on plain int tuples.

Nothing here imports the package, so these stay independent of the code
under test.
"""
from __future__ import annotations

from itertools import product

E = 10
GRID = [(i, j) for i in range(E + 1) for j in range(E + 1)]
TOP, BOTTOM = (0, E), (E, 0)


def g_leq(a, b):
    return b[0] <= a[0] and a[1] <= b[1]


def g_meet(a, b):
    return (max(a[0], b[0]), min(a[1], b[1]))


def g_join(a, b):
    return (min(a[0], b[0]), max(a[1], b[1]))


def g_join_all(xs):
    return (min(x[0] for x in xs), max(x[1] for x in xs))


def grid_implies(a, b):
    """Join of every grid point x with x & a <= b."""
    return g_join_all([x for x in GRID if g_leq(g_meet(x, a), b)])


def grid_complemented():
    return {
        a for a in GRID
        if any(g_meet(a, c) == BOTTOM and g_join(a, c) == TOP for c in GRID)
    }


def grid_join_irreducible():
    out = set()
    for a in GRID:
        if a == BOTTOM:
            continue
        if not any(g_join(p, q) == a for p, q in product(GRID, GRID) if p != a and q != a):
            out.add(a)
    return out


def grid_meet_irreducible():
    return {
        a for a in GRID
        if not any(g_meet(p, q) == a for p, q in product(GRID, GRID) if p != a and q != a)
    }


def grid_prime():
    """p with u & v <= p implying u <= p or v <= p, for all grid u, v."""
    out = set()
    for p in GRID:
        below = [g_leq(u, p) for u in GRID]
        ok = True
        for i, u in enumerate(GRID):
            if below[i]:
                continue
            for j, v in enumerate(GRID):
                if not below[j] and g_leq(g_meet(u, v), p):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(p)
    return out
