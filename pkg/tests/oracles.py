"""Brute-force references that share no code with the package internals."""
from fractions import Fraction
from itertools import product as cartesian


def divides(g, a):
    return all(x <= y for x, y in zip(g, a))


def member(gens, a):
    return any(divides(g, a) for g in gens)


def minimal(gens):
    gens = set(map(tuple, gens))
    return sorted(g for g in gens if not any(h != g and divides(h, g) for h in gens))


def power(gens, n):
    cur = [tuple(0 for _ in gens[0])]
    for _ in range(n):
        cur = minimal(tuple(x + y for x, y in zip(a, g)) for a in cur for g in gens)
    return cur


def box(bounds):
    return cartesian(*[range(b) for b in bounds])


def colength(gens, d):
    """Count standard monomials, bounding the box by the pure powers."""
    bounds = [min(g[i] for g in gens if all(g[j] == 0 for j in range(d) if j != i)) for i in range(d)]
    return sum(1 for a in box(bounds) if not member(gens, a))


def in_newton_2d(gens, a, n=1):
    """Is ``a`` in ``n * (conv(gens) + R^2_{>=0})``? Planar geometry, no LP."""
    pts = [(n * g[0], n * g[1]) for g in gens]
    if member(pts, a):
        return True
    for g in pts:
        for h in pts:
            if g[0] < h[0] and g[1] > h[1]:
                lo = max(Fraction(0), Fraction(g[1] - a[1], g[1] - h[1]))
                hi = min(Fraction(1), Fraction(a[0] - g[0], h[0] - g[0]))
                if lo <= hi:
                    return True
    return False


def lagrange_eval(xs, ys, x):
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Fraction(yi)
        for j, xj in enumerate(xs):
            if j != i:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total
