"""Exact feasibility for small linear programs over the rationals.

Phase-one simplex on a dense :class:`fractions.Fraction` tableau with Bland's
rule, so it always terminates and never rounds.
"""
from __future__ import annotations

from fractions import Fraction


def feasible_point(A_eq, b_eq):
    """Return some ``x >= 0`` with ``A_eq x = b_eq``, or ``None`` if none exists.

    Rows with negative right-hand side are negated first. Entries may be ints
    or Fractions; the returned point is a list of Fractions.
    """
    m = len(A_eq)
    if m == 0:
        return []
    n = len(A_eq[0])
    rows = []
    for row, b in zip(A_eq, b_eq):
        if len(row) != n:
            raise ValueError("ragged constraint matrix")
        row = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            row, b = [-v for v in row], -b
        rows.append(row + [Fraction(int(i == len(rows))) for i in range(m)] + [b])

    width = n + m
    basis = list(range(n, n + m))
    # reduced costs of the phase-one objective (sum of artificials)
    cost = [-sum(r[j] for r in rows) for j in range(width)] + [-sum(r[-1] for r in rows)]
    for j in range(n, width):
        cost[j] = Fraction(0)

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[-1] / r[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded direction; cannot happen in phase one
            break
        _pivot(rows, cost, best[1], enter)
        basis[best[1]] = enter

    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    return x[:n]


def _pivot(rows, cost, r, c):
    piv = rows[r][c]
    pr = [v / piv for v in rows[r]]
    rows[r] = pr
    for i, row in enumerate(rows):
        if i != r and row[c] != 0:
            f = row[c]
            rows[i] = [a - f * b for a, b in zip(row, pr)]
    f = cost[c]
    if f != 0:
        cost[:] = [a - f * b for a, b in zip(cost, pr)]


def convex_dominance_weights(vertices, point):
    """Weights ``lam >= 0`` with ``sum(lam) == 1`` and ``sum(lam_j v_j) <= point``.

    Returns the weight list, or ``None`` when ``point`` is outside
    ``conv(vertices) + R^d_{>=0}``.
    """
    vertices = [tuple(v) for v in vertices]
    if not vertices:
        return None
    d = len(point)
    k = len(vertices)
    # variables: lam_1..lam_k, slack_1..slack_d
    A = []
    b = []
    for i in range(d):
        A.append([v[i] for v in vertices] + [int(j == i) for j in range(d)])
        b.append(point[i])
    A.append([1] * k + [0] * d)
    b.append(1)
    x = feasible_point(A, b)
    return None if x is None else x[:k]
