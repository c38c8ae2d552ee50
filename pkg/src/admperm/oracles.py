"""Slow independent checks used to cross-examine the fast paths."""
from __future__ import annotations

import itertools
from fractions import Fraction

from .exact import dot, solve_in_span, sub, vector


def _det(rows) -> Fraction:
    rows = [list(map(Fraction, r)) for r in rows]
    n, sign, out = len(rows), 1, Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        out *= rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] / rows[c][c]
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return sign * out


def _normal(edges: list, d: int) -> tuple:
    """Generalized cross product of d - 1 vectors in Q^d (zero when dependent)."""
    if d == 1:
        return (Fraction(1),)
    return tuple((-1) ** i * _det([[e[j] for j in range(d) if j != i] for e in edges]) for i in range(d))


class Hull:
    """Convex hull of finitely many rational points, as facet inequalities found by brute force.

    A facet is a hyperplane through d affinely independent points with every point on one
    side.  This knows nothing about Weyl groups, which is the point.
    """

    def __init__(self, points):
        self.points = sorted(set(vector(p) for p in points))
        self.origin = self.points[0]
        self.basis = []
        for p in self.points[1:]:
            e = sub(p, self.origin)
            if solve_in_span(self.basis, e) is None if self.basis else any(e):
                self.basis.append(e)
        self.dim = len(self.basis)
        local = [self._local(p) for p in self.points]
        self.facets = set()
        if self.dim == 0:
            return
        for simplex in itertools.combinations(local, self.dim):
            n = _normal([sub(q, simplex[0]) for q in simplex[1:]], self.dim)
            if not any(n):
                continue
            off = dot(n, simplex[0])
            vals = [dot(n, q) for q in local]
            if all(v <= off for v in vals):
                self.facets.add((n, off))
            elif all(v >= off for v in vals):
                self.facets.add((tuple(-a for a in n), -off))

    def _local(self, p):
        if not self.basis:
            return () if p == self.origin else None
        return solve_in_span(self.basis, sub(vector(p), self.origin))

    def contains(self, v) -> bool:
        c = self._local(v)
        if c is None:
            return False
        return all(dot(n, c) <= off for n, off in self.facets)


def hull_contains(points, v) -> bool:
    return Hull(points).contains(v)
