"""Small exact-rational helpers.

Vectors are plain tuples whose entries are ``int`` or ``Fraction``; the two
compare and hash consistently, so mixed tuples are fine as set members.
Matrix work that only happens at construction time goes through sympy.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import sympy

Number = "int | Fraction"
Vector = tuple


def normalize(x):
    """Return ``x`` as an ``int`` when integral, else as a ``Fraction``."""
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def vector(xs: Iterable) -> tuple:
    return tuple(normalize(Fraction(x) if isinstance(x, str) else x) for x in xs)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} != {len(v)}")
    return normalize(sum(a * b for a, b in zip(u, v)))


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(normalize(a + b) for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(normalize(a - b) for a, b in zip(u, v))


def scale(c, v: Sequence) -> tuple:
    return tuple(normalize(c * a) for a in v)


def is_integral(v: Sequence) -> bool:
    return all(Fraction(a).denominator == 1 for a in v)


def common_denominator(vs: Iterable[Sequence]) -> int:
    d = 1
    for v in vs:
        for a in v:
            q = Fraction(a).denominator
            d = d * q // _gcd(d, q)
    return d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def to_sympy(rows: Sequence[Sequence]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(Fraction(a).numerator, Fraction(a).denominator)
                          for a in row] for row in rows])


def from_sympy(entry) -> int | Fraction:
    r = sympy.Rational(entry)
    return normalize(Fraction(int(r.p), int(r.q)))


def inverse(rows: Sequence[Sequence]) -> tuple[tuple, ...]:
    m = to_sympy(rows).inv()
    return tuple(tuple(from_sympy(m[i, j]) for j in range(m.cols)) for i in range(m.rows))


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of {x : row . x = 0 for every row}."""
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(ncols)) for i in range(ncols)]
    basis = to_sympy(rows).nullspace()
    return [tuple(from_sympy(b[i]) for i in range(ncols)) for b in basis]


def solve_in_span(basis: Sequence[Sequence], v: Sequence) -> tuple | None:
    """Coefficients c with sum c_i basis_i == v, or None when v is outside the span.

    ``basis`` must be linearly independent.
    """
    a = to_sympy(basis).T
    b = to_sympy([v]).T
    try:
        sol, params = a.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        raise ValueError("basis is not linearly independent")
    return tuple(from_sympy(sol[i]) for i in range(sol.rows))


def rank(rows: Sequence[Sequence]) -> int:
    return to_sympy(rows).rank() if rows else 0
