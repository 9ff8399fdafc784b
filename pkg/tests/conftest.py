"""Shared generators and sympy conversion helpers for the test suite.

sympy is used only as an independent oracle: conversions go through exact
rationals, and oracle computations never call back into the package code
they are checking.
"""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from intvalpoly import Matrix, Poly

SX = sympy.symbols("X")


def rand_rational(rng: random.Random, bound: int = 5, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def rand_matrix(rng: random.Random, n: int, bound: int = 5, max_den: int = 4) -> Matrix:
    return Matrix([[rand_rational(rng, bound, max_den) for _ in range(n)] for _ in range(n)])


def rand_int_matrix(rng: random.Random, n: int, bound: int = 5) -> Matrix:
    return Matrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def rand_poly(rng: random.Random, max_deg: int = 4, bound: int = 5, max_den: int = 4) -> Poly:
    deg = rng.randint(0, max_deg)
    return Poly([rand_rational(rng, bound, max_den) for _ in range(deg + 1)])


def rand_monic_int_poly(rng: random.Random, deg: int, bound: int = 5) -> Poly:
    return Poly([rng.randint(-bound, bound) for _ in range(deg)] + [1])


def to_sympy_matrix(M: Matrix) -> sympy.Matrix:
    return sympy.Matrix(
        [[sympy.Rational(e.numerator, e.denominator) for e in row] for row in M.rows]
    )


def to_sympy_poly(p: Poly) -> sympy.Expr:
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * SX**i for i, c in enumerate(p.coeffs)),
        sympy.Integer(0),
    )


def sympy_poly_coeffs(expr: sympy.Expr) -> list[Fraction]:
    poly = sympy.Poly(sympy.expand(expr), SX)
    coeffs = list(reversed(poly.all_coeffs()))
    return [Fraction(int(c.p), int(c.q)) for c in [sympy.Rational(c) for c in coeffs]]
