"""Exact rational square matrices and their annihilating polynomials.

Spectra (root sets in an algebraic closure) are represented throughout by
monic squarefree rational polynomials, never by numerical roots: two root
sets are equal exactly when the squarefree polynomials are equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .polynomials import Poly, RatLike, rat, rat_str, squarefree_part


class Matrix:
    """Dense n x n matrix over Q."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[RatLike]]):
        rs = tuple(tuple(rat(e) for e in row) for row in rows)
        if not rs:
            raise ValueError("matrix must have dimension at least 1")
        n = len(rs)
        for row in rs:
            if len(row) != n:
                raise ValueError(f"matrix is not square: {n} rows, a row of length {len(row)}")
        self.n = n
        self.rows = rs

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[RatLike]) -> "Matrix":
        es = [rat(e) for e in entries]
        n = len(es)
        return cls([[es[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_strings(cls, rows: Iterable[Iterable[str]]) -> "Matrix":
        return cls(rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __neg__(self) -> "Matrix":
        return Matrix([[-e for e in row] for row in self.rows])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._check_dim(other)
            cols = list(zip(*other.rows))
            return Matrix(
                [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
            )
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return Matrix([[c * e for e in row] for row in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def _check_dim(self, other: "Matrix") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.n)), Fraction(0))

    @property
    def is_integer(self) -> bool:
        return all(e.denominator == 1 for row in self.rows for e in row)

    def is_upper_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(i))

    def diagonal_entries(self) -> tuple[Fraction, ...]:
        return tuple(self.rows[i][i] for i in range(self.n))

    def to_strings(self) -> list[list[str]]:
        return [[rat_str(e) for e in row] for row in self.rows]

    def __repr__(self) -> str:
        return f"Matrix({self.to_strings()})"


def minimal_polynomial(M: Matrix) -> Poly:
    """Monic annihilating polynomial of least degree.

    Finds the first linear dependence among the flattened powers
    I, M, M^2, ... by exact Gaussian elimination; the dependence
    coefficients are the polynomial. Degree is capped at n.
    """
    n = M.n
    echelon: list[tuple[int, list[Fraction], list[Fraction]]] = []
    power = Matrix.identity(n)
    for k in range(n + 1):
        vec = [e for row in power.rows for e in row]
        combo = [Fraction(0)] * k + [Fraction(1)]
        for pivot, evec, ecombo in echelon:
            c = vec[pivot]
            if c:
                vec = [a - c * b for a, b in zip(vec, evec)]
                # ecombo is nonzero only at indices below k
                for i, b in enumerate(ecombo):
                    if b:
                        combo[i] -= c * b
        pivot = next((i for i, v in enumerate(vec) if v), None)
        if pivot is None:
            # combo[k] stayed 1: reductions only touch lower indices
            return Poly(combo)
        scale = vec[pivot]
        vec = [v / scale for v in vec]
        combo = [c / scale for c in combo]
        echelon.append((pivot, vec, combo))
        power = power * M
    raise AssertionError("no dependence among I..M^n; broken invariant")


def characteristic_polynomial(M: Matrix) -> Poly:
    """Monic degree-n characteristic polynomial by the exact
    trace recurrence (division only by the step index)."""
    n = M.n
    coeffs_desc = [Fraction(1)]
    N = Matrix.identity(n)
    for k in range(1, n + 1):
        MN = M * N
        ck = -MN.trace() / k
        coeffs_desc.append(ck)
        N = MN + ck * Matrix.identity(n)
    return Poly(reversed(coeffs_desc))


def eval_poly_matrix(f: Poly, M: Matrix) -> Matrix:
    """f(M), scalars acting as scalar matrices; Horner scheme."""
    n = M.n
    acc = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for c in reversed(f.coeffs):
        acc = acc * M + c * ident
    return acc


def is_integral_matrix(M: Matrix) -> bool:
    """True when the minimal polynomial has integer coefficients,
    i.e. M solves some monic integer polynomial."""
    return minimal_polynomial(M).is_integer


def spectrum(M: Matrix) -> Poly:
    """Monic squarefree polynomial whose roots are the eigenvalues of M."""
    return squarefree_part(minimal_polynomial(M))


def companion(p: Poly) -> Matrix:
    """Companion matrix of a monic p with deg p >= 1; its characteristic
    and minimal polynomials both equal p."""
    if p.degree < 1:
        raise ValueError("companion matrix needs degree at least 1")
    if not p.is_monic:
        raise ValueError("companion matrix needs a monic polynomial")
    n = p.degree
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][n - 1] = -p.coefficient(i)
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    return Matrix(rows)


def image_spectrum(s: Poly, f: Poly) -> Poly:
    """Monic squarefree polynomial whose roots are f(alpha) over the roots
    alpha of s.

    Computed by evaluating f at the companion matrix of s; equal to the
    resultant Res_Y(s(Y), X - f(Y)) up to squarefree normalization.
    """
    if s.degree < 1:
        raise ValueError("spectrum polynomial must have degree at least 1")
    if not s.is_monic:
        raise ValueError("spectrum polynomial must be monic")
    C = companion(s)
    return squarefree_part(characteristic_polynomial(eval_poly_matrix(f, C)))


__all__ = [
    "Matrix",
    "minimal_polynomial",
    "characteristic_polynomial",
    "eval_poly_matrix",
    "is_integral_matrix",
    "spectrum",
    "companion",
    "image_spectrum",
]
