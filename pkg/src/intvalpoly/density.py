"""Polynomially-dense-subset experiments: companion families, triangular
spectra, quaternion eigenvalue matching through three-squares
decompositions, and counterexample search against density claims."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Iterator, Sequence

from .matrices import (
    Matrix,
    companion,
    eval_poly_matrix,
    is_integral_matrix,
    spectrum,
)
from .membership import member_int
from .orders import Element, Order, element_from_quaternion, eval_poly_element, quaternion_coords
from .polynomials import Poly, monic_int_polys


@dataclass
class ThreeSquares:
    n: int
    decomposition: tuple[int, int, int] | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "decomposition": list(self.decomposition) if self.decomposition else None,
        }


def three_squares(n: int) -> ThreeSquares:
    """Brute-force decomposition n = a1^2 + a2^2 + a3^2 with
    0 <= a1 <= a2 <= a3, or None when no decomposition exists."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for a1 in range(isqrt(n // 3) + 1):
        r1 = n - a1 * a1
        a2 = a1
        while 2 * a2 * a2 <= r1:
            r2 = r1 - a2 * a2
            a3 = isqrt(r2)
            if a3 * a3 == r2:
                return ThreeSquares(n, (a1, a2, a3))
            a2 += 1
    return ThreeSquares(n, None)


def hurwitz_match(q: Element) -> Element:
    """For an integral non-scalar quaternion q, produce an element of the
    hurwitz order with the same minimal polynomial X^2 - 2*q0*X + N.

    The trace coefficient is kept; the vector part is replaced by a
    three-squares decomposition of the norm it must account for. In the
    half-integer case the target is 3 mod 4, which forces every
    decomposition part odd, so the result again has valid coordinates.
    The decomposition is placed on (i, j, k) in descending order.
    """
    qc = quaternion_coords(q)
    q0, q1, q2, q3 = qc
    if q1 == 0 and q2 == 0 and q3 == 0:
        raise ValueError("scalar quaternion: nothing to match")
    if not q.is_integral():
        raise ValueError(f"quaternion is not integral: minimal polynomial {q.min_poly()}")
    norm = q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3
    assert norm.denominator == 1 and (2 * q0).denominator == 1
    order = q.order
    if q0.denominator == 1:
        u = int(norm - q0 * q0)
        dec = three_squares(u).decomposition
        if dec is None:
            raise AssertionError(f"{u} must be a sum of three squares here")
        a, b, c = sorted(dec, reverse=True)
        return element_from_quaternion(order, [q0, a, b, c])
    t = int(2 * q0)
    u = int(4 * norm) - t * t
    dec = three_squares(u).decomposition
    if dec is None:
        raise AssertionError(f"{u} must be a sum of three squares here")
    if any(x % 2 == 0 for x in dec):
        raise AssertionError(f"parts of {u} = 3 mod 4 must all be odd")
    a, b, c = sorted(dec, reverse=True)
    return element_from_quaternion(
        order, [q0, Fraction(a, 2), Fraction(b, 2), Fraction(c, 2)]
    )


def _divides_mod_p(f_asc: list[int], g_asc: list[int], p: int) -> bool:
    # remainder of f by monic g over F_p; True when zero
    rem = [c % p for c in f_asc]
    dg = len(g_asc) - 1
    while len(rem) - 1 >= dg:
        if rem[-1] == 0:
            rem.pop()
            continue
        c = rem[-1]
        shift = len(rem) - 1 - dg
        for i, b in enumerate(g_asc):
            rem[shift + i] = (rem[shift + i] - c * b) % p
        rem.pop()
    return not any(rem)


def irreducible_mod_p(f: Poly, p: int) -> bool:
    """Irreducibility of a monic integer polynomial over F_p, by trial
    division against all monic divisors of degree up to deg(f)/2."""
    if not (f.is_monic and f.is_integer and f.degree >= 1):
        raise ValueError("need a monic integer polynomial of degree >= 1")
    f_asc = [int(c) % p for c in f.coeffs]
    n = f.degree
    if n == 1:
        return True
    for deg in range(1, n // 2 + 1):
        for tail in product(range(p), repeat=deg):
            if _divides_mod_p(f_asc, [*tail, 1], p):
                return False
    return True


def certified_irreducible(f: Poly, primes: Sequence[int] = (2, 3, 5, 7)) -> bool:
    """Sufficient test only: irreducible mod some listed prime implies
    irreducible over Z; polynomials failing every modular test are
    reported not-certified even if actually irreducible."""
    return any(irreducible_mod_p(f, p) for p in primes)


def companion_family(
    n: int, height: int, irreducible_only: bool = False
) -> Iterator[Matrix]:
    """Companion matrices of all monic integer polynomials of degree n with
    lower coefficients in [-height, height]; optionally filtered to the
    ones certified irreducible by the modular test."""
    for p in monic_int_polys(n, height):
        if irreducible_only and not certified_irreducible(p):
            continue
        yield companion(p)


def triangular_spectrum(M: Matrix) -> Poly:
    """Root-set polynomial of an upper triangular matrix, read off the
    diagonal; cross-checked against the minimal-polynomial route."""
    if not M.is_upper_triangular():
        raise ValueError("matrix is not upper triangular")
    roots = sorted(set(M.diagonal_entries()))
    poly = Poly([1])
    for r in roots:
        poly = poly * Poly([-r, 1])
    via_min_poly = spectrum(M)
    if poly != via_min_poly:
        raise AssertionError(
            f"diagonal spectrum {poly} disagrees with minimal-polynomial spectrum {via_min_poly}"
        )
    return poly


def density_refute(
    f: Poly, order: Order, candidates: Sequence[Element]
) -> Element | None:
    """Witness that the order is not polynomially dense in its integral
    elements: when f maps the order into itself but sends some integral
    candidate to a non-integral value, that candidate is returned."""
    for b in candidates:
        if not b.is_integral():
            raise ValueError(f"candidate {b!r} is not integral")
    if member_int(f, order).verdict != "yes":
        return None
    for b in candidates:
        if not eval_poly_element(f, b).is_integral():
            return b
    return None


def builtin_candidates(order: Order) -> list[Element]:
    """Shipped refutation candidates for the bundled quadratic and
    quaternion examples."""
    half = Fraction(1, 2)
    if order.name == "quadratic(-3)":
        return [order.element([half, half])]
    if order.name == "lipschitz":
        return [order.element([half, half, half, half])]
    raise ValueError(f"no shipped candidates for order {order.name!r}")


def spectrum_transfer_check(
    f: Poly, pairs: Sequence[tuple[Matrix, Matrix]]
) -> bool:
    """Integrality of f-values depends only on the root set: for each pair
    of matrices with equal spectra, f must be integral at both or at
    neither. Pairs with unequal spectra are rejected."""
    for M, N in pairs:
        if spectrum(M) != spectrum(N):
            raise ValueError("pair has unequal spectra")
        left = is_integral_matrix(eval_poly_matrix(f, M))
        right = is_integral_matrix(eval_poly_matrix(f, N))
        if left != right:
            return False
    return True


__all__ = [
    "ThreeSquares",
    "three_squares",
    "hurwitz_match",
    "irreducible_mod_p",
    "certified_irreducible",
    "companion_family",
    "triangular_spectrum",
    "density_refute",
    "builtin_candidates",
    "spectrum_transfer_check",
]
