"""Exact rational scalars and dense univariate polynomial arithmetic.

Scalars are `fractions.Fraction` values (arbitrary precision, always stored
reduced with positive denominator). Nothing in this package ever touches
floating point: every predicate downstream is about exact integrality of
coefficients and would be destroyed by rounding.

Polynomials are stored dense, ascending by degree, with no trailing zero
coefficients. Degrees stay small (a few hundred at worst for certificate
products), so dense storage is the simple right choice.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Iterator, Union

RatLike = Union[Fraction, int, str]


def rat(x: RatLike) -> Fraction:
    """Coerce an int, a "num/den" string, or a Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_str(x: Fraction) -> str:
    """Render a rational as "num" or "num/den"."""
    return str(x)


class Poly:
    """Univariate polynomial over Q.

    Coefficients ascend by degree; the zero polynomial stores an empty
    tuple and reports degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, c: RatLike, e: int) -> "Poly":
        return cls([0] * e + [c])

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "Poly":
        return cls(rat(s) for s in strings)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_integer(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.coeffs)

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        out = Poly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        # field division: any nonzero divisor works
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            c = rem[-1] / lead
            shift = len(rem) - 1 - d
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] -= c * b
            rem.pop()
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x: RatLike) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(X)), by Horner over polynomials."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial to monic")
        lead = self.leading
        if lead == 1:
            return self
        return Poly(c / lead for c in self.coeffs)

    def to_strings(self) -> list[str]:
        if self.is_zero:
            return ["0"]
        return [rat_str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = rat_str(mag)
            else:
                var = "X" if i == 1 else f"X^{i}"
                body = var if mag == 1 else f"{rat_str(mag)}{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({[rat_str(c) for c in self.coeffs]})"


def _coerce(x) -> "Poly":
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([x])
    return NotImplemented


X = Poly([0, 1])
ONE = Poly([1])
ZERO = Poly()


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Divide f by a monic g of degree >= 1; returns (quotient, remainder).

    Exact: f == g*quotient + remainder with deg(remainder) < deg(g).
    """
    if g.degree < 1:
        raise ValueError("divisor must have degree at least 1")
    if not g.is_monic:
        raise ValueError(f"divisor must be monic, got leading coefficient {g.leading}")
    return divmod(f, g)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor, by the Euclidean algorithm.

    Each remainder step renormalizes to monic; coefficient growth is
    acceptable at the degrees used here.
    """
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic()


def squarefree_part(f: Poly) -> Poly:
    """Monic polynomial with the same roots as f, each simple.

    Computed as f / gcd(f, f'); valid in characteristic zero.
    """
    if f.is_zero:
        raise ValueError("squarefree part of the zero polynomial is undefined")
    if f.degree == 0:
        return ONE
    g = poly_gcd(f, f.derivative())
    return (f // g).monic()


def normalize(f: Poly) -> tuple[Poly, int]:
    """Write f = g/d with g an integer polynomial and d minimal positive.

    d is the lcm of the (reduced) coefficient denominators; no attempt is
    made to cancel content of g against d beyond that minimality.
    """
    d = 1
    for c in f.coeffs:
        d = lcm(d, c.denominator)
    return f * d, d


def binomial_poly(k: int) -> Poly:
    """The degree-k binomial-coefficient polynomial X(X-1)...(X-k+1)/k!."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = ONE
    for i in range(k):
        p = p * Poly([-i, 1])
    return p * Fraction(1, factorial(k))


def monic_int_polys(degree: int, height: int) -> Iterator[Poly]:
    """All monic integer polynomials of the given degree with lower
    coefficients in [-height, height], in lexicographic coefficient order."""
    from itertools import product

    if degree < 1:
        raise ValueError("degree must be at least 1")
    for tail in product(range(-height, height + 1), repeat=degree):
        yield Poly([*tail, 1])


__all__ = [
    "Fraction",
    "Poly",
    "X",
    "ONE",
    "ZERO",
    "rat",
    "rat_str",
    "poly_divmod",
    "poly_gcd",
    "squarefree_part",
    "normalize",
    "binomial_poly",
    "monic_int_polys",
]
