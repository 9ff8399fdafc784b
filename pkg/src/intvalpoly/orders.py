"""Finite-rank unital associative rings over Z given by structure constants.

An order here is a free Z-module on a finite basis with an integer
multiplication table; tensoring with Q gives the ambient rational algebra.
An element belongs to the order exactly when all of its coordinates are
integers, which makes membership decidable by inspection.

Associativity and the unit law are verified on every basis triple at
construction time: a silently broken table would corrupt every check built
on top, and ranks are small enough that the full verification is cheap.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .matrices import Matrix, minimal_polynomial
from .polynomials import Poly, RatLike, rat, rat_str


class Order:
    __slots__ = (
        "rank",
        "labels",
        "sc",
        "unity",
        "spectral_degree",
        "natural_rep",
        "name",
        "_mult",
    )

    def __init__(
        self,
        rank: int,
        labels: Sequence[str],
        structure_constants: Sequence[Sequence[Sequence[int]]],
        unity: Sequence[int],
        spectral_degree: int | None = None,
        natural_rep: Sequence[Matrix] | None = None,
        name: str = "custom",
    ):
        if rank < 1:
            raise ValueError("rank must be positive")
        if len(labels) != rank:
            raise ValueError(f"expected {rank} labels, got {len(labels)}")
        sc = tuple(
            tuple(tuple(int(c) for c in row) for row in plane)
            for plane in structure_constants
        )
        if len(sc) != rank or any(
            len(plane) != rank or any(len(row) != rank for row in plane) for plane in sc
        ):
            raise ValueError("structure constants must form a rank^3 integer array")
        unity_t = tuple(int(u) for u in unity)
        if len(unity_t) != rank:
            raise ValueError(f"unity vector must have length {rank}")

        self.rank = rank
        self.labels = tuple(str(s) for s in labels)
        self.sc = sc
        self.unity = unity_t
        self.spectral_degree = int(spectral_degree) if spectral_degree else rank
        self.natural_rep = tuple(natural_rep) if natural_rep else None
        self.name = name
        # sparse multiplication table: _mult[i][j] = ((k, c), ...) over nonzero c
        self._mult = tuple(
            tuple(tuple((k, c) for k, c in enumerate(sc[i][j]) if c) for j in range(rank))
            for i in range(rank)
        )
        if self.natural_rep is not None:
            dim = self.natural_rep[0].n
            if len(self.natural_rep) != rank or any(m.n != dim for m in self.natural_rep):
                raise ValueError("natural representation needs one dim x dim matrix per basis element")
        self._verify_table()

    def _verify_table(self) -> None:
        r = self.rank
        sc = self.sc

        def basis_mul_vec(vec: Sequence[int], k: int) -> list[int]:
            # (sum_m vec[m] e_m) * e_k
            out = [0] * r
            for m, c in enumerate(vec):
                if c:
                    row = sc[m][k]
                    for t in range(r):
                        if row[t]:
                            out[t] += c * row[t]
            return out

        for i in range(r):
            for j in range(r):
                ij = sc[i][j]
                for k in range(r):
                    left = basis_mul_vec(ij, k)
                    right = [
                        sum(sc[j][k][m] * sc[i][m][t] for m in range(r) if sc[j][k][m])
                        for t in range(r)
                    ]
                    if left != right:
                        raise ValueError(
                            f"structure constants are not associative at basis triple "
                            f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                        )
        for j in range(r):
            left = [
                sum(self.unity[i] * sc[i][j][t] for i in range(r)) for t in range(r)
            ]
            right = [
                sum(self.unity[k] * sc[j][k][t] for k in range(r)) for t in range(r)
            ]
            expect = [1 if t == j else 0 for t in range(r)]
            if left != expect or right != expect:
                raise ValueError(
                    f"unity vector does not act as a two-sided identity on basis element {self.labels[j]}"
                )

    # -- elements ---------------------------------------------------------

    def element(self, coords: Iterable[RatLike]) -> "Element":
        return Element(self, coords)

    def basis_element(self, i: int) -> "Element":
        return Element(self, [1 if j == i else 0 for j in range(self.rank)])

    @property
    def one(self) -> "Element":
        return Element(self, self.unity)

    @property
    def zero(self) -> "Element":
        return Element(self, [0] * self.rank)

    def residues(self, m: int) -> Iterator["Element"]:
        """One representative per class of the order modulo m, coordinates
        in [0, m), in lexicographic order; exactly m**rank elements."""
        if m < 1:
            raise ValueError("modulus must be positive")
        for coords in product(range(m), repeat=self.rank):
            yield Element(self, coords)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        out: dict = {
            "rank": self.rank,
            "labels": list(self.labels),
            "unity": list(self.unity),
            "structure_constants": [
                [[c for c in row] for row in plane] for plane in self.sc
            ],
            "spectral_degree": self.spectral_degree,
        }
        if self.natural_rep is not None:
            out["natural_rep"] = {
                "dim": self.natural_rep[0].n,
                "basis_images": [m.to_strings() for m in self.natural_rep],
            }
        return out

    @classmethod
    def from_json(cls, data: dict, name: str = "custom") -> "Order":
        natural = None
        if data.get("natural_rep"):
            natural = [Matrix(m) for m in data["natural_rep"]["basis_images"]]
        return cls(
            rank=data["rank"],
            labels=data["labels"],
            structure_constants=data["structure_constants"],
            unity=data["unity"],
            spectral_degree=data.get("spectral_degree"),
            natural_rep=natural,
            name=name,
        )

    def __repr__(self) -> str:
        return f"Order({self.name!r}, rank={self.rank})"


class Element:
    """Rational coordinate vector over an order's basis.

    Integer coordinates mean the element lies in the order itself;
    otherwise it lives in the rational algebra the order spans.
    """

    __slots__ = ("order", "coords")

    def __init__(self, order: Order, coords: Iterable[RatLike]):
        cs = tuple(rat(c) for c in coords)
        if len(cs) != order.rank:
            raise ValueError(f"expected {order.rank} coordinates, got {len(cs)}")
        self.order = order
        self.coords = cs

    def _check_same(self, other: "Element") -> None:
        if self.order is not other.order:
            raise ValueError(
                f"elements from different orders: {self.order!r} vs {other.order!r}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.order is other.order and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((id(self.order), self.coords))

    def __neg__(self) -> "Element":
        return Element(self.order, (-c for c in self.coords))

    def __add__(self, other: "Element") -> "Element":
        self._check_same(other)
        return Element(self.order, (a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._check_same(other)
        return Element(self.order, (a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_same(other)
            r = self.order.rank
            out = [Fraction(0)] * r
            mult = self.order._mult
            for i, a in enumerate(self.coords):
                if a:
                    row = mult[i]
                    for j, b in enumerate(other.coords):
                        if b:
                            ab = a * b
                            for k, c in row[j]:
                                out[k] += c * ab
            return Element(self.order, out)
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return Element(self.order, (c * a for a in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    @property
    def is_in_order(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def regular_rep(self) -> Matrix:
        """Matrix of left multiplication on the order's own basis."""
        r = self.order.rank
        cols = [(self * self.order.basis_element(j)).coords for j in range(r)]
        return Matrix([[cols[j][i] for j in range(r)] for i in range(r)])

    def rep_matrix(self) -> Matrix:
        """Faithful matrix form: the designated natural representation when
        the order carries one, else left multiplication on the basis."""
        nat = self.order.natural_rep
        if nat is None:
            return self.regular_rep()
        acc = Matrix.zeros(nat[0].n)
        for c, img in zip(self.coords, nat):
            if c:
                acc = acc + c * img
        return acc

    def min_poly(self) -> Poly:
        """Monic generator of the ideal of polynomials vanishing at this
        element; independent of the faithful representation used."""
        return minimal_polynomial(self.rep_matrix())

    def is_integral(self) -> bool:
        """True when the element solves a monic integer polynomial."""
        return self.min_poly().is_integer

    def to_strings(self) -> list[str]:
        return [rat_str(c) for c in self.coords]

    def __repr__(self) -> str:
        terms = [
            f"{rat_str(c)}*{lbl}"
            for c, lbl in zip(self.coords, self.order.labels)
            if c
        ]
        return " + ".join(terms) if terms else "0"


def eval_poly_element(f: Poly, x: Element) -> Element:
    """f(x) in the rational algebra, scalars acting through the unity."""
    order = x.order
    acc = order.zero
    for c in reversed(f.coeffs):
        acc = acc * x + c * order.one
    return acc


# -- built-in orders -------------------------------------------------------


def integers() -> Order:
    return Order(1, ["1"], [[[1]]], [1], name="integers")


def quadratic(m: int) -> Order:
    """Z[s] with s^2 = m, on the basis (1, s)."""
    sc = [
        [[1, 0], [0, 1]],
        [[0, 1], [m, 0]],
    ]
    return Order(2, ["1", "s"], sc, [1, 0], name=f"quadratic({m})")


def quadratic_half(m: int) -> Order:
    """Z[t] with t = (1 + sqrt(m))/2, requiring m = 1 mod 4; t^2 = t + (m-1)/4."""
    if m % 4 != 1:
        raise ValueError(f"half-integer quadratic order needs m = 1 mod 4, got {m}")
    q = (m - 1) // 4
    sc = [
        [[1, 0], [0, 1]],
        [[0, 1], [q, 1]],
    ]
    return Order(2, ["1", "t"], sc, [1, 0], name=f"quadratic_half({m})")


def _qmul(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


_LIPSCHITZ_BASIS = tuple(
    tuple(Fraction(v) for v in row)
    for row in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
)
# basis 1, i, j, w with w = (1 + i + j + k)/2
_HALF = Fraction(1, 2)
_HURWITZ_BASIS = _LIPSCHITZ_BASIS[:3] + ((_HALF, _HALF, _HALF, _HALF),)


def _quaternion_order(
    basis: tuple[tuple[Fraction, ...], ...],
    to_coords,
    labels: Sequence[str],
    unity: Sequence[int],
    name: str,
) -> Order:
    r = len(basis)
    sc = []
    for i in range(r):
        plane = []
        for j in range(r):
            prod_coords = to_coords(_qmul(basis[i], basis[j]))
            if any(c.denominator != 1 for c in prod_coords):
                raise AssertionError(f"non-integer structure constant in {name}")
            plane.append([int(c) for c in prod_coords])
        sc.append(plane)
    return Order(r, labels, sc, unity, name=name)


def _hurwitz_coords(q: Sequence[Fraction]) -> tuple[Fraction, ...]:
    q0, q1, q2, q3 = q
    return (q0 - q3, q1 - q3, q2 - q3, 2 * q3)


def _lipschitz_coords(q: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(q)


def lipschitz() -> Order:
    """Quaternions with integer coordinates, on the basis (1, i, j, k)."""
    return _quaternion_order(
        _LIPSCHITZ_BASIS, _lipschitz_coords, ["1", "i", "j", "k"], [1, 0, 0, 0], "lipschitz"
    )


def hurwitz() -> Order:
    """Quaternions with all-integer or all-half-integer coordinates,
    rebased on (1, i, j, w), w = (1+i+j+k)/2, so that membership is
    integrality of coordinates."""
    return _quaternion_order(
        _HURWITZ_BASIS, _hurwitz_coords, ["1", "i", "j", "w"], [1, 0, 0, 0], "hurwitz"
    )


def quaternion_coords(x: Element) -> tuple[Fraction, ...]:
    """Coordinates of a lipschitz- or hurwitz-order element on (1, i, j, k)."""
    base = _quaternion_basis_of(x.order)
    acc = (Fraction(0),) * 4
    for c, vec in zip(x.coords, base):
        acc = tuple(a + c * v for a, v in zip(acc, vec))
    return acc


def element_from_quaternion(order: Order, q: Sequence[RatLike]) -> Element:
    """Element of a lipschitz- or hurwitz-basis order from (1, i, j, k) coordinates."""
    qq = tuple(rat(v) for v in q)
    if len(qq) != 4:
        raise ValueError("quaternion coordinates need exactly 4 entries")
    base = _quaternion_basis_of(order)
    if base is _HURWITZ_BASIS:
        return Element(order, _hurwitz_coords(qq))
    return Element(order, qq)


def _quaternion_basis_of(order: Order):
    if order.name == "hurwitz":
        return _HURWITZ_BASIS
    if order.name == "lipschitz":
        return _LIPSCHITZ_BASIS
    raise ValueError(f"order {order.name!r} has no quaternion coordinate chart")


def matrix_order(k: int) -> Order:
    """Full k x k integer matrices on the basis of matrix units."""
    if k < 1:
        raise ValueError("matrix order needs k >= 1")
    pairs = [(a, b) for a in range(k) for b in range(k)]
    return _matrix_units_order(k, pairs, f"matrix({k})")


def triangular_order(k: int) -> Order:
    """Upper triangular k x k integer matrices on the matrix-unit basis."""
    if k < 1:
        raise ValueError("triangular order needs k >= 1")
    pairs = [(a, b) for a in range(k) for b in range(a, k)]
    return _matrix_units_order(k, pairs, f"triangular({k})")


def _matrix_units_order(k: int, pairs: list[tuple[int, int]], name: str) -> Order:
    index = {p: n for n, p in enumerate(pairs)}
    r = len(pairs)
    sc = [[[0] * r for _ in range(r)] for _ in range(r)]
    for n1, (a, b) in enumerate(pairs):
        for n2, (c, d) in enumerate(pairs):
            if b == c:
                sc[n1][n2][index[(a, d)]] = 1
    unity = [0] * r
    for a in range(k):
        unity[index[(a, a)]] = 1
    images = []
    for a, b in pairs:
        images.append(Matrix([[1 if (i, j) == (a, b) else 0 for j in range(k)] for i in range(k)]))
    labels = [f"E{a + 1}{b + 1}" for a, b in pairs]
    return Order(r, labels, sc, unity, spectral_degree=k, natural_rep=images, name=name)


_BUILTIN_PLAIN = {
    "integers": integers,
    "lipschitz": lipschitz,
    "hurwitz": hurwitz,
}
_BUILTIN_PARAM = {
    "quadratic": quadratic,
    "quadratic_half": quadratic_half,
    "matrix": matrix_order,
    "triangular": triangular_order,
}


def builtin_names() -> list[str]:
    return sorted(_BUILTIN_PLAIN) + sorted(f"{k}(<int>)" for k in _BUILTIN_PARAM)


@lru_cache(maxsize=None)
def builtin(name: str) -> Order:
    """Look up a built-in order: integers, lipschitz, hurwitz,
    quadratic(m), quadratic_half(m), matrix(k), triangular(k)."""
    key = name.strip()
    if key in _BUILTIN_PLAIN:
        return _BUILTIN_PLAIN[key]()
    m = re.fullmatch(r"([a-z_]+)\((-?\d+)\)", key)
    if m and m.group(1) in _BUILTIN_PARAM:
        return _BUILTIN_PARAM[m.group(1)](int(m.group(2)))
    raise ValueError(f"unknown order {name!r}; built-ins: {', '.join(builtin_names())}")


__all__ = [
    "Order",
    "Element",
    "eval_poly_element",
    "integers",
    "quadratic",
    "quadratic_half",
    "lipschitz",
    "hurwitz",
    "matrix_order",
    "triangular_order",
    "quaternion_coords",
    "element_from_quaternion",
    "builtin",
    "builtin_names",
]
