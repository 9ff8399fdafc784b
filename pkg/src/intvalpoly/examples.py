"""End-to-end worked examples on the built-in orders, with machine-checkable
assertions. Each runner returns a report dict {example, ok, assertions};
an assertion is {name, ok, ...detail}."""

from __future__ import annotations

import random
from fractions import Fraction

from .density import (
    builtin_candidates,
    density_refute,
    hurwitz_match,
    spectrum_transfer_check,
    triangular_spectrum,
)
from .matrices import (
    Matrix,
    companion,
    eval_poly_matrix,
    is_integral_matrix,
    spectrum,
)
from .membership import member_int, member_intval_on, value_at
from .orders import (
    Element,
    builtin,
    element_from_quaternion,
    quaternion_coords,
)
from .polynomials import Poly, binomial_poly

HALF = Fraction(1, 2)

# x^2(x^2+1)/2, the running example polynomial
EXAMPLE_POLY = Poly([0, 0, HALF, 0, HALF])

EXAMPLE_NAMES = ("zsqrt3", "hurwitz", "lipschitz", "triangular", "companion")


def _assertion(name: str, ok: bool, **detail) -> dict:
    return {"name": name, "ok": bool(ok), **detail}


def _report(example: str, assertions: list[dict]) -> dict:
    return {
        "example": example,
        "ok": all(a["ok"] for a in assertions),
        "assertions": assertions,
    }


def example_zsqrt3(seed: int = 0, count: int = 0) -> dict:
    """The quadratic order Z[s], s^2 = -3, against its integral closure
    Z[t], t = (1+s)/2: the example polynomial is a self-map of the first
    but not of the second, with t as the explicit witness."""
    f = EXAMPLE_POLY
    A = builtin("quadratic(-3)")
    A_closure = builtin("quadratic_half(-3)")
    theta_in_A = A.element([HALF, HALF])

    checks = []
    v_yes = member_int(f, A)
    checks.append(
        _assertion(
            "self-map on Z[s]",
            v_yes.verdict == "yes" and v_yes.checked_count == 4,
            verdict=v_yes.to_json(),
        )
    )
    v_no = member_int(f, A_closure)
    witness_is_theta = v_no.witness is not None and v_no.witness.coords == (0, 1)
    checks.append(
        _assertion(
            "not a self-map on Z[t], witness t",
            v_no.verdict == "no" and witness_is_theta,
            verdict=v_no.to_json(),
        )
    )
    if v_no.witness is not None:
        val = value_at(f, v_no.witness)
        checks.append(
            _assertion(
                "f(t) = -1/2",
                val.coords == (Fraction(-1, 2), 0),
                value=val.to_strings(),
            )
        )
    mu = theta_in_A.min_poly()
    checks.append(
        _assertion("minimal polynomial of t is X^2 - X + 1", mu == Poly([1, -1, 1]), mu=str(mu))
    )
    w = density_refute(f, A, builtin_candidates(A))
    checks.append(
        _assertion(
            "Z[s] is not polynomially dense in its integral closure",
            w is not None and w.coords == (HALF, HALF),
            witness=w.to_strings() if w else None,
        )
    )
    return _report("zsqrt3", checks)


def example_lipschitz(seed: int = 0, count: int = 0) -> dict:
    """Integer quaternions: the example polynomial is a self-map, yet it
    sends (1+i+j+k)/2 to -1/2, so the order is not polynomially dense in
    the integral quaternions."""
    f = EXAMPLE_POLY
    L = builtin("lipschitz")
    alpha = L.element([HALF, HALF, HALF, HALF])

    checks = []
    v = member_int(f, L)
    checks.append(
        _assertion(
            "self-map on the integer quaternions",
            v.verdict == "yes" and v.checked_count == 16,
            verdict=v.to_json(),
        )
    )
    mu = alpha.min_poly()
    checks.append(
        _assertion(
            "minimal polynomial of (1+i+j+k)/2 is X^2 - X + 1",
            mu == Poly([1, -1, 1]),
            mu=str(mu),
        )
    )
    val = value_at(f, alpha)
    checks.append(
        _assertion(
            "f((1+i+j+k)/2) = -1/2, not integral",
            val.coords == (Fraction(-1, 2), 0, 0, 0) and not val.is_integral(),
            value=val.to_strings(),
        )
    )
    iv = member_intval_on(f, [alpha])
    checks.append(
        _assertion("integral-value test rejects the half quaternion", iv.verdict == "no")
    )
    w = density_refute(f, L, builtin_candidates(L))
    checks.append(
        _assertion(
            "refutation witness found",
            w is not None and w.coords == (HALF, HALF, HALF, HALF),
            witness=w.to_strings() if w else None,
        )
    )
    return _report("lipschitz", checks)


def random_integral_quaternion(rng: random.Random, bound: int = 25) -> Element:
    """Random integral non-scalar element of the hurwitz order with
    quaternion coordinate denominators in {1, 2}, by rejection."""
    H = builtin("hurwitz")
    while True:
        qc = [
            Fraction(rng.randint(-bound, bound), rng.choice((1, 2)))
            for _ in range(4)
        ]
        if qc[1] == 0 and qc[2] == 0 and qc[3] == 0:
            continue
        x = element_from_quaternion(H, qc)
        if x.is_integral():
            return x


def example_hurwitz(seed: int = 0, count: int = 500) -> dict:
    """Every integral quaternion shares its minimal polynomial with an
    element of the hurwitz order, constructed by a three-squares
    decomposition of the norm."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        q = random_integral_quaternion(rng)
        match = hurwitz_match(q)
        ok = (
            match.is_in_order
            and match.min_poly() == q.min_poly()
        )
        if not ok:
            failures.append(
                {
                    "q": [str(c) for c in quaternion_coords(q)],
                    "match": match.to_strings(),
                }
            )
    checks = [
        _assertion(
            f"minimal polynomials preserved on {count} random integral quaternions",
            not failures,
            instances=count,
            failures=failures[:5],
        )
    ]
    q = element_from_quaternion(builtin("hurwitz"), [0, "3/5", "4/5", 0])
    m = hurwitz_match(q)
    checks.append(
        _assertion(
            "(3/5)i + (4/5)j matches to i",
            quaternion_coords(m) == (0, 1, 0, 0) and m.min_poly() == Poly([1, 0, 1]),
            match=[str(c) for c in quaternion_coords(m)],
        )
    )
    return _report("hurwitz", checks)


def random_upper_triangular(rng: random.Random, k: int, bound: int = 10) -> Matrix:
    return Matrix(
        [
            [rng.randint(-bound, bound) if j >= i else 0 for j in range(k)]
            for i in range(k)
        ]
    )


def example_triangular(seed: int = 0, count: int = 200) -> dict:
    """Binomial-coefficient polynomials take integral values on integer
    upper triangular matrices (their eigenvalues are the integer diagonal),
    and the diagonal reads off the spectrum."""
    rng = random.Random(seed)
    binomials = [binomial_poly(k) for k in range(7)]
    value_failures = []
    spectrum_failures = []
    for _ in range(count):
        k = rng.randint(1, 4)
        M = random_upper_triangular(rng, k)
        fpoly = binomials[rng.randint(0, 6)]
        if not is_integral_matrix(eval_poly_matrix(fpoly, M)):
            value_failures.append({"matrix": M.to_strings(), "poly": str(fpoly)})
        if triangular_spectrum(M) != spectrum(M):
            spectrum_failures.append({"matrix": M.to_strings()})
    checks = [
        _assertion(
            f"binomial values integral on {count} random triangular matrices",
            not value_failures,
            instances=count,
            failures=value_failures[:5],
        ),
        _assertion(
            "diagonal spectrum equals minimal-polynomial spectrum",
            not spectrum_failures,
            failures=spectrum_failures[:5],
        ),
    ]
    return _report("triangular", checks)


def random_unimodular(rng: random.Random, n: int, shears: int = 4) -> tuple[Matrix, Matrix]:
    """Random integer matrix with determinant 1, as a product of row
    shears, together with its exact inverse."""
    U = Matrix.identity(n)
    Uinv = Matrix.identity(n)
    for _ in range(shears):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        E = Matrix(
            [
                [1 if a == b else (c if (a, b) == (i, j) else 0) for b in range(n)]
                for a in range(n)
            ]
        )
        Einv = Matrix(
            [
                [1 if a == b else (-c if (a, b) == (i, j) else 0) for b in range(n)]
                for a in range(n)
            ]
        )
        U = U * E
        Uinv = Einv * Uinv
    return U, Uinv


def random_rational_poly(rng: random.Random, max_degree: int = 4, bound: int = 6, max_den: int = 4) -> Poly:
    deg = rng.randint(0, max_degree)
    return Poly(
        [Fraction(rng.randint(-bound, bound), rng.randint(1, max_den)) for _ in range(deg + 1)]
    )


def example_companion(seed: int = 0, count: int = 200) -> dict:
    """Integrality of polynomial values is a function of the root set:
    evaluating at a companion matrix or at any integer matrix similar to it
    gives the same integrality answer."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        deg = rng.randint(1, 3)
        p = Poly([rng.randint(-5, 5) for _ in range(deg)] + [1])
        C = companion(p)
        U, Uinv = random_unimodular(rng, deg)
        N = U * C * Uinv
        fpoly = random_rational_poly(rng)
        if not spectrum_transfer_check(fpoly, [(C, N)]):
            failures.append({"p": str(p), "f": str(fpoly)})
    checks = [
        _assertion(
            f"integrality transfer on {count} random companion/conjugate pairs",
            not failures,
            instances=count,
            failures=failures[:5],
        )
    ]
    return _report("companion", checks)


_RUNNERS = {
    "zsqrt3": example_zsqrt3,
    "hurwitz": example_hurwitz,
    "lipschitz": example_lipschitz,
    "triangular": example_triangular,
    "companion": example_companion,
}

_DEFAULT_COUNTS = {
    "zsqrt3": 0,
    "lipschitz": 0,
    "hurwitz": 500,
    "triangular": 200,
    "companion": 200,
}


def run_example(name: str, seed: int = 0, count: int | None = None) -> dict:
    if name not in _RUNNERS:
        raise ValueError(f"unknown example {name!r}; available: {', '.join(EXAMPLE_NAMES)}")
    effective = _DEFAULT_COUNTS[name] if count is None else count
    return _RUNNERS[name](seed=seed, count=effective)


__all__ = [
    "EXAMPLE_POLY",
    "EXAMPLE_NAMES",
    "run_example",
    "example_zsqrt3",
    "example_hurwitz",
    "example_lipschitz",
    "example_triangular",
    "example_companion",
    "random_integral_quaternion",
    "random_upper_triangular",
    "random_unimodular",
    "random_rational_poly",
]
