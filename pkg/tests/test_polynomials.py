import random
from fractions import Fraction

import pytest

from intvalpoly import Poly, binomial_poly, normalize, poly_divmod, poly_gcd, squarefree_part
from intvalpoly.polynomials import monic_int_polys

F = Fraction
HALF_POLY = Poly([0, 0, F(1, 2), 0, F(1, 2)])  # x^2(x^2+1)/2


def test_canonical_form():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([]).is_zero
    assert Poly([0, 0]).is_zero
    assert Poly([0, 0]).degree == -1
    assert Poly([3]).degree == 0


def test_divmod_single_step():
    q, r = poly_divmod(Poly([1, -1, 1]), Poly([0, 1]))
    assert q == Poly([-1, 1]) and r == Poly([1])


def test_divmod_reduction():
    # X^4 + X^2 = (X^2 - X + 1)(X^2 + X + 1) - 1, checked by expansion
    q, r = poly_divmod(Poly([0, 0, 1, 0, 1]), Poly([1, -1, 1]))
    assert q == Poly([1, 1, 1])
    assert r == Poly([-1])


def test_divmod_zero_dividend():
    q, r = poly_divmod(Poly(), Poly([0, 0, 1]))
    assert q.is_zero and r.is_zero


def test_divmod_rejects_bad_divisors():
    with pytest.raises(ValueError):
        poly_divmod(Poly([1, 1]), Poly([2, 2]))  # not monic
    with pytest.raises(ValueError):
        poly_divmod(Poly([1, 1]), Poly([1]))  # constant


def test_divmod_reconstruction_random():
    rng = random.Random(1)
    for _ in range(200):
        f = Poly([F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(0, 7))])
        g = Poly([F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(1, 5))] + [1])
        q, r = poly_divmod(f, g)
        assert g * q + r == f
        assert r.degree < g.degree


def test_gcd_examples():
    assert poly_gcd(Poly([-1, 0, 1]), Poly([-1, 1])) == Poly([-1, 1])
    assert poly_gcd(Poly([0, 0, 1]), Poly([0, 0, 0, 1])) == Poly([0, 0, 1])
    assert poly_gcd(Poly([1, -1, 1]), Poly([0, -1, 1])) == Poly([1])


def test_gcd_divides_both_and_monic():
    rng = random.Random(2)
    for _ in range(100):
        f = Poly([F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(rng.randint(1, 6))])
        g = Poly([F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(rng.randint(1, 6))])
        if f.is_zero and g.is_zero:
            continue
        d = poly_gcd(f, g)
        assert d.is_monic
        assert (f % d).is_zero
        assert (g % d).is_zero


def test_gcd_rejects_double_zero():
    with pytest.raises(ValueError):
        poly_gcd(Poly(), Poly())


def test_squarefree_examples():
    assert squarefree_part(Poly([0, 0, 1])) == Poly([0, 1])
    # (X-1)^2 (X+2) expands to X^3 - 3X + 2
    assert squarefree_part(Poly([2, -3, 0, 1])) == Poly([-2, 1, 1])
    assert squarefree_part(Poly([1, -1, 1])) == Poly([1, -1, 1])


def test_squarefree_properties():
    rng = random.Random(3)
    for _ in range(100):
        factors = [Poly([rng.randint(-4, 4), 1]) for _ in range(rng.randint(1, 4))]
        f = Poly([1])
        for p in factors:
            f = f * p ** rng.randint(1, 3)
        s = squarefree_part(f)
        assert (f % s).is_zero
        assert poly_gcd(s, s.derivative()) == Poly([1])


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        squarefree_part(Poly())


def test_normalize_examples():
    g, d = normalize(HALF_POLY)
    assert g == Poly([0, 0, 1, 0, 1]) and d == 2
    g, d = normalize(Poly([-1, 1]))
    assert g == Poly([-1, 1]) and d == 1
    g, d = normalize(Poly([F(1, 4), F(1, 6)]))
    assert g == Poly([3, 2]) and d == 12


def test_normalize_minimality():
    rng = random.Random(4)
    for _ in range(100):
        f = Poly([F(rng.randint(-9, 9), rng.randint(1, 12)) for _ in range(rng.randint(1, 6))])
        g, d = normalize(f)
        assert g.is_integer
        assert g == f * d
        # no proper divisor of d clears the denominators
        for p in (2, 3, 5, 7, 11):
            if d % p == 0:
                assert not (f * (d // p)).is_integer


def test_string_round_trip():
    assert Poly.from_strings(["0", "0", "1/2", "0", "1/2"]) == HALF_POLY
    assert HALF_POLY.to_strings() == ["0", "0", "1/2", "0", "1/2"]
    assert Poly().to_strings() == ["0"]
    assert Poly.from_strings(["0"]).is_zero


def test_pretty_printing():
    assert str(Poly([1, -1, 1])) == "X^2 - X + 1"
    assert str(Poly([0, 0, 1])) == "X^2"
    assert str(Poly()) == "0"
    assert str(HALF_POLY) == "1/2X^4 + 1/2X^2"


def test_evaluation_and_compose():
    f = Poly([1, -1, 1])
    assert f(2) == 3
    assert f(F(1, 2)) == F(3, 4)
    g = f.compose(Poly([1, 1]))  # f(X+1) = X^2 + X + 1
    assert g == Poly([1, 1, 1])


def test_binomial_polys_integer_valued_on_integers():
    import math

    for k in range(7):
        p = binomial_poly(k)
        assert p.degree == k
        for x in range(-10, 11):
            v = p(x)
            assert v.denominator == 1
            if x >= k >= 0:
                assert v == math.comb(x, k)


def test_monic_int_polys_counts():
    assert sum(1 for _ in monic_int_polys(1, 1)) == 3
    assert sum(1 for _ in monic_int_polys(2, 1)) == 9
    assert sum(1 for _ in monic_int_polys(3, 2)) == 125
