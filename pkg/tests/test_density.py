import random
from fractions import Fraction
from math import isqrt

import pytest

from intvalpoly import (
    Matrix,
    Poly,
    builtin,
    builtin_candidates,
    certified_irreducible,
    companion,
    companion_family,
    density_refute,
    element_from_quaternion,
    hurwitz_match,
    irreducible_mod_p,
    quaternion_coords,
    spectrum,
    spectrum_transfer_check,
    three_squares,
    triangular_spectrum,
)
from intvalpoly.examples import (
    EXAMPLE_POLY,
    random_integral_quaternion,
    random_unimodular,
    random_upper_triangular,
)

F = Fraction


# -- three squares -----------------------------------------------------------


def test_three_squares_examples():
    assert three_squares(3).decomposition == (1, 1, 1)
    assert three_squares(7).decomposition is None
    assert three_squares(11).decomposition == (1, 1, 3)
    assert three_squares(0).decomposition == (0, 0, 0)
    with pytest.raises(ValueError):
        three_squares(-1)


def test_three_squares_verification_and_pattern():
    def excluded(n: int) -> bool:
        if n == 0:
            return False
        while n % 4 == 0:
            n //= 4
        return n % 8 == 7

    for n in range(600):
        t = three_squares(n)
        if t.decomposition is None:
            assert excluded(n), n
        else:
            a1, a2, a3 = t.decomposition
            assert 0 <= a1 <= a2 <= a3
            assert a1 * a1 + a2 * a2 + a3 * a3 == n
            assert not excluded(n), n


# -- hurwitz matching --------------------------------------------------------


def test_hurwitz_match_denominator_five():
    H = builtin("hurwitz")
    q = element_from_quaternion(H, [0, F(3, 5), F(4, 5), 0])
    m = hurwitz_match(q)
    assert quaternion_coords(m) == (0, 1, 0, 0)
    assert m.min_poly() == Poly([1, 0, 1]) == q.min_poly()


def test_hurwitz_match_fixed_point():
    H = builtin("hurwitz")
    alpha = element_from_quaternion(H, [F(1, 2)] * 4)
    assert hurwitz_match(alpha) == alpha


def test_hurwitz_match_half_integer_case():
    H = builtin("hurwitz")
    q = element_from_quaternion(H, [F(1, 2), F(1, 2), F(1, 2), F(1, 2)])
    m = hurwitz_match(q)
    assert quaternion_coords(m) == (F(1, 2), F(1, 2), F(1, 2), F(1, 2))


def test_hurwitz_match_rejects_bad_inputs():
    H = builtin("hurwitz")
    with pytest.raises(ValueError, match="scalar"):
        hurwitz_match(element_from_quaternion(H, [3, 0, 0, 0]))
    with pytest.raises(ValueError, match="not integral"):
        hurwitz_match(element_from_quaternion(H, [0, F(1, 3), 0, 0]))


def test_hurwitz_match_random_invariant():
    rng = random.Random(41)
    for _ in range(100):
        q = random_integral_quaternion(rng, bound=15)
        m = hurwitz_match(q)
        assert m.is_in_order
        assert m.min_poly() == q.min_poly()


# -- companion families and irreducibility -----------------------------------


def test_companion_family_counts():
    assert len(list(companion_family(1, 1))) == 3
    assert len(list(companion_family(2, 1))) == 9
    fam = list(companion_family(2, 1, irreducible_only=True))
    # X^2 + X + 1 is irreducible mod 2 and must survive the filter
    assert companion(Poly([1, 1, 1])) in fam
    assert all(M.n == 2 for M in fam)


def test_companion_family_members_are_companions():
    from intvalpoly import characteristic_polynomial

    for M in companion_family(3, 1):
        assert companion(characteristic_polynomial(M)) == M


def test_irreducible_mod_p():
    assert irreducible_mod_p(Poly([1, 1, 1]), 2)
    assert not irreducible_mod_p(Poly([0, 0, 1]), 2)
    assert not irreducible_mod_p(Poly([-1, 0, 1]), 5)
    assert irreducible_mod_p(Poly([2, 0, 1]), 5)  # X^2 + 2 has no root mod 5
    assert irreducible_mod_p(Poly([3, 1]), 2)


def test_certified_irreducible_is_sound():
    # anything certified must have no rational roots at small integers and
    # no proper monic integer factorization at degree 2
    rng = random.Random(42)
    for _ in range(100):
        p = Poly([rng.randint(-4, 4), rng.randint(-4, 4), 1])
        if not certified_irreducible(p):
            continue
        for a in range(-6, 7):
            assert p(a) != 0
        for b in range(-8, 9):
            for c in range(-8, 9):
                prod = Poly([b, 1]) * Poly([c, 1])
                assert prod != p


def test_reducible_never_certified():
    rng = random.Random(43)
    for _ in range(60):
        f1 = Poly([rng.randint(-5, 5), 1])
        f2 = Poly([rng.randint(-5, 5), 1])
        assert not certified_irreducible(f1 * f2)


# -- triangular spectra --------------------------------------------------------


def test_triangular_spectrum_examples():
    M = Matrix([[1, 2, 3], [0, 1, 4], [0, 0, 2]])
    assert triangular_spectrum(M) == Poly([2, -3, 1])
    assert triangular_spectrum(Matrix.zeros(2)) == Poly([0, 1])
    assert triangular_spectrum(Matrix([[0, 5], [0, 0]])) == Poly([0, 1])
    with pytest.raises(ValueError):
        triangular_spectrum(Matrix([[0, 0], [1, 0]]))


def test_triangular_spectrum_matches_min_poly_route_random():
    rng = random.Random(44)
    for _ in range(100):
        k = rng.randint(1, 4)
        M = random_upper_triangular(rng, k)
        assert triangular_spectrum(M) == spectrum(M)


def test_triangular_spectrum_rational_diagonal():
    M = Matrix([[F(1, 2), 3], [0, F(1, 2)]])
    assert triangular_spectrum(M) == Poly([F(-1, 2), 1])


# -- refutation ---------------------------------------------------------------


def test_density_refute_quadratic():
    A = builtin("quadratic(-3)")
    w = density_refute(EXAMPLE_POLY, A, builtin_candidates(A))
    assert w is not None and w.coords == (F(1, 2), F(1, 2))


def test_density_refute_lipschitz():
    L = builtin("lipschitz")
    w = density_refute(EXAMPLE_POLY, L, builtin_candidates(L))
    assert w is not None and w.coords == (F(1, 2),) * 4


def test_density_refute_identity_poly():
    A = builtin("quadratic(-3)")
    assert density_refute(Poly([0, 1]), A, builtin_candidates(A)) is None


def test_density_refute_requires_integral_candidates():
    A = builtin("quadratic(-3)")
    with pytest.raises(ValueError):
        density_refute(Poly([0, 1]), A, [A.element([F(1, 2), 0])])


def test_density_refute_non_self_map_gives_nothing():
    A = builtin("quadratic(-3)")
    assert density_refute(Poly([F(1, 2)]), A, builtin_candidates(A)) is None


def test_builtin_candidates_unknown_order():
    with pytest.raises(ValueError):
        builtin_candidates(builtin("integers"))


# -- spectrum transfer ---------------------------------------------------------


def test_spectrum_transfer_identity_pairs():
    M = Matrix([[1, 2], [3, 4]])
    f = Poly([F(1, 2), 0, F(1, 3)])
    assert spectrum_transfer_check(f, [(M, M)])


def test_spectrum_transfer_companion_vs_diagonal():
    pairs = [(companion(Poly([0, -1, 1])), Matrix.diagonal([0, 1]))]
    assert spectrum_transfer_check(Poly([0, F(-1, 2), F(1, 2)]), pairs)


def test_spectrum_transfer_conjugates_random():
    rng = random.Random(46)
    for _ in range(60):
        deg = rng.randint(1, 3)
        p = Poly([rng.randint(-5, 5) for _ in range(deg)] + [1])
        C = companion(p)
        U, Uinv = random_unimodular(rng, deg)
        f = Poly([F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 5))])
        assert spectrum_transfer_check(f, [(C, U * C * Uinv)])


def test_spectrum_transfer_rejects_unequal_spectra():
    with pytest.raises(ValueError):
        spectrum_transfer_check(
            Poly([0, 1]), [(Matrix.diagonal([0, 1]), Matrix.diagonal([0, 2]))]
        )


def test_unimodular_generator_is_unimodular():
    # determinant 1 via the characteristic polynomial constant coefficient
    from intvalpoly import characteristic_polynomial

    rng = random.Random(47)
    for _ in range(30):
        n = rng.randint(1, 4)
        U, Uinv = random_unimodular(rng, n)
        assert U * Uinv == Matrix.identity(n)
        det = characteristic_polynomial(U).coefficient(0) * (-1) ** n
        assert det == 1
