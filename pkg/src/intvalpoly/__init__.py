"""Exact computational algebra for integer-valued and integral-valued
polynomials on finite-rank rings over Z: minimal polynomials of exact
rational matrices, structure-constant orders, complete self-map decisions
by residue enumeration, pullback tests, monic integrality certificates and
polynomially-dense-subset experiments."""

from .density import (
    ThreeSquares,
    builtin_candidates,
    certified_irreducible,
    companion_family,
    density_refute,
    hurwitz_match,
    irreducible_mod_p,
    spectrum_transfer_check,
    three_squares,
    triangular_spectrum,
)
from .examples import EXAMPLE_NAMES, EXAMPLE_POLY, run_example
from .matrices import (
    Matrix,
    characteristic_polynomial,
    companion,
    eval_poly_matrix,
    image_spectrum,
    is_integral_matrix,
    minimal_polynomial,
    spectrum,
)
from .membership import (
    ChainReport,
    MembershipVerdict,
    PreconditionError,
    certificate_phi,
    chain_check,
    member_int,
    member_intval_on,
    pullback_member,
    scaling_lemma_check,
    verify_certificate,
)
from .orders import (
    Element,
    Order,
    builtin,
    builtin_names,
    element_from_quaternion,
    eval_poly_element,
    hurwitz,
    integers,
    lipschitz,
    matrix_order,
    quadratic,
    quadratic_half,
    quaternion_coords,
    triangular_order,
)
from .polynomials import (
    Poly,
    binomial_poly,
    monic_int_polys,
    normalize,
    poly_divmod,
    poly_gcd,
    rat,
    rat_str,
    squarefree_part,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # polynomials
    "Poly",
    "rat",
    "rat_str",
    "poly_divmod",
    "poly_gcd",
    "squarefree_part",
    "normalize",
    "binomial_poly",
    "monic_int_polys",
    # matrices
    "Matrix",
    "minimal_polynomial",
    "characteristic_polynomial",
    "eval_poly_matrix",
    "is_integral_matrix",
    "spectrum",
    "companion",
    "image_spectrum",
    # orders
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
    # membership
    "MembershipVerdict",
    "ChainReport",
    "PreconditionError",
    "member_int",
    "member_intval_on",
    "pullback_member",
    "scaling_lemma_check",
    "certificate_phi",
    "verify_certificate",
    "chain_check",
    # density
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
    # examples
    "EXAMPLE_POLY",
    "EXAMPLE_NAMES",
    "run_example",
]
