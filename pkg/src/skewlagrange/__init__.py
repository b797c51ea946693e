"""Exact Lagrange interpolation for polynomials over the rational quaternions.

Polynomials carry their coefficients on the right of the variable and are
evaluated on the left (f^l(a) = sum a^j f_j) or on the right
(f^r(a) = sum f_j a^j). All arithmetic is over Fraction.
"""

from .common import Inconsistent, PDependentError
from .ideals import (
    is_p_independent,
    is_p_independent_left,
    is_p_independent_right,
    llcm,
    lrcm,
    minimal_poly,
    minimal_poly_left,
    minimal_poly_right,
)
from .onesided import (
    OneSidedProblem,
    consistency_reduce,
    extend_in_class,
    lagrange,
    lagrange_left,
    lagrange_right,
    one_sided_family,
)
from .oracle import RandomInstances, oracle_interpolate, oracle_sylvester
from .poly import CentralPoly, SkewPoly, minimal_central_polynomial, parse_poly
from .scalars import I, J, K, LiteralParseError, Quaternion, Rat, parse_quaternion
from .sylvester import Status, SylvesterSolution, solve_sylvester, sylvester_particular
from .twosided import (
    TwoSidedFamily,
    TwoSidedProblem,
    lagrange_two_sided,
    solve_modified,
    solve_modified_symmetric,
    solve_two_sided,
    within_class_redundancy,
)
from .bounded import (
    bounded_decompose,
    generalized_family,
    generalized_lagrange,
    greatest_central_divisor,
    least_central_multiple,
)

__all__ = [
    "CentralPoly", "I", "Inconsistent", "J", "K", "LiteralParseError", "OneSidedProblem",
    "PDependentError", "Quaternion", "RandomInstances", "Rat", "SkewPoly", "Status",
    "SylvesterSolution", "TwoSidedFamily", "TwoSidedProblem", "bounded_decompose",
    "consistency_reduce", "extend_in_class", "generalized_family", "generalized_lagrange",
    "greatest_central_divisor", "is_p_independent", "is_p_independent_left",
    "is_p_independent_right", "lagrange", "lagrange_left", "lagrange_right",
    "lagrange_two_sided", "least_central_multiple", "llcm", "lrcm", "minimal_central_polynomial",
    "minimal_poly", "minimal_poly_left", "minimal_poly_right", "one_sided_family",
    "oracle_interpolate", "oracle_sylvester", "parse_poly", "parse_quaternion", "solve_modified",
    "solve_modified_symmetric", "solve_sylvester", "solve_two_sided", "sylvester_particular",
    "within_class_redundancy",
]
