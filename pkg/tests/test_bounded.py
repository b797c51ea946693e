import pytest

from skewlagrange.bounded import (
    bounded_decompose, central_multiple_kernel, central_norm, class_reduce, elementary_coefficients,
    generalized_decomposition, generalized_family, generalized_lagrange, greatest_central_divisor,
    lambda_forward_left, lambda_forward_right, lambda_inverse_left, lambda_inverse_right,
    least_central_multiple, minimality_certificate, partition_classes,
)
from skewlagrange.common import Inconsistent
from skewlagrange.poly import CentralPoly, SkewPoly
from skewlagrange.scalars import I, J, Quaternion
from skewlagrange.twosided import TwoSidedProblem, lagrange_two_sided, solve_two_sided

from conftest import q

Z = SkewPoly.monomial(1)
Z2_PLUS_1 = CentralPoly([1, 0, 1])


def test_linear_factor():
    b = bounded_decompose(Z - I)
    assert b.d == CentralPoly([1]) and b.q == Z - I
    assert b.m == Z2_PLUS_1 and b.diamond == Z + I


def test_factor_with_central_part():
    g = (Z - I) * Z2_PLUS_1.to_skew()
    b = bounded_decompose(g)
    assert b.d == Z2_PLUS_1 and b.q == Z - I and b.m == Z2_PLUS_1 * Z2_PLUS_1


def test_central_input():
    g = CentralPoly([2, -2, 1])
    b = bounded_decompose(g.to_skew())
    assert b.d == g and b.q == 1 and b.m == g and b.diamond == 1


def test_zero_rejected():
    with pytest.raises(ValueError):
        bounded_decompose(SkewPoly.zero())
    with pytest.raises(ValueError):
        greatest_central_divisor(SkewPoly.zero())


def test_divisor_methods_agree(gen):
    for _ in range(15):
        g = gen.poly(gen.randint(0, 3), height=4) * CentralPoly([gen.integer(3), 0, 1]).to_skew()
        if not g:
            continue
        d = greatest_central_divisor(g)
        assert greatest_central_divisor(g, "span") == d
        assert greatest_central_divisor(g, "kernel") == d
    with pytest.raises(ValueError):
        greatest_central_divisor(Z, "factor")


def test_multiple_properties(gen):
    for _ in range(15):
        g = gen.poly(gen.randint(1, 3), height=5)
        m, dia = least_central_multiple(g)
        assert (g * dia).to_central() == m and (dia * g).to_central() == m and m.is_monic()
        assert m.divides(central_norm(g))
        assert minimality_certificate(g)
        for h in central_multiple_kernel(g, dia.degree):
            assert (g * h).is_central()


def test_lambda_example():
    h, beta = Z - I, q("1+j")
    d = lambda_forward_right(h, Quaternion(1), beta)
    assert d == q("1-i+j")
    assert lambda_inverse_right(h, d, beta) == 1
    one = SkewPoly.one()
    x = q("2-k")
    assert lambda_forward_left(one, x, beta) == x and lambda_inverse_left(one, x, beta) == x


def test_lambda_vanishing_multiple_rejected():
    with pytest.raises(ValueError):
        lambda_inverse_right(Z - I, Quaternion(1), J)


def test_lambda_round_trips(gen):
    for _ in range(20):
        h, beta, delta = gen.poly(gen.randint(0, 3), height=4), gen.quaternion(), gen.nonzero_quaternion()
        if not h or not least_central_multiple(h)[0](beta):
            continue
        assert lambda_inverse_right(h, lambda_forward_right(h, delta, beta), beta) == delta
        assert lambda_inverse_left(h, lambda_forward_left(h, delta, beta), beta) == delta


def test_elementary_coefficients_hit_targets():
    lam, omega = [I, q("1+i")], [q("2+j")]
    from skewlagrange.ideals import minimal_poly_left, minimal_poly_right
    c = q("3-k")
    rho = elementary_coefficients(lam, omega, 0, c, "left")
    piece = minimal_poly_left([lam[1]]).poly * rho * minimal_poly_right(omega).poly
    assert piece.eval_left(lam[0]) == c
    gamma = elementary_coefficients(lam, omega, 0, c, "right")
    piece = minimal_poly_left(lam).poly * gamma
    assert piece.eval_right(omega[0]) == c
    assert elementary_coefficients(lam, omega, 0, 0, "left") == 0
    with pytest.raises(ValueError):
        elementary_coefficients([I], [J], 0, c, "left")


def test_partition_sorted_by_class():
    lam = [q("1+j"), I, q("3")]
    omega = [J, q("1+k"), q("5")]
    part = partition_classes(lam, omega)
    assert part.left0 == (2,) and part.right0 == (2,)
    assert [s.key for s in part.shared] == [(0, 1), (2, 2)]
    assert part.shared[0].left_indices == (1,) and part.shared[0].right_indices == (0,)


def test_class_reduce_without_outer_nodes():
    p = TwoSidedProblem.from_lists([I], [q("2")], [J], [q("2")])
    red = class_reduce(p, [0], [0])
    assert red.problem.left_nodes == [I] and red.problem.right_nodes == [J]
    assert red.problem.left_values == [2] and red.problem.right_values == [2]


def test_class_reduce_lift_solves_original(gen):
    f = gen.poly(4, height=3)
    lam = [I, q("1+j")]
    omega = [J, q("2+k")]
    p = TwoSidedProblem(tuple((a, f.eval_left(a)) for a in lam), tuple((b, f.eval_right(b)) for b in omega))
    red = class_reduce(p, [0], [0])
    fam = solve_two_sided(red.problem)
    g = red.lift(fam.base)
    assert g.eval_left(I) == p.left_values[0] and g.eval_right(J) == p.right_values[0]
    assert g.eval_left(lam[1]) == 0 and g.eval_right(omega[1]) == 0


def test_generalized_disjoint_matches_two_sided():
    p = TwoSidedProblem.from_lists([I], [1], [q("1+j")], [0])
    assert generalized_lagrange(p) == lagrange_two_sided(p)
    zero = TwoSidedProblem.from_lists([I, q("2+j")], [0, 0], [J], [0])
    assert generalized_lagrange(zero) == 0


def test_generalized_forced_consistent_value():
    # any d in the class of i x - x j = 1 - d solvable, e.g. d from an actual polynomial
    f = SkewPoly([q("1"), q("i+k")])
    p = TwoSidedProblem.from_lists([I], [f.eval_left(I)], [J], [f.eval_right(J)])
    g = generalized_lagrange(p)
    assert p.is_solved_by(g) and g.degree <= 1


def test_generalized_inconsistent_class_witness():
    p = TwoSidedProblem.from_lists([I, q("3")], [1, 0], [J], [0])
    res = generalized_lagrange(p)
    assert isinstance(res, Inconsistent) and res.witness == (0, 1)
    assert isinstance(generalized_family(p), Inconsistent)


def test_generalized_decomposition_pieces(gen):
    f = gen.poly(4, height=3)
    lam = [I, q("2+j"), q("1-k")]
    omega = [J, q("1+i")]
    p = TwoSidedProblem(tuple((a, f.eval_left(a)) for a in lam), tuple((b, f.eval_right(b)) for b in omega))
    dec = generalized_decomposition(p)
    assert p.is_solved_by(dec.poly) and dec.poly.degree < 5
    assert set(dec.left_pieces) == {1} and dec.right_pieces == {}
    assert set(dec.class_pieces) == {(0, 1), (2, 2)}
    fam = generalized_family(p)
    assert p.is_solved_by(fam.member([1] * len(fam.homogeneous_basis)))
