from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skewlagrange.scalars import (
    I, J, K, LiteralParseError, Quaternion, Rat, class_data, conjugate_test, intertwiner_basis,
    parse_quaternion,
)

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))
quaternions = st.builds(Quaternion, rationals, rationals, rationals, rationals)


def test_unit_products():
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K
    assert I * I == -1 and I * J * K == -1


def test_inverse_and_norm():
    a = Quaternion(1, 2, -1, 3)
    assert a.norm() == 15
    assert a * a.inverse() == 1 and a.inverse() * a == 1
    with pytest.raises(ZeroDivisionError):
        Quaternion.zero().inverse()


def test_scalar_mixing():
    a = Quaternion(1, 1, 0, 0)
    assert a * 2 == 2 * a == Quaternion(2, 2, 0, 0)
    assert a + Fraction(1, 2) == Quaternion(Fraction(3, 2), 1, 0, 0)
    assert 1 - a == Quaternion(0, -1, 0, 0)
    assert Quaternion(3) == 3


@pytest.mark.parametrize("text, expected", [
    ("0", Quaternion()),
    ("i", I),
    ("-i", -I),
    ("1/2", Quaternion(Fraction(1, 2))),
    ("1 + 2*i - 3/4*k", Quaternion(1, 2, 0, Fraction(-3, 4))),
    ("(1+j)", Quaternion(1, 0, 1, 0)),
    ("i-j", Quaternion(0, 1, -1, 0)),
    ("2*j + 1", Quaternion(1, 0, 2, 0)),
])
def test_parse(text, expected):
    assert parse_quaternion(text) == expected


@pytest.mark.parametrize("value, text", [
    (Quaternion(), "0"),
    (I, "i"),
    (-I, "-i"),
    (Quaternion(Fraction(4, 5), Fraction(3, 5), Fraction(2, 5), Fraction(-1, 5)), "4/5+3/5*i+2/5*j-1/5*k"),
    (Quaternion(1, 0, 0, -1), "1-k"),
])
def test_canonical_print(value, text):
    assert str(value) == text


@pytest.mark.parametrize("text, column", [("1+", 3), ("2*x", 3), ("1/0", 1), ("i i", 3), ("", 1)])
def test_parse_errors_carry_column(text, column):
    with pytest.raises(LiteralParseError) as info:
        parse_quaternion(text)
    assert info.value.column == column


@given(quaternions)
def test_print_parse_round_trip(a):
    assert parse_quaternion(str(a)) == a
    assert str(parse_quaternion(str(a))) == str(a)


@settings(max_examples=60)
@given(quaternions, quaternions, quaternions)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a * b).conj() == b.conj() * a.conj()


@given(quaternions, quaternions)
def test_regular_representations(a, b):
    prod = a * b
    la = a.left_matrix()
    rb = b.right_matrix()
    assert [sum(x * y for x, y in zip(r, b.coords())) for r in la] == list(prod.coords())
    assert [sum(x * y for x, y in zip(r, a.coords())) for r in rb] == list(prod.coords())


def test_conjugacy_classes():
    assert conjugate_test(I, J) and conjugate_test(I, K)
    assert not conjugate_test(I, 2 * I)
    assert not conjugate_test(Quaternion(1), Quaternion(2))
    assert class_data(I).kappa == 2 and class_data(Quaternion(3)).kappa == 1
    assert I.class_key() == (0, 1)
    assert I.central_minpoly_coeffs() == (1, 0, 1)


def test_intertwiners_canonical_basis():
    basis = intertwiner_basis(I, J)
    assert [str(v) for v in basis] == ["1-k", "i+j"]
    for v in basis:
        assert I * v == v * J
    assert intertwiner_basis(I, Quaternion(1, 1, 0, 0)) == []
    assert len(intertwiner_basis(Quaternion(2), Quaternion(2))) == 4


def test_rational_ring():
    a, b = Rat(Fraction(2, 3)), Rat(-4)
    assert a * b == b * a == Rat(Fraction(-8, 3))
    assert Rat.parse("-3/7") == Rat(Fraction(-3, 7))
    assert a.is_central() and a.class_data().kappa == 1
    assert not a.is_conjugate(b) and a.is_conjugate(Rat(Fraction(2, 3)))
    assert a.intertwiners(b) == [] and a.intertwiners(a) == [Rat(1)]
    with pytest.raises(LiteralParseError):
        Rat.parse("1+i")
