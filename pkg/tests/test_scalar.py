import random
from fractions import Fraction

import pytest

from quasi_core.Errors import ConductorMismatch, DefinitionSyntaxError, DivisionByZero, InvalidParameter
from quasi_core.Scalar import (Scalar, conj, discrete_log, galois, parse_combination, parse_scalar,
                               root_group_order, root_of_unity)


def test_rational_sum():
    assert Scalar(Fraction(1, 2)) + Scalar(Fraction(1, 3)) == Fraction(5, 6)


def test_cube_roots_sum_to_minus_one():
    assert root_of_unity(3, 1) + root_of_unity(3, 2) == -1


def test_adding_zero():
    x = root_of_unity(8, 3) * 5
    assert x + Scalar.zero(8) == x


def test_products_of_roots():
    z4 = root_of_unity(4, 1)
    z3 = root_of_unity(3, 1)
    assert z4 * z4 == -1
    assert z3 * z3 * z3 == 1
    assert Scalar(-1) * Scalar(-1) == 1


def test_inverses():
    assert Scalar(2).inverse() == Fraction(1, 2)
    assert root_of_unity(3, 1).inverse() == root_of_unity(3, 2)
    a = root_of_unity(8, 1) + 1
    assert a * a.inverse() == 1


def test_root_of_unity_small_cases():
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(1, 0) == 1
    w = root_of_unity(3, 1)
    assert w != 1 and w ** 3 == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 8, 12])
def test_roots_of_unity_have_order_dividing_m(m):
    for k in range(m):
        assert root_of_unity(m, k) ** m == 1


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        Scalar.zero(5).inverse()
    with pytest.raises(ZeroDivisionError):
        Scalar(1) / Scalar(0)


def test_mixed_conductors_raise():
    with pytest.raises(ConductorMismatch):
        root_of_unity(3, 1) + root_of_unity(4, 1)


def test_field_axioms_on_samples():
    rng = random.Random(0)
    m = 12
    pool = [root_of_unity(m, k) * Fraction(rng.randint(-4, 4), rng.randint(1, 3)) + rng.randint(-2, 2)
            for k in range(m)]
    for _ in range(60):
        a, b, c = (rng.choice(pool) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == 1
            assert a.inverse().inverse() == a


def test_galois_and_conjugation():
    z = root_of_unity(4, 1)
    assert conj(z) == -z
    assert galois(root_of_unity(5, 1), 2) == root_of_unity(5, 2)
    with pytest.raises(InvalidParameter):
        galois(z, 2)


def test_discrete_log_uses_full_root_group():
    assert root_group_order(3) == 6
    assert root_group_order(4) == 4
    assert discrete_log(Scalar(-1, 3)) == 3
    assert discrete_log(Scalar(1, 3)) == 0
    assert discrete_log(Scalar(2, 3)) is None


def test_text_form_round_trip():
    for m, value in [(1, Scalar(Fraction(-7, 3))), (3, root_of_unity(3, 1) * Fraction(1, 2) + 1),
                     (4, -root_of_unity(4, 1)), (8, root_of_unity(8, 3) * 2 - Fraction(1, 5))]:
        assert parse_scalar(str(value), m) == value


def test_parse_scalar_forms():
    assert parse_scalar("1/2*z^1 + -1/3*z^2", 3) == root_of_unity(3, 1) * Fraction(1, 2) - \
        root_of_unity(3, 2) * Fraction(1, 3)
    assert parse_scalar("-1") == -1
    assert str(root_of_unity(3, 1)) == "z^1"


def test_parse_combination_collects_terms():
    parsed = parse_combination("2*e1 + -e2 + 3", 1, ["e1", "e2"])
    assert parsed["e1"] == 2
    assert parsed["e2"] == -1
    assert parsed[None] == 3


def test_parse_errors_carry_column():
    with pytest.raises(DefinitionSyntaxError) as info:
        parse_scalar("1 + * 2")
    assert info.value.column is not None


def test_constructor_keeps_conductor_of_scalars():
    assert Scalar(Scalar(2, 3), 3) == Scalar(2, 3)
    with pytest.raises(ConductorMismatch):
        Scalar(Scalar(2), 3)
