from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from metapoisson.coeff import FieldError, field_make, is_prime, prime_field, rationals


def test_characteristics():
    assert rationals().characteristic == 0
    assert prime_field(2).characteristic == 2
    assert field_make("GF(7)").characteristic == 7
    assert field_make("Q").is_rational
    assert field_make(0) == rationals()
    assert field_make("5") == prime_field(5)


@pytest.mark.parametrize("bad", [6, "GF(6)", "GF(4)", "GF(1)", 1, "R", "GF(x)"])
def test_non_fields_rejected(bad):
    with pytest.raises(FieldError):
        field_make(bad)


def test_small_examples():
    F2, Q, F5 = prime_field(2), rationals(), prime_field(5)
    assert F2.add(1, 1) == 0
    assert Q.inv(Fraction(2, 3)) == Fraction(3, 2)
    assert F5.minus_one() == 4
    assert F5(Fraction(1, 2)) == 3
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)
    with pytest.raises(ZeroDivisionError):
        Q.inv(0)


def test_format_parse_round_trip():
    Q = rationals()
    for x in [Fraction(0), Fraction(-7, 3), Fraction(5)]:
        assert Q.parse(Q.format(x)) == x
    F = prime_field(11)
    for x in range(11):
        assert F.parse(F.format(x)) == x


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("p", [2, 3, 5, 13])
def test_p_fold_sum_vanishes(p):
    F = prime_field(p)
    acc = F.zero()
    for _ in range(p):
        acc = F.add(acc, F.one())
    assert F.is_zero(acc)


fields = st.sampled_from([rationals(), prime_field(2), prime_field(3), prime_field(7), prime_field(101)])
ints = st.integers(-50, 50)


@given(fields, ints, ints, ints)
def test_field_axioms(F, x, y, z):
    x, y, z = F(x), F(y), F(z)
    assert F.add(x, y) == F.add(y, x)
    assert F.mul(x, y) == F.mul(y, x)
    assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.add(x, F.neg(x)) == F.zero()
    assert F.sub(x, y) == F.add(x, F.neg(y))
    if not F.is_zero(x):
        assert F.mul(x, F.inv(x)) == F.one()
        assert F.div(y, x) == F.mul(y, F.inv(x))
