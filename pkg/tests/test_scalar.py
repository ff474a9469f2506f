from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from slvir.errors import NotRepresentable
from slvir.scalar import Scalar, sqrt_exact

S = Scalar.of


def scalars(nonzero=False):
    fracs = st.fractions(min_value=-9, max_value=9, max_denominator=9)
    base = st.builds(Scalar, fracs, fracs)
    if nonzero:
        return base.filter(lambda s: not s.is_zero())
    return base


def test_product_of_conjugates():
    assert S("1/2+1*i") * S("1/2-1*i") == S("5/4")


def test_fraction_addition():
    assert S("2/3") + S("1/6") == S("5/6")


@given(scalars(nonzero=True))
def test_self_division_is_one(x):
    assert x / x == Scalar.one()


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        S(1) / Scalar.zero()


def test_pow_negative():
    assert S("1/2") ** -2 == S(4)
    assert Scalar.i() ** -1 == -Scalar.i()


def test_sqrt_examples():
    assert sqrt_exact(S("9/4")) == S("3/2")
    assert sqrt_exact(S(-1)) == Scalar.i()
    with pytest.raises(NotRepresentable):
        sqrt_exact(S(2))


def test_sqrt_branch_choice():
    # positive real part; for purely real negatives, nonnegative imaginary
    assert sqrt_exact(S("2*i")) == S("1+1*i")
    assert sqrt_exact(S("-2*i")) == S("1-1*i")
    assert sqrt_exact(S(-4)) == S("2*i")
    assert sqrt_exact(Scalar.zero()) == Scalar.zero()


@given(scalars())
def test_sqrt_of_square(s):
    r = sqrt_exact(s * s)
    assert r in (s, -s)
    assert r * r == s * s


def test_parse_and_str_round_trip():
    for text in ["0", "3", "-1/2", "1/2+2*i", "1/2-2*i", "-1/3*i", "1*i"]:
        v = Scalar.parse(text)
        assert Scalar.parse(str(v)) == v
    assert Scalar.parse("i") == Scalar.i()
    assert Scalar.parse("-i") == -Scalar.i()
    with pytest.raises(ValueError):
        Scalar.parse("1//2")
    with pytest.raises(ValueError):
        Scalar.parse("")


def test_json_round_trip():
    v = Scalar(Fraction(-3, 7), Fraction(5, 2))
    assert Scalar.from_json(v.to_json()) == v
    assert v.to_json() == ["-3", "7", "5", "2"]


def test_integer_predicates():
    assert S(4).is_integer() and S(4).as_int() == 4
    assert not S("1/2").is_integer()
    assert not S("1*i").is_integer()
    with pytest.raises(ValueError):
        S("1/2").as_int()
