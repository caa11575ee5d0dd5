from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from voa.scalar import PoleError, Scalar, ScalarError, parse_scalar

k, c = Scalar.param("k"), Scalar.param("c")

small = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@st.composite
def scalars(draw):
    """Small rational functions in k and c."""
    num = draw(small) + draw(small) * k + draw(small) * c * k
    den = 1 + draw(st.integers(0, 3)) * k * k + draw(st.integers(0, 2)) * c * c
    return num / den


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, d):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + d == a + (b + d)
    assert (a * b) * d == a * (b * d)
    assert a * (b + d) == a * b + a * d
    assert a - a == 0
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=40, deadline=None)
@given(scalars(), small)
def test_specialize_is_a_homomorphism(a, v):
    b = a * a + 3 * a
    try:
        lhs = b.specialize(k=v)
        rhs = a.specialize(k=v) ** 2 + 3 * a.specialize(k=v)
    except PoleError:
        return
    assert lhs == rhs


def test_canonical_form():
    a = (k * k - 1) / (k - 1)
    assert a == k + 1
    assert hash(a) == hash(k + 1)
    assert str(Scalar(Fraction(-6, 4))) == "-3/2"


def test_constants():
    assert Scalar(3).is_constant()
    assert not k.is_constant()
    assert (k / k).to_fraction() == 1
    with pytest.raises(ValueError):
        k.to_fraction()


def test_pole_on_specialization():
    with pytest.raises(PoleError):
        (1 / (k + 1)).specialize(k=-1)


def test_division_by_zero():
    with pytest.raises(ScalarError):
        Scalar(1) / Scalar(0)


def test_parameters_and_factor():
    a = (k + 2) * (2 * k + 5) / (k + 4)
    assert a.parameters == ("k",)
    unit, facs = ((k + 2) * (k + 2) * (2 * k + 5)).factor()
    assert unit == 1
    assert dict((str(f), e) for f, e in facs) == {"2*k+5": 1, "k+2": 2}


@pytest.mark.parametrize("text,value", [
    ("-15", Scalar(-15)),
    ("7/3", Scalar(Fraction(7, 3))),
    ("-(3*k+8)/(k+2)", -(3 * k + 8) / (k + 2)),
    ("k^2 - 1", k * k - 1),
    ("c/3", c / 3),
])
def test_parse(text, value):
    assert parse_scalar(text) == value


def test_parse_roundtrip():
    a = -(k + 4) * (3 * k + 7) / (2 * (k + 2))
    assert parse_scalar(str(a)) == a


def test_parse_error_position():
    with pytest.raises(ValueError) as e:
        parse_scalar("3*/k")
    assert "column 3" in str(e.value)
