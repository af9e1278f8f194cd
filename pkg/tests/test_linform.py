from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hecke_residual.linform import LinForm, Q, as_rational, format_rational, parse_rational_list

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
forms = st.builds(
    lambda a, b, c: LinForm({"k1": a, "k2": b}, c),
    rationals, rationals, rationals,
)


def test_rational_text_forms():
    assert format_rational(Q(3, 1)) == "3"
    assert format_rational(Q(-1, 2)) == "-1/2"
    assert as_rational("4/6") == Fraction(2, 3)
    assert parse_rational_list("1, -1/2,3") == (Q(1), Q(-1, 2), Q(3))


def test_floats_are_rejected():
    with pytest.raises(Exception):
        as_rational(0.5)


def test_zero_coefficients_are_dropped():
    form = LinForm({"k1": 0, "k2": 2})
    assert form.names() == ("k2",)
    assert str(form) == "2*k2"


def test_parse_round_trip():
    for text in ("k1", "-k1 + k2", "1/2*k2 - 1/2*k1", "2*k1 + 3*k2 + 1"):
        form = LinForm.parse(text)
        assert LinForm.parse(str(form)) == form


def test_canonical_text_keeps_parameter_order():
    assert str(LinForm.parse("k2 + 5*k1")) == "5*k1 + k2"


@given(forms, forms)
def test_addition_is_coefficientwise(a, b):
    s = a + b
    for name in ("k1", "k2"):
        assert s.coefficient(name) == a.coefficient(name) + b.coefficient(name)
    assert s.constant == a.constant + b.constant


@given(forms, rationals, rationals)
def test_evaluation_is_linear(a, x, y):
    values = {"k1": x, "k2": y}
    assert (3 * a).evaluate(values) == 3 * a.evaluate(values)
    assert (a - a).evaluate(values) == 0


@given(forms)
def test_monic_form_has_leading_one(a):
    if a.is_zero() or not a.names():
        return
    m = a.monic()
    assert m.leading_coefficient() == 1
    assert m * a.leading_coefficient() == a


@given(forms)
def test_sign_normalization_is_idempotent(a):
    s = a.sign_normalized()
    assert s.sign_normalized() == s
    assert s in (a, -a)
