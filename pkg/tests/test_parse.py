import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ideals
from monofilt import MonomialIdeal, ParseError, format_ideal, parse_ideal, parse_monomial
from monofilt.parse import default_vars, format_monomial


def test_reference_inputs():
    assert parse_ideal("(x^2, y^2)", ["x", "y"]).gens == ((0, 2), (2, 0))
    assert set(parse_ideal("(x^3, x^2*y, y^3)", ["x", "y"]).gens) == {(3, 0), (2, 1), (0, 3)}
    assert parse_ideal("(x, x^2)", ["x", "y"]).gens == ((1, 0),)


def test_juxtaposition_and_whitespace():
    a = parse_ideal("( x^3 ,x^2 y,  xy^2 )", "xy")
    b = parse_ideal("(x^3, x^2*y, x*y^2)", "xy")
    assert a == b
    assert parse_ideal("(x y)", "xy") == parse_ideal("(xy)", "xy") == parse_ideal("(x*y)", "xy")


def test_multi_letter_vars():
    vars = ["a1", "a2", "b"]
    I = parse_ideal("(a1^2*a2, b^3)", vars)
    assert set(I.gens) == {(2, 1, 0), (0, 0, 3)}
    with pytest.raises(ParseError):
        parse_ideal("(a1a2)", vars)


def test_unit_and_zero():
    assert parse_ideal("(1)", "xy").is_unit
    assert parse_ideal("(0)", "xy").is_zero
    assert format_ideal(MonomialIdeal.zero(2)) == "(0)"
    assert format_ideal(MonomialIdeal.unit(2)) == "(1)"
    with pytest.raises(ParseError):
        parse_ideal("(0, x)", "xy")


@pytest.mark.parametrize("text,line,col,fragment", [
    ("(x^2, w)", 1, 7, "unknown variable 'w'"),
    ("(x^0)", 1, 4, "exponent must be positive"),
    ("(x^2,\n y^)", 2, 4, "expected 'int'"),
    ("(x^2, y^2", 1, 10, "expected ')'"),
    ("x^2, y^2)", 1, 1, "expected '('"),
    ("(x^2) y", 1, 7, "trailing input"),
    ("(x^2 ; y)", 1, 6, "unexpected character"),
    ("(x^99999999999999)", 1, 4, "exponent overflow"),
    ("(x^2, 3)", 1, 7, "unexpected number"),
])
def test_errors_carry_position(text, line, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_ideal(text, "xy")
    assert info.value.line == line and info.value.column == col
    assert fragment in str(info.value)


def test_bad_variable_declarations():
    with pytest.raises(ValueError):
        parse_ideal("(x)", [])
    with pytest.raises(ValueError):
        parse_ideal("(x)", ["x", "x"])
    with pytest.raises(ValueError):
        parse_ideal("(x)", ["x", "2y"])


def test_monomials():
    assert parse_monomial("x^2*y", "xy") == (2, 1)
    assert parse_monomial("1", "xy") == (0, 0)
    assert format_monomial((0, 0), "xy") == "1"
    assert format_monomial((1, 3), "xy") == "x*y^3"
    with pytest.raises(ParseError):
        parse_monomial("0", "xy")


def test_default_vars():
    assert default_vars(2) == ["x", "y"]
    assert default_vars(5) == ["x1", "x2", "x3", "x4", "x5"]


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda d: ideals(d=d, max_exp=9, max_gens=6)))
def test_print_parse_roundtrip(I):
    vars = default_vars(I.dim)
    text = format_ideal(I, vars)
    assert parse_ideal(text, vars) == I
