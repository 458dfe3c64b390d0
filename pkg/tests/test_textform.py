"""Text grammar: parsing and printing of polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dualnets.poly import PolyRing
from dualnets.scalar import OMEGA, PrimeField, QQ, QW
from dualnets.textform import (
    ParseError,
    parse_poly,
    parse_poly_file,
    poly_to_str,
    scan_variables,
)

R = PolyRing(QQ, ("x", "y"))
x, y = R.gens()
W = PolyRing(QW, ("u", "v"))
u, v = W.gens()


def test_parse_basic_forms():
    assert parse_poly("x^2 - 2*x*y + y^2", R) == (x - y) ** 2
    assert parse_poly("-x", R) == -x
    assert parse_poly("3", R) == R.const(3)
    assert parse_poly("(x + 1)^2 - x^2", R) == 2 * x + 1
    assert parse_poly("2*(x - y)", R) == 2 * x - 2 * y


def test_grammar_requires_explicit_operators():
    # Implicit products and '**' are not part of the grammar.
    for bad in ("x(x+1)", "2x", "x**3"):
        with pytest.raises(ParseError):
            parse_poly(bad, R)


def test_parse_rational_coefficients():
    assert parse_poly("1/2*x + 1/3", R) == Fraction(1, 2) * x + Fraction(1, 3)
    assert parse_poly("x/2", R) == Fraction(1, 2) * x


def test_parse_omega():
    p = parse_poly("w^2 + w + 1", W)
    assert p.is_zero
    assert parse_poly("w*u - v", W) == OMEGA * u - v


def test_omega_rejected_over_plain_rationals():
    with pytest.raises(ParseError):
        parse_poly("w*x", R)


def test_parse_unknown_variable():
    with pytest.raises(ParseError):
        parse_poly("x + q", R)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as e:
        parse_poly("x + $", R, line=4)
    assert e.value.line == 4
    assert e.value.col == 5
    assert "line 4" in str(e.value)


def test_parse_error_unbalanced():
    for bad in ("(x + y", "x + ", "x ^ y", "* x", "x + + +"):
        with pytest.raises(ParseError):
            parse_poly(bad, R)


def test_parse_poly_file_skips_comments_and_blanks():
    text = """
    # heading comment
    x + y

    x - y   # no trailing comments, this is literal
    """
    # A trailing '#' inside a line is an error, so keep lines clean here.
    polys = parse_poly_file("# c\nx + y\n\nx - y\n", R)
    assert polys == [x + y, x - y]


def test_parse_poly_file_error_carries_line_number():
    with pytest.raises(ParseError) as e:
        parse_poly_file("x + y\nx ++* y\n", R)
    assert e.value.line == 2


def test_scan_variables():
    names, has_w = scan_variables("# c\na + b*2\nc^2 - a\n")
    assert names == ["a", "b", "c"]
    assert has_w is False
    names, has_w = scan_variables("w*a - b\n")
    assert names == ["a", "b"]
    assert has_w is True


def test_print_forms():
    assert poly_to_str(R.zero) == "0"
    assert poly_to_str(x - y) == "x - y"
    assert poly_to_str(-x + 1) == "-x + 1"
    assert poly_to_str(2 * x**3 * y) == "2*x^3*y"
    assert poly_to_str(Fraction(1, 2) * x) == "1/2*x"


def test_print_omega_coefficients_parenthesized():
    p = (1 + OMEGA) * u + v
    s = poly_to_str(p)
    assert parse_poly(s, W) == p
    q = OMEGA * u
    assert parse_poly(poly_to_str(q), W) == q


def test_prime_field_coefficients_roundtrip():
    F = PrimeField(13)
    S = PolyRing(F, ("x", "y"))
    p = S.parse("12*x^2 + 5*y + 7")
    assert parse_poly(poly_to_str(p), S) == p


def _qq_polys():
    coeff = st.integers(-20, 20)
    monom = st.tuples(st.integers(0, 5), st.integers(0, 5))
    return st.lists(st.tuples(monom, coeff), max_size=6).map(
        lambda ts: R.from_terms((m, Fraction(c)) for m, c in ts)
    )


def _qw_polys():
    coeff = st.builds(
        lambda a, b: a + b * OMEGA, st.integers(-9, 9), st.integers(-9, 9)
    )
    monom = st.tuples(st.integers(0, 4), st.integers(0, 4))
    return st.lists(st.tuples(monom, coeff), max_size=6).map(
        lambda ts: W.from_terms(ts)
    )


@given(_qq_polys())
@settings(max_examples=80)
def test_roundtrip_rational(p):
    assert parse_poly(poly_to_str(p), R) == p


@given(_qw_polys())
@settings(max_examples=80)
def test_roundtrip_cyclotomic(p):
    assert parse_poly(poly_to_str(p), W) == p
