import pytest
from hypothesis import given, strategies as st

from qcisyz.fields import QQ, PrimeField
from qcisyz.parsing import ParseError, parse_polynomial
from qcisyz.poly import Polynomial, format_polynomial

F = PrimeField(32003)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("x", "x"),
        ("x + y + z", "x + y + z"),
        ("(x+y)^2", "x^2 + 2*x*y + y^2"),
        ("-x^2 - -y^2", "-x^2 + y^2"),
        ("2*x*y - y*x", "x*y"),
        ("x^2*y/2", "1/2*x^2*y"),
        ("0", "0"),
        ("(x + y)*(x - y)", "x^2 - y^2"),
    ],
)
def test_parse_examples(text, expected):
    assert format_polynomial(parse_polynomial(text, QQ)) == expected


monos = st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))


@given(
    d=st.dictionaries(monos, st.integers(1, 31000), min_size=1, max_size=8)
)
def test_parse_format_round_trip(d):
    f = Polynomial(F, {m: F.coerce(c) for m, c in d.items()})
    assert parse_polynomial(format_polynomial(f), F) == f


@pytest.mark.parametrize(
    "bad",
    ["", "x +", "x^", "w + y", "x^-2", "(x + y", "x y", "3.5*x", "x/(y)", "x//2"],
)
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_polynomial(bad, QQ)


def test_parse_error_carries_position():
    try:
        parse_polynomial("x + w", QQ)
    except ParseError as e:
        assert e.position == 4
    else:
        pytest.fail("expected ParseError")


def test_division_only_by_integer_literal():
    f = parse_polynomial("x/3", QQ)
    assert format_polynomial(f) == "1/3*x"
    with pytest.raises(ParseError):
        parse_polynomial("x/0", QQ)


def test_prime_field_coefficients_normalized():
    f = parse_polynomial("32004*x - y", F)
    assert format_polynomial(f) == "x + 32002*y"
