import math
from fractions import Fraction

import pytest

from signfree import (
    CyclicMatrix,
    CyclicTriple,
    ExactScalar,
    ExpressionError,
    Kind,
    UnsignedPair,
    eval_text,
    format_value,
    kind_of,
    parse,
)

SQRT19 = f"{math.sqrt(19):.12g}"

# (expression, expected printed output)
CORPUS = [
    ("p{3,1} * p{4,6}", "p{18,22}"),
    ("reduce(p{3,1} * p{4,6})", "p{0,4}"),
    ("p{0,2.1} + p{2.1,0}", "p{21/10,21/10}"),
    ("reduce(p{4,6.1})", "p{0,21/10}"),
    ("t{2,1,0} * t{0,2,1}", "t{1,4,4}"),
    ("reduce(t{2,1,0} * t{0,2,1})", "t{0,3,3}"),
    ("reduce(t{1,1,0}^2)", "t{0,1,0}"),
    ("reduce(t{1,2,0}^2)", "t{0,3,3}"),
    ("t{1/3*sqrt3,2/3*sqrt3,0}^2", "t{1/3,4/3,4/3}"),
    ("reduce(t{1/3*sqrt3,2/3*sqrt3,0}^2)", "t{0,1,1}"),
    (
        "t{4+1*sqrt3,2*sqrt3,0} * conj(t{4+1*sqrt3,2*sqrt3,0})",
        "t{31+8*sqrt3,6+8*sqrt3,6+8*sqrt3}",
    ),
    ("reduce(t{4+1*sqrt3,2*sqrt3,0} * conj(t{4+1*sqrt3,2*sqrt3,0}))", "t{25,0,0}"),
    ("reduce(t{2,3,1})", "t{1,2,0}"),
    (
        "m{[0,3,2];[2,2,0];[1,0,3]} * m{[0,3,1];[1,0,0];[3,2,1]}",
        "m{[18,12,18];[11,14,20];[18,19,13]}",
    ),
    (
        "reduce(m{[0,3,2];[2,2,0];[1,0,3]} * m{[0,3,1];[1,0,0];[3,2,1]})",
        "m{[7,0,5];[0,2,7];[7,7,0]}",
    ),
    ("norm(m{[0,3,2];[2,2,0];[1,0,3]})", "1"),
    ("normsq(m{[0,3,1];[1,0,0];[3,2,1]})", "19"),
    ("norm(m{[0,3,1];[1,0,0];[3,2,1]})", SQRT19),
    ("normsq(t{3,0,5})", "19"),
    (
        "m{[0,3,2];[2,2,0];[1,0,3]} * m{[0,0,1];[0,1,0];[1,0,0]}",
        "m{[8,5,0];[5,0,8];[0,8,5]}",
    ),
    (
        "m{[0,2,1];[1,0,0];[2,0,0]} * m{[1,0,0];[0,1,0];[0,0,2]}",
        "m{[0,4,3];[2,0,6];[6,3,0]}",
    ),
    ("rowsums(m{[0,3,2];[2,2,0];[1,0,3]})", "t{5,4,4}"),
    ("reduce(I^2)", "m{[0,0,0];[1,0,0];[1,0,0]}"),
    ("reduce(J^2)", "m{[1,0,0];[0,0,0];[0,0,0]}"),
    ("reduce(m{[3,0,0];[0,0,0];[0,0,0]}^2)", "m{[9,0,0];[0,0,0];[0,0,0]}"),
    ("reduce(m{[3,0,0];[6,0,0];[0,0,0]}^2)", "m{[0,0,0];[27,0,0];[27,0,0]}"),
    ("tocomplex(t{0,1,1})", "-1+0*i"),
    ("tocomplex(t{1/3*sqrt3,2/3*sqrt3,0})", "0+1*i"),
    ("chars(ONE)", "(1+0*i, 1+0*i, 1+0*i)"),
    ("1/3+2/3*sqrt3", "1/3+2/3*sqrt3"),
    ("4-3*sqrt3", "4-3*sqrt3"),
    ("(1+1*sqrt3)*(1+1*sqrt3)", "4+2*sqrt3"),
    ("2.1", "21/10"),
    ("2*p{3,1}", "p{6,2}"),
    ("2 * ONE", "m{[2,0,0];[0,0,0];[0,0,0]}"),
    ("1/3 * t{1,4,4}", "t{1/3,4/3,4/3}"),
    ("2 + t{0,1,1}", "t{2,1,1}"),
    ("-2 + t{0,0,0}", "t{0,2,2}"),
    ("1 + p{0,3}", "p{1,3}"),
    ("NEG1 + ONE", "m{[1,0,0];[1,0,0];[1,0,0]}"),
    ("reduce(NEG1 + ONE)", "m{[0,0,0];[0,0,0];[0,0,0]}"),
    ("NI * NI", "m{[1/3,0,0];[4/3,0,0];[4/3,0,0]}"),
    ("reduce(NI * NI)", "m{[0,0,0];[1,0,0];[1,0,0]}"),
]


@pytest.mark.parametrize("text,expected", CORPUS)
def test_corpus(text, expected):
    assert format_value(eval_text(text)) == expected


@pytest.mark.parametrize("text,expected", CORPUS)
def test_printed_algebra_values_reparse(text, expected):
    value = eval_text(text)
    if isinstance(value, (ExactScalar, UnsignedPair, CyclicTriple, CyclicMatrix)):
        again = eval_text(format_value(value))
        assert again == value
        assert format_value(again) == format_value(value)


def test_whitespace_is_insignificant():
    assert format_value(eval_text(" reduce( p{ 3 , 1 } * p{ 4 , 6 } ) ")) == "p{0,4}"
    assert eval_text("1 / 3") == ExactScalar(Fraction(1, 3))


def test_names_are_case_insensitive():
    assert eval_text("SQRT3") == eval_text("sqrt3")
    assert eval_text("nll") == eval_text("NLL")
    assert format_value(eval_text("REDUCE(T{2,3,1})")) == "t{1,2,0}"


def test_kinds():
    assert kind_of(parse("p{1,0}")) is Kind.PAIR
    assert kind_of(parse("t{1,0,0}")) is Kind.TRIPLE
    assert kind_of(parse("J")) is Kind.MATRIX
    assert kind_of(parse("norm(t{1,0,0})")) is Kind.FLOAT
    assert kind_of(parse("chars(J)")) is Kind.CHARS
    assert kind_of(parse("tocomplex(t{1,0,0})")) is Kind.COMPLEX
    assert kind_of(parse("2 * t{1,0,0}")) is Kind.TRIPLE


@pytest.mark.parametrize(
    "text",
    [
        "m{[0,3,2];[2,2,0];[1,0,3]",  # unclosed
        "(2",
        "p{1,2,3}",
        "t{1,2}",
        "2 +",
        "^2",
        "p{1 2}",
    ],
)
def test_syntax_errors_carry_positions(text):
    with pytest.raises(ExpressionError) as err:
        parse(text)
    assert err.value.pos >= 0
    assert "at position" in str(err.value)


@pytest.mark.parametrize("text", ["foo", "q{1,2}", "x + 1"])
def test_unknown_names(text):
    with pytest.raises(ExpressionError, match="unknown name"):
        parse(text)


@pytest.mark.parametrize(
    "text",
    [
        "p{1,0} + t{1,0,0}",
        "t{1,0,0} + J",
        "p{1,0} * t{1,0,0}",
        "norm(p{1,0})",
        "conj(J)",
        "tocomplex(J)",
        "rowsums(t{1,0,0})",
        "chars(t{1,0,0})",
        "-t{1,0,0}",
        "t{1,1,0} - t{1,0,0}",
        "norm(t{1,0,0}) + 1",
        "tocomplex(t{1,0,0}) * 2",
        "reduce(1)",
    ],
)
def test_kind_errors_detected_before_evaluation(text):
    expr = parse(text)  # parses fine
    with pytest.raises(ExpressionError):
        kind_of(expr)


def test_malformed_literals():
    with pytest.raises(ExpressionError, match="zero denominator"):
        parse("1/0")
    with pytest.raises(ExpressionError, match="integer"):
        parse("2.5/3")
    with pytest.raises(ExpressionError, match="integer denominator"):
        parse("6/sqrt3")
    with pytest.raises(ExpressionError, match="exponent"):
        parse("2^-1")
    with pytest.raises(ExpressionError, match="exponent"):
        parse("t{1,1,0}^x")


def test_value_errors_surface_at_evaluation():
    with pytest.raises(ValueError):
        eval_text("p{0-1,0}")
    with pytest.raises(ValueError):
        eval_text("(0-2) * t{1,0,0}")


def test_scalar_broadcast_matches_embeddings():
    assert eval_text("2 + p{0,0}") == UnsignedPair.from_signed(2)
    assert eval_text("-3 + t{0,0,0}") == CyclicTriple.from_signed(-3)
    assert eval_text("-1 + m{[0,0,0];[0,0,0];[0,0,0]}") == CyclicMatrix.from_signed(-1)


def test_power_zero_gives_identities():
    assert eval_text("p{3,1}^0") == UnsignedPair(1, 0)
    assert eval_text("t{2,3,1}^0") == CyclicTriple.one()
    assert eval_text("m{[0,3,2];[2,2,0];[1,0,3]}^0") == CyclicMatrix.one()
    assert eval_text("2^0") == ExactScalar(1)


def test_float_and_complex_formats():
    assert format_value(1.0) == "1"
    assert format_value(math.sqrt(19)) == SQRT19
    assert format_value(complex(-1.0, 0.0)) == "-1+0*i"
    assert format_value(complex(0.5, -2.25)) == "0.5-2.25*i"
