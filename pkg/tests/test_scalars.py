from fractions import Fraction

import pytest
from hypothesis import given

from conftest import ext_scalars
from idemmeasure.errors import IndeterminateSum, ParseError
from idemmeasure.scalars import (
    NEG_INF,
    POS_INF,
    ext,
    format_scalar,
    join,
    meet,
    parse_scalar,
    translate,
)


def test_join_examples():
    assert join(ext(2), ext(5)) == 5
    assert join(POS_INF, ext(3)) == POS_INF
    for x in (ext(-7), ext("1/3"), POS_INF, NEG_INF):
        assert join(NEG_INF, x) == x


def test_meet_examples():
    assert meet(ext(2), ext(5)) == 2
    assert meet(NEG_INF, ext(3)) == NEG_INF
    for x in (ext(-7), ext("1/3"), POS_INF, NEG_INF):
        assert meet(POS_INF, x) == x


def test_translate_examples():
    assert translate(ext(-2), ext(-1)) == -3
    assert translate(NEG_INF, ext(7)) == NEG_INF
    assert translate(ext(7), POS_INF) == POS_INF
    assert translate(NEG_INF, NEG_INF) == NEG_INF
    with pytest.raises(IndeterminateSum):
        translate(NEG_INF, POS_INF)
    with pytest.raises(IndeterminateSum):
        translate(POS_INF, NEG_INF)


def test_ordering_of_infinities():
    assert NEG_INF < Fraction(-10**30) < Fraction(10**30) < POS_INF


@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)), ("2/6", Fraction(1, 3)), ("-1/2", Fraction(-1, 2)),
    ("0.25", Fraction(1, 4)), ("inf", POS_INF), ("-inf", NEG_INF),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["inf ", " 1", "1/0", "abc", "", "1/-2", "nan"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_ext_keeps_exactness():
    assert ext(0.1) == Fraction(0.1)  # exact binary value, not 1/10
    assert isinstance(ext(3), Fraction)
    with pytest.raises(ParseError):
        ext(float("nan"))
    with pytest.raises(ParseError):
        ext(True)


def test_format_round_trip():
    for v in (Fraction(1, 3), Fraction(-4), POS_INF, NEG_INF, Fraction(0)):
        assert parse_scalar(format_scalar(v)) == v
    assert format_scalar(Fraction(2, 6)) == "1/3"


@given(ext_scalars, ext_scalars, ext_scalars)
def test_distributive_lattice(a, b, c):
    assert join(a, join(b, c)) == join(join(a, b), c)
    assert meet(a, meet(b, c)) == meet(meet(a, b), c)
    assert join(a, b) == join(b, a) and meet(a, b) == meet(b, a)
    assert join(a, a) == a and meet(a, a) == a
    assert meet(a, join(b, c)) == join(meet(a, b), meet(a, c))
    assert join(a, meet(a, b)) == a
    assert meet(a, join(a, b)) == a


@given(ext_scalars, ext_scalars, ext_scalars)
def test_translate_monotone(a, b, c):
    lo, hi = min(a, b), max(a, b)
    try:
        left, right = translate(lo, c), translate(hi, c)
    except IndeterminateSum:
        return
    assert left <= right
