"""Exact extended reals and the two idempotent operation pairs.

An extended scalar is either a :class:`fractions.Fraction` or one of the two
float infinities :data:`POS_INF` / :data:`NEG_INF`.  Finite floats never appear:
:func:`ext` converts them exactly, so every comparison in the algebra is exact.
Python already orders ``Fraction`` against ``float('inf')`` correctly, which is
why ``join`` and ``meet`` are plain ``max`` and ``min``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from .errors import IndeterminateSum, NonFiniteValue, ParseError

ExtScalar = Union[Fraction, float]

POS_INF: float = math.inf
NEG_INF: float = -math.inf

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?|[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?")
_INFINITIES = {"inf": POS_INF, "+inf": POS_INF, "-inf": NEG_INF}


def ext(value) -> ExtScalar:
    """Coerce ``value`` to an extended scalar.

    Accepts ints, Fractions, floats (finite ones are converted exactly),
    and strings in the serialized form ("3", "-2/6", "0.25", "inf", "-inf").
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if math.isnan(value):
            raise ParseError("NaN is not an extended scalar")
        if math.isinf(value):
            return POS_INF if value > 0 else NEG_INF
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise ParseError(f"not a scalar: {value!r}")


def parse_scalar(text: str) -> ExtScalar:
    if text in _INFINITIES:
        return _INFINITIES[text]
    if not _RATIONAL.fullmatch(text):
        raise ParseError(f"malformed scalar {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def format_scalar(value: ExtScalar) -> str:
    """Serialized form: "p/q" (or "p" when integral), "inf", "-inf"."""
    if value == POS_INF:
        return "inf"
    if value == NEG_INF:
        return "-inf"
    return str(Fraction(value))


def is_finite(value: ExtScalar) -> bool:
    return isinstance(value, Fraction)


def finite(value) -> Fraction:
    """Coerce to a finite scalar, rejecting the infinities."""
    v = ext(value)
    if not isinstance(v, Fraction):
        raise NonFiniteValue(f"expected a finite value, got {format_scalar(v)}")
    return v


def join(a: ExtScalar, b: ExtScalar) -> ExtScalar:
    return a if a >= b else b


def meet(a: ExtScalar, b: ExtScalar) -> ExtScalar:
    return a if a <= b else b


def translate(a: ExtScalar, c: ExtScalar) -> ExtScalar:
    """Extended addition; the infinities absorb everything except each other."""
    if isinstance(a, Fraction) and isinstance(c, Fraction):
        return a + c
    if (a == POS_INF and c == NEG_INF) or (a == NEG_INF and c == POS_INF):
        raise IndeterminateSum("-inf + inf is undefined")
    return a if not isinstance(a, Fraction) else c


def join_all(values, default: ExtScalar = NEG_INF) -> ExtScalar:
    out = default
    for v in values:
        if v > out:
            out = v
    return out


def meet_all(values, default: ExtScalar = POS_INF) -> ExtScalar:
    out = default
    for v in values:
        if v < out:
            out = v
    return out


def to_float(value: ExtScalar) -> float:
    return float(value)
