"""Exact rationals.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, so it serves directly as the exact rational type here.
"""

from fractions import Fraction
from math import isqrt

from ..errors import NegativeInput, NotASquare, ParseError

ExactRational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions, ``"p/q"`` strings and gmpy2/sympy rationals."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    num = getattr(value, "numerator", None)
    den = getattr(value, "denominator", None)
    if num is None or den is None:
        raise TypeError(f"cannot interpret {value!r} as an exact rational")
    if callable(num):  # sympy Rational exposes methods, not attributes
        num, den = num(), den()
    return Fraction(int(num), int(den))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            p, q = text.split("/")
            value = Fraction(int(p), int(q))
        else:
            value = Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational: {text!r}") from exc
    return value


def format_rational(q: Fraction) -> str:
    """Render as ``p/q``, or ``p`` for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_square_int(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def rat_sqrt(q) -> Fraction:
    """Non-negative rational square root.

    >>> rat_sqrt(Fraction(169, 4))
    Fraction(13, 2)
    """
    q = as_rational(q)
    if q < 0:
        raise NegativeInput(f"square root of negative rational {q}")
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise NotASquare(f"{format_rational(q)} is not a rational square")
    return Fraction(rn, rd)


def height(q: Fraction) -> int:
    """max(|p|, q) for p/q in lowest terms."""
    return max(abs(q.numerator), q.denominator)
