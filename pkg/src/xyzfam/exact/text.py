"""Canonical text rendering and parsing for polynomials and rational functions.

Grammar: integers, the variables ``a``, ``s``, ``t``, ``+ - * /``, ``^`` (or
``**``) with integer exponents, and parentheses.  Output always uses the
expanded canonical form, e.g. ``(2*a^2*t^8+10*a*s^4*t^4-s^8)/(8*a*t^4+2*s^4)``.
"""

import ast

from ..errors import DivisionByZero, ParseError
from .poly import VARIABLES, Poly, format_poly
from .ratfunc import RationalFunction

_BINOPS = {
    ast.Add: lambda x, y: x + y,
    ast.Sub: lambda x, y: x - y,
    ast.Mult: lambda x, y: x * y,
    ast.Div: lambda x, y: x / y,
}


def format_ratfunc(f: RationalFunction) -> str:
    num = format_poly(f.num)
    if f.den.is_one:
        return num
    if len(f.num.terms()) > 1:
        num = f"({num})"
    den = format_poly(f.den)
    if len(f.den.terms()) > 1 or f.den.leading_coefficient != 1:
        den = f"({den})"
    return f"{num}/{den}"


def parse_expression(text: str) -> RationalFunction:
    """Parse canonical (or any equivalent) text into a reduced rational function.

    >>> str(parse_expression("(s^4-4*a)*(s^4+12*a)/(s^4-4*a)"))
    '12*a+s^4'
    """
    source = text.strip().replace("^", "**")
    if not source:
        raise ParseError("empty expression")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    try:
        return _walk(tree.body, text)
    except DivisionByZero as exc:
        raise ParseError(f"cannot parse {text!r}: {exc}") from None


def _walk(node, text):
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _walk(node.left, text)
            exp = _int_literal(node.right, text)
            return base**exp
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise ParseError(f"unsupported operator in {text!r}")
        return op(_walk(node.left, text), _walk(node.right, text))
    if isinstance(node, ast.UnaryOp):
        if isinstance(node.op, ast.USub):
            return -_walk(node.operand, text)
        if isinstance(node.op, ast.UAdd):
            return _walk(node.operand, text)
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return RationalFunction(node.value)
    if isinstance(node, ast.Name) and node.id in VARIABLES:
        return RationalFunction(Poly.var(node.id))
    raise ParseError(f"unexpected token in {text!r}: {ast.unparse(node)}")


def _int_literal(node, text) -> int:
    sign = 1
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        sign, node = -1, node.operand
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return sign * node.value
    raise ParseError(f"exponent must be an integer literal in {text!r}")
