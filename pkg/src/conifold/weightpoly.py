"""Weight polynomials of a few standard spaces and the operations that
combine them (stratification, products, Tate twists, shifts).

Polynomials live in Z[s, 1/s] with s = t^(1/2).  A tiny prefix expression
language covers the same constructors, e.g. ``blowup(product(A1,Gm))``.
"""
from __future__ import annotations

import re

from conifold.laurent import Laurent


class WeightPoly(Laurent):
    __slots__ = ()


def point() -> WeightPoly:
    return WeightPoly({0: 1})


def affine(n: int) -> WeightPoly:
    """A^n: t^n."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return WeightPoly({2 * n: 1})


def projective(n: int) -> WeightPoly:
    """P^n: 1 + t + ... + t^n."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return WeightPoly({2 * k: 1 for k in range(n + 1)})


def elliptic_curve() -> WeightPoly:
    return WeightPoly({0: 1, 1: -2, 2: 1})


def torus_gm() -> WeightPoly:
    """C^*, as A^1 minus a point."""
    return difference(affine(1), point())


def sum_(x: Laurent, y: Laurent) -> WeightPoly:
    return WeightPoly((x + y).coeffs)


def difference(x: Laurent, y: Laurent) -> WeightPoly:
    return WeightPoly((x - y).coeffs)


def product(x: Laurent, y: Laurent) -> WeightPoly:
    return WeightPoly((x * y).coeffs)


def blowup_point(x: Laurent) -> WeightPoly:
    """Replace one smooth point (weight 1) by an exceptional P^1 (1 + t)."""
    return sum_(difference(x, point()), projective(1))


def tate_twist(x: Laurent, i: int) -> WeightPoly:
    """Twist by Q(i/2): multiply by s^(-i), so odd i is a half twist."""
    return WeightPoly(x.shift(-i).coeffs)


def shift(x: Laurent, j: int) -> WeightPoly:
    """Cohomological shift [j]: multiply by (-1)^j."""
    return WeightPoly((x * (-1) ** j).coeffs)


def euler_characteristic(x: Laurent) -> int:
    return x.at_one()


# expression language

class WeightExprError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownAtom(WeightExprError):
    pass


_UNARY = {"blowup": blowup_point}
_BINARY = {"sum": sum_, "product": product, "difference": difference}
_WITH_INT = {"twist": tate_twist, "shift": shift}
_NAME = re.compile(r"[A-Za-z_][A-Za-z_]*")
_INT = re.compile(r"-?[0-9]+")


class _Parser:
    # offsets reported to users are 1-based character columns

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def fail(self, what: str):
        self.skip()
        found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        raise WeightExprError(f"syntax error: expected {what}, found {found}", self.pos + 1)

    def expect(self, ch: str) -> None:
        self.skip()
        if self.text.startswith(ch, self.pos):
            self.pos += 1
        else:
            self.fail(repr(ch))

    def integer(self) -> int:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.fail("an integer")
        self.pos = m.end()
        return int(m.group())

    def expr(self) -> WeightPoly:
        self.skip()
        start = self.pos
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.fail("an expression")
        name = m.group()
        self.pos = m.end()
        if name in _UNARY or name in _BINARY or name in _WITH_INT:
            self.expect("(")
            first = self.expr()
            if name in _UNARY:
                self.expect(")")
                return _UNARY[name](first)
            self.expect(",")
            if name in _BINARY:
                second = self.expr()
                self.expect(")")
                return _BINARY[name](first, second)
            k = self.integer()
            self.expect(")")
            return _WITH_INT[name](first, k)
        return self.atom(name, start)

    def atom(self, name: str, start: int) -> WeightPoly:
        if name in ("A", "P"):
            m = re.compile(r"[0-9]+").match(self.text, self.pos)
            if not m:
                raise WeightExprError(f"syntax error: {name} needs a dimension", self.pos + 1)
            self.pos = m.end()
            n = int(m.group())
            return affine(n) if name == "A" else projective(n)
        if name == "Gm":
            return torus_gm()
        if name == "E":
            return elliptic_curve()
        if name == "pt":
            return point()
        raise UnknownAtom(f"unknown atom {name!r}", start + 1)


def parse_weight_expr(text: str) -> WeightPoly:
    """Evaluate a weight-polynomial expression.

    >>> str(parse_weight_expr("blowup(product(A1, Gm))"))
    't^2'
    """
    p = _Parser(text)
    value = p.expr()
    p.skip()
    if p.pos != len(text):
        p.fail("end of input")
    return value
