"""Exact reals in the field Q(sqrt2, sqrt3).

Every value is stored as four rational coordinates over the basis
``1, sqrt2, sqrt3, sqrt6``.  The basis is linearly independent over Q, so a
value is zero exactly when its four coordinates are zero, and closed under
multiplication, so the field operations never leave the representation.
Signs are decided by rational interval evaluation of the three square roots
with doubling precision.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterator, Tuple, Union

from .errors import ParseError

__all__ = ["ExactReal", "ParseError", "er_arith", "er_sign", "sqrt_bounds"]

Rational = Union[int, Fraction]

_RADICANDS = (2, 3, 6)
_NAMES = ("", "sqrt2", "sqrt3", "sqrt6")


def sqrt_bounds(n: int, bits: int) -> Tuple[Fraction, Fraction]:
    """Rational lo < sqrt(n) < hi with hi - lo = 2**-bits (n not a square)."""
    s = math.isqrt(n << (2 * bits))
    scale = 1 << bits
    return Fraction(s, scale), Fraction(s + 1, scale)


def _scale_interval(q: Fraction, lo: Fraction, hi: Fraction):
    if q >= 0:
        return q * lo, q * hi
    return q * hi, q * lo


@total_ordering
@dataclass(frozen=True)
class ExactReal:
    q0: Fraction = Fraction(0)
    q1: Fraction = Fraction(0)
    q2: Fraction = Fraction(0)
    q3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))

    # -- construction -------------------------------------------------

    @classmethod
    def of(cls, value: Union["ExactReal", Rational, str]) -> "ExactReal":
        if isinstance(value, ExactReal):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(Fraction(value))

    @classmethod
    def sqrt(cls, n: int) -> "ExactReal":
        if n not in _RADICANDS:
            raise ValueError(f"sqrt{n} is not a basis element")
        coords = [Fraction(0)] * 4
        coords[_RADICANDS.index(n) + 1] = Fraction(1)
        return cls(*coords)

    @property
    def coords(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.q0, self.q1, self.q2, self.q3)

    def is_zero(self) -> bool:
        return not (self.q0 or self.q1 or self.q2 or self.q3)

    def is_rational(self) -> bool:
        return not (self.q1 or self.q2 or self.q3)

    # -- field operations ---------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ExactReal(*(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return ExactReal(-self.q0, -self.q1, -self.q2, -self.q3)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ExactReal(*(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        # sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2
        return ExactReal(
            a0 * b0 + 2 * a1 * b1 + 3 * a2 * b2 + 6 * a3 * b3,
            a0 * b1 + a1 * b0 + 3 * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )

    __rmul__ = __mul__

    def conjugate(self, flip2: bool = False, flip3: bool = False) -> "ExactReal":
        """Apply the automorphisms sqrt2 -> -sqrt2 and/or sqrt3 -> -sqrt3."""
        s1 = -1 if flip2 else 1
        s2 = -1 if flip3 else 1
        return ExactReal(self.q0, s1 * self.q1, s2 * self.q2, s1 * s2 * self.q3)

    def inverse(self) -> "ExactReal":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        c2 = self.conjugate(flip2=True)
        in_q3 = self * c2
        c3 = in_q3.conjugate(flip3=True)
        norm = in_q3 * c3
        assert norm.is_rational() and norm.q0 != 0
        return c2 * c3 * (1 / norm.q0)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational():
            if other.q0 == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / other.q0)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    # -- order ---------------------------------------------------------

    def bounds(self, bits: int) -> Tuple[Fraction, Fraction]:
        """Rational interval containing the value, width O(2**-bits)."""
        lo = hi = self.q0
        for q, n in zip((self.q1, self.q2, self.q3), _RADICANDS):
            if q:
                a, b = _scale_interval(q, *sqrt_bounds(n, bits))
                lo += a
                hi += b
        return lo, hi

    def _refinements(self) -> Iterator[Tuple[Fraction, Fraction]]:
        bits = 16
        while True:
            yield self.bounds(bits)
            bits *= 2

    def sign(self) -> int:
        if self.is_rational():
            return (self.q0 > 0) - (self.q0 < 0)
        # integer form: value * den = n0 + n1 sqrt2 + n2 sqrt3 + n3 sqrt6
        den = math.lcm(*(q.denominator for q in self.coords))
        n0, *ns = (q.numerator * (den // q.denominator) for q in self.coords)
        bits = 16
        # nonzero irrational values are bounded away from 0, so this ends
        while True:
            scale = 1 << bits
            lo = hi = n0 * scale
            for n, r in zip(ns, _RADICANDS):
                if n:
                    s = math.isqrt(r << (2 * bits))
                    if n > 0:
                        lo += n * s
                        hi += n * (s + 1)
                    else:
                        lo += n * (s + 1)
                        hi += n * s
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def floor(self) -> int:
        if self.is_rational():
            return math.floor(self.q0)
        for lo, hi in self._refinements():
            if math.floor(lo) == math.floor(hi):
                return math.floor(lo)
        raise AssertionError("unreachable")

    def ceil(self) -> int:
        return -((-self).floor())

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __float__(self):
        lo, hi = self.bounds(60)
        return float((lo + hi) / 2)

    # -- literals --------------------------------------------------------

    def __str__(self):
        parts = []
        for q, name in zip(self.coords, _NAMES):
            if not q:
                continue
            mag = abs(q)
            if not name:
                body = str(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{mag}*{name}"
            if not parts:
                parts.append(body if q > 0 else "-" + body)
            else:
                parts.append(("+" if q > 0 else "-") + body)
        return "".join(parts) or "0"

    def __repr__(self):
        return f"ExactReal({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "ExactReal":
        return _ExactRealParser(text).parse()


def _coerce(value) -> "ExactReal | None":
    if isinstance(value, ExactReal):
        return value
    if isinstance(value, (int, Fraction)):
        return ExactReal(Fraction(value))
    return None


def er_arith(a: ExactReal, b: ExactReal, kind: str) -> ExactReal:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")


def er_sign(a: ExactReal) -> int:
    return a.sign()


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sqrt>sqrt\s*\(?\s*(?P<rad>\d+)\s*\)?)|(?P<op>[-+*/]))")


class _ExactRealParser:
    """Sum of terms ``[sign] rat [* sqrtN]`` or ``[sign] sqrtN [/ int]``.

    ``rat`` is an integer or ``p/q``; ``sqrtN`` names one of sqrt2, sqrt3, sqrt6.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m:
                raise ParseError("unexpected character", text, pos)
            start = m.start(m.lastgroup if m.lastgroup != "rad" else "sqrt")
            if m.group("num") is not None:
                self.tokens.append(("num", int(m.group("num")), start))
            elif m.group("sqrt") is not None:
                self.tokens.append(("sqrt", int(m.group("rad")), start))
            else:
                self.tokens.append((m.group("op"), None, start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> ExactReal:
        if not self.tokens:
            raise ParseError("empty real literal", self.text, 0)
        total = ExactReal()
        first = True
        while self.i < len(self.tokens):
            kind, _, pos = self.peek()
            sign = 1
            if kind in ("+", "-"):
                self.take()
                sign = -1 if kind == "-" else 1
            elif not first:
                raise ParseError("expected '+' or '-'", self.text, pos)
            total = total + self.term() * sign
            first = False
        return total

    def rational(self) -> Fraction:
        kind, value, pos = self.take()
        if kind != "num":
            raise ParseError("expected integer", self.text, pos)
        q = Fraction(value)
        if self.peek()[0] == "/" and self._next_is("num"):
            self.take()
            _, den, dpos = self.take()
            if den == 0:
                raise ParseError("zero denominator", self.text, dpos)
            q /= den
        return q

    def _next_is(self, kind) -> bool:
        return self.i + 1 < len(self.tokens) and self.tokens[self.i + 1][0] == kind

    def term(self) -> ExactReal:
        kind, value, pos = self.peek()
        if kind == "num":
            q = self.rational()
            if self.peek()[0] == "*":
                self.take()
                kind, value, pos = self.take()
                if kind != "sqrt":
                    raise ParseError("expected sqrt2, sqrt3 or sqrt6", self.text, pos)
                return self._root(value, pos) * q
            if self.peek()[0] == "sqrt":
                _, value, pos = self.take()
                return self._root(value, pos) * q
            return ExactReal(q)
        if kind == "sqrt":
            self.take()
            root = self._root(value, pos)
            if self.peek()[0] == "/":
                self.take()
                kind, den, dpos = self.take()
                if kind != "num" or den == 0:
                    raise ParseError("expected nonzero integer denominator", self.text, dpos)
                root = root / den
            return root
        raise ParseError("expected a term", self.text, pos)

    def _root(self, n, pos) -> ExactReal:
        if n not in _RADICANDS:
            raise ParseError(f"sqrt{n} is outside Q(sqrt2, sqrt3)", self.text, pos)
        return ExactReal.sqrt(n)
