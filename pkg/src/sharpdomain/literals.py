"""Text syntax for domains, elements, ideals and ideal expressions.

Grammar::

    domain   := "quad:d=" INT | "val:gens=" REAL ("," REAL)*
    element  := sum of terms RAT | RAT "w" | RAT "*w" | "w"      (quad only)
    ideal    := "ideal(" element ("," element)* ")" ["/" INT]
              | "cut(" REAL "," ("weak" | "strict") ")"
    expr     := ideal | FUNC "(" expr ("," expr)* ")"
    FUNC     := mul | colon | add | intersect | inverse | vclose | tclose

``REAL`` is the exact-real literal of :class:`~sharpdomain.exact.ExactReal`.
Errors carry the offset into the full text being parsed.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .domains import IdealDomain, QuadraticDomain, ValuationDomain
from .errors import ParseError, ValidationError
from .exact import ExactReal
from .quadratic import QuadNum

__all__ = ["parse_domain", "parse_element", "parse_ideal", "parse_expression", "evaluate", "FUNCTIONS"]

FUNCTIONS = {
    "mul": 2,
    "colon": 2,
    "add": 2,
    "intersect": 2,
    "inverse": 1,
    "vclose": 1,
    "tclose": 1,
}


def _shift(err: ParseError, text: str, offset: int) -> ParseError:
    return ParseError(err.message, text, err.pos + offset)


def parse_domain(text: str, probes=None) -> IdealDomain:
    text = text.strip()
    if text.startswith("quad:"):
        m = re.fullmatch(r"quad:d=([+-]?\d+)", text)
        if not m:
            raise ParseError("expected quad:d=<int>", text, 5)
        return QuadraticDomain(int(m.group(1)))
    if text.startswith("val:"):
        prefix = "val:gens="
        if not text.startswith(prefix):
            raise ParseError("expected val:gens=<real>,...", text, 4)
        gens = []
        offset = len(prefix)
        for chunk in text[len(prefix):].split(","):
            try:
                gens.append(ExactReal.parse(chunk))
            except ParseError as err:
                raise _shift(err, text, offset) from None
            offset += len(chunk) + 1
        return ValuationDomain(gens, probes=probes)
    raise ParseError("domain must start with quad: or val:", text, 0)


_ELEM_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<w>w)|(?P<op>[-+*]))")


def parse_element(text: str, offset: int = 0, full: str = None) -> QuadNum:
    """``x + y*w`` with rational coefficients, e.g. ``1+w``, ``-5+2w``, ``1/2-3/2w``."""
    full = text if full is None else full
    tokens = []
    pos = 0
    body = text.rstrip()
    while pos < len(body):
        m = _ELEM_TOKEN.match(body, pos)
        if not m:
            raise ParseError("unexpected character in element", full, offset + pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), offset + m.start(kind)))
        pos = m.end()
    if not tokens:
        raise ParseError("empty element", full, offset)
    x = Fraction(0)
    y = Fraction(0)
    k = 0
    first = True
    while k < len(tokens):
        sign = 1
        kind, val, p = tokens[k]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            k += 1
        elif not first:
            raise ParseError("expected '+' or '-'", full, p)
        if k >= len(tokens):
            raise ParseError("dangling sign", full, p)
        kind, val, p = tokens[k]
        coef = Fraction(1)
        has_num = False
        if kind == "num":
            num, _, den = val.replace(" ", "").partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", full, p)
            coef = Fraction(int(num), int(den or 1))
            has_num = True
            k += 1
            if k < len(tokens) and tokens[k][0] == "op" and tokens[k][1] == "*":
                k += 1
                if k >= len(tokens) or tokens[k][0] != "w":
                    raise ParseError("expected w after '*'", full, tokens[k - 1][2])
        if k < len(tokens) and tokens[k][0] == "w":
            y += sign * coef
            k += 1
        elif has_num:
            x += sign * coef
        else:
            raise ParseError("expected a number or w", full, p)
        first = False
    return QuadNum(x, y)


class _ExprParser:
    def __init__(self, domain: IdealDomain, text: str):
        self.domain = domain
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        return ParseError(msg, self.text, self.pos if pos is None else pos)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        self.ws()
        if not self.text.startswith(ch, self.pos):
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def ident(self):
        self.ws()
        m = re.compile(r"[a-z]+").match(self.text, self.pos)
        if not m:
            raise self.error("expected a function, ideal(...) or cut(...)")
        self.pos = m.end()
        return m.group(), m.start()

    def raw_arg(self):
        """Text up to the next ',' or ')' (literal arguments contain neither)."""
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",)":
            self.pos += 1
        if self.pos == len(self.text):
            raise self.error("unterminated argument list")
        return self.text[start:self.pos], start

    def expr(self):
        name, start = self.ident()
        if name == "ideal":
            return self.quad_ideal(start)
        if name == "cut":
            return self.cut(start)
        if name not in FUNCTIONS:
            raise self.error(f"unknown function {name!r}", start)
        self.expect("(")
        args = [self.expr()]
        self.ws()
        while self.text.startswith(",", self.pos):
            self.pos += 1
            args.append(self.expr())
            self.ws()
        self.expect(")")
        if len(args) != FUNCTIONS[name]:
            raise self.error(f"{name} takes {FUNCTIONS[name]} argument(s), got {len(args)}", start)
        return (name, *args)

    def quad_ideal(self, start):
        if not isinstance(self.domain, QuadraticDomain):
            raise self.error("ideal(...) literals need a quad: domain", start)
        self.expect("(")
        gens = []
        while True:
            raw, at = self.raw_arg()
            gens.append(parse_element(raw, at, self.text))
            if self.text[self.pos] == ")":
                self.pos += 1
                break
            self.pos += 1
        den = 1
        self.ws()
        if self.text.startswith("/", self.pos):
            self.pos += 1
            self.ws()
            m = re.compile(r"\d+").match(self.text, self.pos)
            if not m or int(m.group()) == 0:
                raise self.error("expected a positive integer denominator")
            den = int(m.group())
            self.pos = m.end()
        try:
            return self.domain.ideal(*gens, den=den)
        except ValueError as err:
            raise ValidationError(f"{err} in {self.text[start:self.pos]!r}") from None

    def cut(self, start):
        if not isinstance(self.domain, ValuationDomain):
            raise self.error("cut(...) literals need a val: domain", start)
        self.expect("(")
        raw, at = self.raw_arg()
        try:
            gamma = ExactReal.parse(raw)
        except ParseError as err:
            raise _shift(err, self.text, at) from None
        self.expect(",")
        self.ws()
        m = re.compile(r"weak|strict").match(self.text, self.pos)
        if not m:
            raise self.error("expected weak or strict")
        self.pos = m.end()
        self.expect(")")
        return self.domain.cut(gamma, m.group())

    def parse(self):
        value = self.expr()
        self.ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")
        return value


def parse_expression(domain: IdealDomain, text: str):
    """Parse to a tree: ideals at the leaves, ``(name, *args)`` tuples inside."""
    return _ExprParser(domain, text).parse()


def parse_ideal(domain: IdealDomain, text: str):
    tree = parse_expression(domain, text)
    if isinstance(tree, tuple):
        raise ParseError("expected an ideal literal, not an expression", text, 0)
    return tree


def evaluate(domain: IdealDomain, tree):
    if not isinstance(tree, tuple):
        return tree
    name, *args = tree
    vals = [evaluate(domain, a) for a in args]
    if name == "mul":
        return domain.mul(*vals)
    if name == "colon":
        return domain.colon(*vals)
    if name == "add":
        return domain.add(*vals)
    if name == "intersect":
        return domain.intersect(*vals)
    if name == "inverse":
        return domain.inverse(*vals)
    if name == "vclose":
        return domain.v_closure(*vals)
    if name == "tclose":
        return domain.t_closure(*vals)
    raise ValueError(name)
