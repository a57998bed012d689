"""Uniform ideal-arithmetic interface over the two implemented domain families.

The checks in :mod:`sharpdomain.engine` and :mod:`sharpdomain.oracle` only
talk to an :class:`IdealDomain`.  ``colon`` is the fractional colon;
``integral_colon`` intersects it with the ring, which is the colon the
sharpness criterion quantifies over.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from . import quadratic as qr
from . import valuation as vd
from .exact import ExactReal

__all__ = ["IdealDomain", "QuadraticDomain", "ValuationDomain"]


class IdealDomain:
    """Capability record for one integral domain; subclasses fill it in."""

    kind: str = ""

    def unit(self): raise NotImplementedError
    def mul(self, i, j): raise NotImplementedError
    def colon(self, i, j): raise NotImplementedError
    def add(self, i, j): raise NotImplementedError
    def intersect(self, i, j): raise NotImplementedError
    def contains(self, i, j) -> bool: raise NotImplementedError
    def v_closure(self, i): raise NotImplementedError
    def t_closure(self, i): raise NotImplementedError
    def inverse(self, i): raise NotImplementedError
    def is_invertible(self, i) -> bool: raise NotImplementedError
    def is_integral(self, i) -> bool: raise NotImplementedError
    def universe(self, budget) -> list: raise NotImplementedError
    def principal(self, x): raise NotImplementedError
    def elem_mul(self, x, y): raise NotImplementedError
    def elements(self, height: int) -> list: raise NotImplementedError
    def prediction(self) -> Tuple[bool, str]: raise NotImplementedError

    def integral_colon(self, i, j):
        return self.intersect(self.colon(i, j), self.unit())

    def eq(self, i, j) -> bool:
        return i == j

    def key(self, i):
        return i.key()

    def literal(self, i) -> str:
        return str(i)

    def elem_literal(self, x) -> str:
        return str(x)

    def describe(self) -> str:
        raise NotImplementedError


class QuadraticDomain(IdealDomain):
    """Z[sqrt d]; ``budget`` for enumeration is a bound on the ideal norm."""

    kind = "quad"

    def __init__(self, d: int, lattice_budget: int = qr.DEFAULT_LATTICE_BUDGET):
        self.order = qr.OrderSpec(d)
        self.lattice_budget = lattice_budget
        self._unit = qr.qi_unit(self.order)

    @property
    def d(self) -> int:
        return self.order.d

    def describe(self) -> str:
        return str(self.order)

    def unit(self):
        return self._unit

    def ideal(self, *gens, den: int = 1):
        i = qr.qi_from_generators(self.order, gens)
        if den != 1:
            i = qr.qi_mul(i, qr.qi_principal(self.order, Fraction(1, den)))
        return i

    mul = staticmethod(qr.qi_mul)
    colon = staticmethod(qr.qi_colon)
    add = staticmethod(qr.qi_add)
    intersect = staticmethod(qr.qi_intersect)
    contains = staticmethod(qr.qi_contains)
    v_closure = staticmethod(qr.qi_v_closure)
    t_closure = staticmethod(qr.qi_t_closure)
    inverse = staticmethod(qr.qi_inverse)
    is_invertible = staticmethod(qr.qi_is_invertible)
    is_integral = staticmethod(qr.qi_is_integral)

    def integral_colon(self, i, j):
        return qr.qi_integral_colon(i, j)

    def universe(self, budget) -> list:
        return qr.qi_integral_ideals(self.order, int(budget))

    def superideals(self, i) -> list:
        return qr.qi_superideals(i, self.lattice_budget)

    def primes(self, max_norm: int) -> list:
        """Invertible maximal ideals of norm at most ``max_norm``."""
        return [p for p in self.universe(max_norm)
                if p != self._unit and qr.qi_is_maximal(p) and qr.qi_is_invertible(p)]

    def ord_at_prime(self, i, p) -> int:
        return qr.qi_ord_at_prime(i, p)

    def principal(self, x):
        return qr.qi_principal(self.order, x)

    def elem_mul(self, x, y):
        return x.mul(y, self.d)

    def elements(self, height: int) -> list:
        """Nonzero x + y*w with |x|, |y| <= height, one per principal ideal."""
        seen = {}
        coords = sorted(itertools.product(range(-height, height + 1), repeat=2),
                        key=lambda xy: (max(map(abs, xy)), abs(xy[0]) + abs(xy[1]), xy))
        for x, y in coords:
            if x == 0 and y == 0:
                continue
            z = qr.QuadNum(x, y)
            seen.setdefault(self.principal(z), z)
        return list(seen.values())

    def prediction(self) -> Tuple[bool, str]:
        if self.order.maximal:
            return True, "maximal order, hence a Dedekind domain; Dedekind domains are sharp"
        return False, ("non-maximal order: Noetherian but not integrally closed; "
                       "a sharp Noetherian domain must be Dedekind")


class ValuationDomain(IdealDomain):
    """Valuation ring of a value group; ``budget`` is the largest cut value."""

    kind = "val"

    def __init__(self, generators: Sequence, probes: Optional[Sequence] = None, height: int = 2):
        self.group = vd.ValueGroup(tuple(ExactReal.of(g) for g in generators))
        self.probes = tuple(ExactReal.of(p) for p in (vd.DEFAULT_PROBES if probes is None else probes))
        self.height = height
        self._unit = vd.ci_unit(self.group)

    def describe(self) -> str:
        return str(self.group)

    def unit(self):
        return self._unit

    def cut(self, gamma, kind: str = vd.WEAK):
        return vd.ci_make(self.group, gamma, kind)

    def mul(self, i, j):
        return vd.ci_mul(self.group, i, j)

    def colon(self, i, j):
        return vd.ci_colon(self.group, i, j)

    def add(self, i, j):
        return vd.ci_add(self.group, i, j)

    def intersect(self, i, j):
        return vd.ci_intersect(self.group, i, j)

    def contains(self, i, j) -> bool:
        return vd.ci_contains(self.group, i, j)

    def v_closure(self, i):
        return vd.ci_v_closure(self.group, i)

    def t_closure(self, i):
        return vd.ci_t_closure(self.group, i)

    def inverse(self, i):
        return vd.ci_inverse(self.group, i)

    def is_invertible(self, i) -> bool:
        return vd.ci_is_invertible(self.group, i)

    def is_integral(self, i) -> bool:
        return vd.ci_is_integral(self.group, i)

    def universe(self, budget) -> list:
        return vd.ci_universe(self.group, budget, self.height, self.probes)

    def principal(self, x):
        """Elements are represented by their values."""
        return vd.ci_principal(self.group, x)

    def elem_mul(self, x, y):
        return x + y

    def elements(self, height: int) -> list:
        """Values of nonzero ring elements: group points in ``[0, height]``."""
        points = vd.vg_points(self.group, ExactReal.of(height), self.height)
        return sorted(set(points))

    def prediction(self) -> Tuple[bool, str]:
        diag = vd.vg_diagnose(self.group)
        if diag.predicted_sharp:
            return True, f"value group is {diag.structure} and {diag.completeness} (a complete subgroup of the reals)"
        return False, f"value group is {diag.structure} and {diag.completeness}; not a complete subgroup of the reals"
