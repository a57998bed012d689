"""Valuation domains with a finitely generated value group G inside R.

G is generated by elements of Q(sqrt2, sqrt3).  A nonzero fractional ideal
is a cut of G: ``{g in G : g >= gamma}`` (weak) or ``{g in G : g > gamma}``
(strict), with ``gamma`` anywhere in the field.  Cuts are kept canonical:

* discrete G (rank 1): always weak at a group element, a strict cut is
  moved up to the next element;
* dense G (rank >= 2): a weak cut at a point outside G becomes strict,
  since the two describe the same set.

Canonical cuts are equal as sets iff their representations are equal; for
dense G this uses that distinct reals are separated by a group element.

A finitely generated subgroup of R is order-complete iff it is cyclic, which
is how ``vg_diagnose`` decides completeness.  The t-closure of a cut is the
cut itself: each principal subideal is its own v-closure and the principal
subideals of any cut cover it.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import ValidationError
from .exact import ExactReal
from .lattice import IntLattice, hnf, lattice_member

__all__ = [
    "ValueGroup",
    "CutIdeal",
    "Diagnosis",
    "WEAK",
    "STRICT",
    "DEFAULT_PROBES",
    "vg_member",
    "vg_diagnose",
    "vg_point_between",
    "vg_small_positive",
    "vg_points",
    "ci_make",
    "ci_unit",
    "ci_principal",
    "ci_mul",
    "ci_colon",
    "ci_integral_colon",
    "ci_inverse",
    "ci_v_closure",
    "ci_t_closure",
    "ci_is_principal",
    "ci_is_invertible",
    "ci_is_integral",
    "ci_eq",
    "ci_contains",
    "ci_intersect",
    "ci_add",
    "ci_universe",
]

WEAK = "weak"
STRICT = "strict"

DEFAULT_PROBES = ("sqrt3", "sqrt3/2", "4-sqrt3")

_CACHE = 1 << 16


@dataclass(frozen=True)
class ValueGroup:
    generators: Tuple[ExactReal, ...]
    scale: int = field(init=False, compare=False, repr=False)
    lattice: IntLattice = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(ExactReal.of(g) for g in self.generators)
        if not gens:
            raise ValidationError("a value group needs at least one generator")
        if any(g.is_zero() for g in gens):
            raise ValidationError("value group generators must be nonzero")
        object.__setattr__(self, "generators", gens)
        scale = 1
        for g in gens:
            for q in g.coords:
                scale = math.lcm(scale, q.denominator)
        object.__setattr__(self, "scale", scale)
        rows = [tuple(int(q * scale) for q in g.coords) for g in gens]
        object.__setattr__(self, "lattice", hnf(rows, 4))

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def discrete(self) -> bool:
        return self.rank == 1

    @property
    def dense(self) -> bool:
        return self.rank >= 2

    @property
    def complete(self) -> bool:
        return self.rank <= 1

    def basis(self) -> List[ExactReal]:
        """Z-basis of G as positive reals."""
        out = []
        for row in self.lattice.rows:
            g = ExactReal(*(Fraction(v, self.scale) for v in row))
            out.append(g if g.sign() > 0 else -g)
        return out

    @property
    def step(self) -> ExactReal:
        """Positive generator of a discrete group."""
        if not self.discrete:
            raise ValueError("only a discrete group has a smallest positive element")
        return self.basis()[0]

    def __str__(self):
        return "val:gens=" + ",".join(str(g) for g in self.generators)


@dataclass(frozen=True)
class Diagnosis:
    rank: int
    structure: str  # "discrete" | "dense"
    completeness: str  # "complete" | "incomplete"
    predicted_sharp: bool


@dataclass(frozen=True)
class CutIdeal:
    gamma: ExactReal
    kind: str

    def key(self):
        # smaller gamma first; at equal gamma the weak cut is the larger set
        return (self.gamma, 0 if self.kind == WEAK else 1)

    def __str__(self):
        return f"cut({self.gamma},{self.kind})"


# -- value group ---------------------------------------------------------


def vg_member(group: ValueGroup, x) -> bool:
    return _member(group, ExactReal.of(x))


@lru_cache(maxsize=_CACHE)
def _member(group: ValueGroup, x: ExactReal) -> bool:
    coords = [q * group.scale for q in x.coords]
    if any(q.denominator != 1 for q in coords):
        return False
    return lattice_member(tuple(int(q) for q in coords), group.lattice)


def vg_diagnose(group: ValueGroup) -> Diagnosis:
    return Diagnosis(
        rank=group.rank,
        structure="discrete" if group.discrete else "dense",
        completeness="complete" if group.complete else "incomplete",
        predicted_sharp=group.complete,
    )


@lru_cache(maxsize=256)
def vg_small_positive(group: ValueGroup, bound: ExactReal) -> ExactReal:
    """An element of G strictly between 0 and ``bound`` (G dense, bound > 0)."""
    if not group.dense:
        raise ValueError("only a dense group has arbitrarily small elements")
    u, v = group.basis()[:2]
    # Euclid on two incommensurable reals: remainders shrink and never vanish
    while min(u, v) >= bound:
        if u < v:
            u, v = v, u
        u = u - v * (u / v).floor()
    return min(u, v)


def vg_point_between(group: ValueGroup, lo: ExactReal, hi: ExactReal) -> Optional[ExactReal]:
    """Smallest-step element g of G with lo < g < hi, or None if there is none."""
    if not lo < hi:
        return None
    step = group.step if group.discrete else vg_small_positive(group, hi - lo)
    g = step * ((lo / step).floor() + 1)
    return g if g < hi else None


# -- cuts ------------------------------------------------------------------


def ci_make(group: ValueGroup, gamma, kind: str = WEAK) -> CutIdeal:
    """Canonical cut for ``{g >= gamma}`` (weak) or ``{g > gamma}`` (strict)."""
    return _canonical(group, ExactReal.of(gamma), kind)


@lru_cache(maxsize=_CACHE)
def _canonical(group: ValueGroup, gamma: ExactReal, kind: str) -> CutIdeal:
    if kind not in (WEAK, STRICT):
        raise ValueError(f"cut kind must be weak or strict, not {kind!r}")
    if group.discrete:
        step = group.step
        q = gamma / step
        k = q.ceil() if kind == WEAK else q.floor() + 1
        return CutIdeal(step * k, WEAK)
    if kind == WEAK and not vg_member(group, gamma):
        return CutIdeal(gamma, STRICT)
    return CutIdeal(gamma, kind)


def ci_unit(group: ValueGroup) -> CutIdeal:
    return CutIdeal(ExactReal(), WEAK)


def ci_principal(group: ValueGroup, value) -> CutIdeal:
    value = ExactReal.of(value)
    if not vg_member(group, value):
        raise ValueError(f"{value} is not a group value")
    return CutIdeal(value, WEAK)


@lru_cache(maxsize=_CACHE)
def ci_mul(group: ValueGroup, i: CutIdeal, j: CutIdeal) -> CutIdeal:
    kind = WEAK if i.kind == WEAK and j.kind == WEAK else STRICT
    return ci_make(group, i.gamma + j.gamma, kind)


@lru_cache(maxsize=_CACHE)
def ci_colon(group: ValueGroup, i: CutIdeal, j: CutIdeal) -> CutIdeal:
    """Fractional colon ``{x : x*J inside I}``."""
    kind = STRICT if i.kind == STRICT and j.kind == WEAK else WEAK
    return ci_make(group, i.gamma - j.gamma, kind)


def ci_contains(group: ValueGroup, i: CutIdeal, j: CutIdeal) -> bool:
    """True iff J is a subset of I."""
    s = (j.gamma - i.gamma).sign()
    if s:
        return s > 0
    return j.kind == STRICT or i.kind == WEAK


def ci_eq(group: ValueGroup, i: CutIdeal, j: CutIdeal) -> bool:
    return i == j


def ci_intersect(group: ValueGroup, i: CutIdeal, j: CutIdeal) -> CutIdeal:
    return j if ci_contains(group, i, j) else i


def ci_add(group: ValueGroup, i: CutIdeal, j: CutIdeal) -> CutIdeal:
    return i if ci_contains(group, i, j) else j


def ci_integral_colon(group: ValueGroup, i: CutIdeal, j: CutIdeal) -> CutIdeal:
    return ci_intersect(group, ci_colon(group, i, j), ci_unit(group))


def ci_inverse(group: ValueGroup, i: CutIdeal) -> CutIdeal:
    return ci_colon(group, ci_unit(group), i)


def ci_v_closure(group: ValueGroup, i: CutIdeal) -> CutIdeal:
    return ci_inverse(group, ci_inverse(group, i))


def ci_t_closure(group: ValueGroup, i: CutIdeal) -> CutIdeal:
    return i


def ci_is_principal(group: ValueGroup, i: CutIdeal) -> bool:
    return i.kind == WEAK


def ci_is_invertible(group: ValueGroup, i: CutIdeal) -> bool:
    return ci_mul(group, i, ci_inverse(group, i)) == ci_unit(group)


def ci_is_integral(group: ValueGroup, i: CutIdeal) -> bool:
    return i.gamma.sign() >= 0


# -- enumeration -------------------------------------------------------------


def vg_points(group: ValueGroup, max_value: ExactReal, height: int) -> List[ExactReal]:
    if group.discrete:
        step = group.step
        return [step * k for k in range((max_value / step).floor() + 1)]
    points = set()
    gens = group.generators
    for coefs in itertools.product(range(-height, height + 1), repeat=len(gens)):
        points.add(sum((g * c for g, c in zip(gens, coefs)), ExactReal()))
    for g in gens:
        g = g if g.sign() > 0 else -g
        points.update(g * k for k in range((max_value / g).floor() + 1))
    return [p for p in points if p.sign() >= 0 and not max_value < p]


def ci_universe(group: ValueGroup, max_value=4, height: int = 2,
                probes: Optional[Sequence] = None) -> List[CutIdeal]:
    """Integral cuts at group points in ``[0, max_value]`` plus probe points.

    Group points are the integer combinations of the generators with
    coefficients bounded by ``height`` together with the multiples of each
    generator; every point contributes both kinds of cut.
    """
    max_value = ExactReal.of(max_value)
    if probes is None:
        probes = DEFAULT_PROBES
    cuts = set()
    for v in vg_points(group, max_value, height):
        for kind in (WEAK, STRICT):
            c = ci_make(group, v, kind)
            if not max_value < c.gamma:
                cuts.add(c)
    for p in probes:
        p = ExactReal.of(p)
        if p.sign() >= 0:
            cuts.update(ci_make(group, p, kind) for kind in (WEAK, STRICT))
    return sorted(cuts, key=CutIdeal.key)
