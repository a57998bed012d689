"""Fractional ideals of the quadratic order O = Z[w], w = sqrt(d).

A fractional ideal is ``L / den`` with ``L`` an integral ideal given by its
Hermite basis ``a, b + c*w`` (``a > 0``, ``c > 0``, ``0 <= b < a``, ``c | a``,
``c | b``).  Internally an element ``x + y*w`` is the integer row ``(y, x)``,
so the row HNF of an ideal lattice is exactly ``((c, b), (0, a))``.

Everything reduces to three lattice kernels: HNF of a generating set,
intersection, and preimage under multiplication maps.  Results are memoised
because ideals are immutable and sweeps recompute the same colons many times.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from .errors import AllGeneratorsZero, NonInvertiblePrime, NormBoundExceeded, ValidationError
from .lattice import IntLattice, hnf, lattice_intersect, lattice_member, lattice_preimage

__all__ = [
    "OrderSpec",
    "QuadNum",
    "QuadIdeal",
    "qi_from_generators",
    "qi_principal",
    "qi_unit",
    "qi_mul",
    "qi_colon",
    "qi_integral_colon",
    "qi_intersect",
    "qi_add",
    "qi_inverse",
    "qi_v_closure",
    "qi_t_closure",
    "qi_is_invertible",
    "qi_norm",
    "qi_contains",
    "qi_eq",
    "qi_is_integral",
    "qi_superideals",
    "qi_integral_ideals",
    "qi_is_maximal",
    "qi_ord_at_prime",
    "DEFAULT_LATTICE_BUDGET",
]

DEFAULT_LATTICE_BUDGET = 10_000
_CACHE = 1 << 16


def _squarefree(n: int) -> bool:
    n = abs(n)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class OrderSpec:
    d: int

    def __post_init__(self):
        if self.d in (0, 1) or not _squarefree(self.d):
            raise ValidationError(f"d = {self.d} must be squarefree and not 0 or 1")

    @property
    def maximal(self) -> bool:
        """Z[sqrt d] is the full ring of integers iff d is not 1 mod 4."""
        return self.d % 4 != 1

    def __str__(self):
        return f"quad:d={self.d}"


@dataclass(frozen=True)
class QuadNum:
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def is_zero(self) -> bool:
        return not (self.x or self.y)

    def mul(self, other: "QuadNum", d: int) -> "QuadNum":
        return QuadNum(self.x * other.x + d * self.y * other.y,
                       self.x * other.y + self.y * other.x)

    def __add__(self, other: "QuadNum") -> "QuadNum":
        return QuadNum(self.x + other.x, self.y + other.y)

    def __neg__(self):
        return QuadNum(-self.x, -self.y)

    def height(self) -> Fraction:
        return max(abs(self.x), abs(self.y))

    def __str__(self):
        if not self.y:
            return str(self.x)
        y = abs(self.y)
        wpart = "w" if y == 1 else f"{y}w"
        if not self.x:
            return wpart if self.y > 0 else "-" + wpart
        return f"{self.x}{'+' if self.y > 0 else '-'}{wpart}"


@dataclass(frozen=True)
class QuadIdeal:
    d: int
    den: int
    a: int
    b: int
    c: int

    @property
    def lattice(self) -> IntLattice:
        return IntLattice(((self.c, self.b), (0, self.a)), 2)

    def key(self):
        """Fixed total order: norm first, then the canonical coordinates."""
        return (Fraction(self.a * self.c, self.den ** 2), self.den, self.a, self.c, self.b)

    def generators(self) -> Tuple[QuadNum, QuadNum]:
        return (QuadNum(Fraction(self.a, self.den)), QuadNum(Fraction(self.b, self.den), Fraction(self.c, self.den)))

    def __str__(self):
        body = f"ideal({self.a},{QuadNum(self.b, self.c)})"
        return body if self.den == 1 else f"{body}/{self.den}"


# -- construction -------------------------------------------------------


def _mul_map(gx: int, gy: int, d: int):
    # (y, x) -> coordinates of (x + y w)(gx + gy w)
    return ((gx, d * gy), (gy, gx))


def _from_lattice(d: int, lat: IntLattice, den: int) -> QuadIdeal:
    if lat.rank != 2:
        raise ValueError("ideal lattice must have full rank")
    (c, b), (_, a) = lat.rows
    g = math.gcd(math.gcd(a, b), math.gcd(c, den))
    if g > 1:
        a, b, c, den = a // g, b // g, c // g, den // g
    return QuadIdeal(d, den, a, b, c)


def _scaled_rows(ideal: QuadIdeal, k: int):
    return [(ideal.c * k, ideal.b * k), (0, ideal.a * k)]


def _check_same(*ideals: QuadIdeal) -> int:
    d = ideals[0].d
    if any(i.d != d for i in ideals):
        raise ValueError("ideals belong to different orders")
    return d


def qi_from_generators(order: OrderSpec, gens: Iterable) -> QuadIdeal:
    gens = [g if isinstance(g, QuadNum) else QuadNum(g) for g in gens]
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        raise AllGeneratorsZero("an ideal needs a nonzero generator")
    den = 1
    for g in nonzero:
        den = math.lcm(den, g.x.denominator, g.y.denominator)
    rows = []
    d = order.d
    for g in nonzero:
        gx, gy = int(g.x * den), int(g.y * den)
        rows.append((gy, gx))
        rows.append((gx, d * gy))  # g * w
    return _from_lattice(d, hnf(rows, 2), den)


def qi_principal(order: OrderSpec, x) -> QuadIdeal:
    return qi_from_generators(order, [x])


def qi_unit(order: OrderSpec) -> QuadIdeal:
    return QuadIdeal(order.d, 1, 1, 0, 1)


# -- arithmetic ---------------------------------------------------------


@lru_cache(maxsize=_CACHE)
def qi_mul(i: QuadIdeal, j: QuadIdeal) -> QuadIdeal:
    d = _check_same(i, j)
    rows = []
    for (iy, ix) in i.lattice.rows:
        for (jy, jx) in j.lattice.rows:
            rows.append((ix * jy + iy * jx, ix * jx + d * iy * jy))
    return _from_lattice(d, hnf(rows, 2), i.den * j.den)


@lru_cache(maxsize=_CACHE)
def qi_colon(i: QuadIdeal, j: QuadIdeal) -> QuadIdeal:
    """Fractional colon ``{t in K : t*J inside I}``."""
    d = _check_same(i, j)
    # t*J0 inside I0 forces t*a_J in O, so t = z / a_J with z in O and
    # z * g in a_J * I0 for the two Z-generators g of J0
    n = j.a
    target = IntLattice(tuple(tuple(n * v for v in r) for r in i.lattice.rows), 2)
    maps = [_mul_map(j.b, j.c, d), _mul_map(j.a, 0, d)]
    z = lattice_preimage(maps, target)
    scaled = hnf(_rows_times(z.rows, j.den), 2)
    return _from_lattice(d, scaled, n * i.den)


def _rows_times(rows, k: int):
    return [tuple(k * v for v in r) for r in rows]


def _common(i: QuadIdeal, j: QuadIdeal):
    den = math.lcm(i.den, j.den)
    return den, _scaled_rows(i, den // i.den), _scaled_rows(j, den // j.den)


@lru_cache(maxsize=_CACHE)
def qi_intersect(i: QuadIdeal, j: QuadIdeal) -> QuadIdeal:
    d = _check_same(i, j)
    den, ri, rj = _common(i, j)
    return _from_lattice(d, lattice_intersect(hnf(ri, 2), hnf(rj, 2)), den)


@lru_cache(maxsize=_CACHE)
def qi_add(i: QuadIdeal, j: QuadIdeal) -> QuadIdeal:
    d = _check_same(i, j)
    den, ri, rj = _common(i, j)
    return _from_lattice(d, hnf(ri + rj, 2), den)


def _unit_of(i: QuadIdeal) -> QuadIdeal:
    return QuadIdeal(i.d, 1, 1, 0, 1)


def qi_integral_colon(i: QuadIdeal, j: QuadIdeal) -> QuadIdeal:
    """``{x in O : x*J inside I}``, the colon taken inside the ring."""
    return qi_intersect(qi_colon(i, j), _unit_of(i))


def qi_inverse(i: QuadIdeal) -> QuadIdeal:
    return qi_colon(_unit_of(i), i)


def qi_v_closure(i: QuadIdeal) -> QuadIdeal:
    return qi_inverse(qi_inverse(i))


def qi_t_closure(i: QuadIdeal) -> QuadIdeal:
    # O is Noetherian: every ideal is finitely generated, so I_t = I_v
    return qi_v_closure(i)


def qi_is_invertible(i: QuadIdeal) -> bool:
    return qi_mul(i, qi_inverse(i)) == _unit_of(i)


def qi_norm(i: QuadIdeal) -> Fraction:
    return Fraction(i.a * i.c, i.den ** 2)


def qi_contains(i: QuadIdeal, j: QuadIdeal) -> bool:
    """True iff J is a subset of I."""
    _check_same(i, j)
    den, ri, rj = _common(i, j)
    lat = hnf(ri, 2)
    return all(lattice_member(v, lat) for v in rj)


def qi_eq(i: QuadIdeal, j: QuadIdeal) -> bool:
    _check_same(i, j)
    return i == j


def qi_is_integral(i: QuadIdeal) -> bool:
    return i.den == 1


# -- enumeration ---------------------------------------------------------


def _omega_closed(d: int, a: int, b: int, c: int) -> bool:
    lat = IntLattice(((c, b), (0, a)), 2)
    return lattice_member((b, c * d), lat) and lattice_member((a, 0), lat)


def _hnf_candidates(index: int):
    """All ``(a, b, c)`` with ``a*c = index``, ``c | a``, ``c | b``, ``0 <= b < a``."""
    c = 1
    while c * c <= index:
        if index % (c * c) == 0:
            a = index // c
            for b in range(0, a, c):
                yield a, b, c
        c += 1


def qi_integral_ideals(order: OrderSpec, max_norm: int) -> List[QuadIdeal]:
    """Every integral ideal of norm at most ``max_norm``, sorted by ``key``."""
    out = []
    for n in range(1, max_norm + 1):
        for a, b, c in _hnf_candidates(n):
            if _omega_closed(order.d, a, b, c):
                out.append(QuadIdeal(order.d, 1, a, b, c))
    return sorted(out, key=QuadIdeal.key)


def _divisors(n: int) -> List[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def qi_superideals(i: QuadIdeal, budget: int = DEFAULT_LATTICE_BUDGET) -> List[QuadIdeal]:
    """All ideals L with I inside L inside O, in ``key`` order."""
    if not qi_is_integral(i):
        raise ValueError("superideals are only enumerated for integral ideals")
    index = i.a * i.c
    candidates = [abc for m in _divisors(index) for abc in _hnf_candidates(m)]
    if len(candidates) > budget:
        raise NormBoundExceeded(
            f"norm {index} needs {len(candidates)} candidate lattices (budget {budget})")
    out = []
    for a, b, c in candidates:
        lat = IntLattice(((c, b), (0, a)), 2)
        if all(lattice_member(v, lat) for v in i.lattice.rows) and _omega_closed(i.d, a, b, c):
            out.append(QuadIdeal(i.d, 1, a, b, c))
    return sorted(out, key=QuadIdeal.key)


def qi_is_maximal(p: QuadIdeal) -> bool:
    return qi_is_integral(p) and len(qi_superideals(p)) == 2


def qi_ord_at_prime(i: QuadIdeal, p: QuadIdeal) -> int:
    """Largest k with I inside P^k, for integral I and an invertible maximal P."""
    if not qi_is_integral(i):
        raise ValueError("order of vanishing needs an integral ideal")
    if not qi_is_maximal(p):
        raise ValueError(f"{p} is not a maximal ideal")
    p_inv = qi_inverse(p)
    unit = _unit_of(p)
    if qi_mul(p, p_inv) != unit:
        raise NonInvertiblePrime(f"{p} is not invertible")
    k = 0
    cur = i
    while True:
        nxt = qi_mul(cur, p_inv)
        if not qi_is_integral(nxt):
            return k
        cur = nxt
        k += 1
