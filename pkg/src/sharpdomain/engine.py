"""Sharpness checks written against :class:`~sharpdomain.domains.IdealDomain`.

The central test: a domain is sharp iff ``I = [I:(I:H)](I:H)`` for all
nonzero ideals I, H (colons taken inside the ring).  Everything here runs
over a finite enumerated universe, so a passing sweep means "holds on this
budget"; whether the domain is sharp is a prediction from theory, reported
separately.
"""
from __future__ import annotations

import random
import time
from typing import List, Optional, Sequence, Tuple

from .domains import IdealDomain, QuadraticDomain
from .errors import BudgetExceeded, NotPseudoDedekind, PreconditionViolated
from .report import FAILS, HOLDS, CheckReport, Stats

__all__ = [
    "DEFAULT_MAX_PAIRS",
    "criterion_parts",
    "sharp_pair_check",
    "factor_witness",
    "sharp_sweep",
    "vtop_restricted_sweep",
    "pseudo_dedekind_sweep",
    "v_coprime",
    "comaximal",
    "prop7_sweep",
    "prop7_colon_identity_check",
    "lemma10_ord_check",
    "lemma10_sweep",
    "identity_sweep",
]

DEFAULT_MAX_PAIRS = 250_000


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.start) * 1000.0


def _prediction(domain: IdealDomain) -> dict:
    sharp, reason = domain.prediction()
    return {"sharp": sharp, "reason": reason}


def _lit(domain: IdealDomain, *ideals) -> List[str]:
    return [domain.literal(i) for i in ideals]


def _universe(domain: IdealDomain, budget, max_pairs: int) -> list:
    ideals = domain.universe(budget)
    if len(ideals) ** 2 > max_pairs:
        raise BudgetExceeded(
            f"{len(ideals)} ideals give {len(ideals) ** 2} pairs, above the limit {max_pairs}")
    return ideals


# -- the criterion -------------------------------------------------------


def criterion_parts(domain: IdealDomain, i, h):
    """``(A, B, A*B)`` with ``B = I:H`` and ``A = I:B``."""
    b = domain.integral_colon(i, h)
    a = domain.integral_colon(i, b)
    return a, b, domain.mul(a, b)


def sharp_pair_check(domain: IdealDomain, i, h) -> CheckReport:
    with _Timer() as t:
        a, b, prod = criterion_parts(domain, i, h)
        ok = domain.eq(prod, i)
    parts = {"A": domain.literal(a), "B": domain.literal(b), "A*B": domain.literal(prod),
             "I": domain.literal(i)}
    return CheckReport(
        domain=domain.describe(),
        check="sharp_pair_check",
        inputs=_lit(domain, i, h),
        verdict=HOLDS if ok else FAILS,
        witness=None if ok else parts,
        stats=Stats(1, [] if ok else [_lit(domain, i, h)], t.ms),
        details={} if ok else {"identity": "A*B != I"},
    )


def factor_witness(domain: IdealDomain, i, a, b) -> Optional[Tuple]:
    """``(I:(I:A), I:A)`` when that pair multiplies to I, else None."""
    if not domain.contains(i, domain.mul(a, b)):
        raise PreconditionViolated("A*B is not contained in I")
    b2 = domain.integral_colon(i, a)
    a2 = domain.integral_colon(i, b2)
    if not domain.eq(domain.mul(a2, b2), i):
        return None
    assert domain.contains(a2, a) and domain.contains(b2, b)
    return a2, b2


# -- sweeps ----------------------------------------------------------------


def _pair_sweep(domain, check, budget, left, right, details=None) -> CheckReport:
    failures = []
    first = None
    checked = 0
    with _Timer() as t:
        for i in left:
            for h in right:
                checked += 1
                a, b, prod = criterion_parts(domain, i, h)
                if not domain.eq(prod, i):
                    failures.append(_lit(domain, i, h))
                    if first is None:
                        first = {"I": domain.literal(i), "H": domain.literal(h), "A": domain.literal(a),
                                 "B": domain.literal(b), "A*B": domain.literal(prod)}
    return CheckReport(
        domain=domain.describe(),
        check=check,
        inputs=[],
        verdict=FAILS if failures else HOLDS,
        witness=first,
        stats=Stats(checked, failures, t.ms),
        budget=str(budget),
        prediction=_prediction(domain),
        details=dict(details or {}, universe_size=len(left)),
    )


def sharp_sweep(domain: IdealDomain, budget, max_pairs: int = DEFAULT_MAX_PAIRS) -> CheckReport:
    ideals = _universe(domain, budget, max_pairs)
    return _pair_sweep(domain, "sharp_sweep", budget, ideals, ideals)


def pseudo_dedekind_sweep(domain: IdealDomain, budget, max_pairs: int = DEFAULT_MAX_PAIRS) -> CheckReport:
    ideals = _universe(domain, budget, max_pairs)
    failures = []
    first = None
    with _Timer() as t:
        for i in ideals:
            v = domain.v_closure(i)
            if not domain.is_invertible(v):
                failures.append(_lit(domain, i))
                if first is None:
                    first = {"I": domain.literal(i), "I_v": domain.literal(v),
                             "I_v * I_v^-1": domain.literal(domain.mul(v, domain.inverse(v)))}
    return CheckReport(
        domain=domain.describe(),
        check="pseudo_dedekind_sweep",
        inputs=[],
        verdict=FAILS if failures else HOLDS,
        witness=first,
        stats=Stats(len(ideals), failures, t.ms),
        budget=str(budget),
        prediction=_prediction(domain),
        details={"universe_size": len(ideals)},
    )


def vtop_restricted_sweep(domain: IdealDomain, budget, force: bool = False,
                          max_pairs: int = DEFAULT_MAX_PAIRS) -> CheckReport:
    """Criterion sweep over the ideals I with I_v = D only.

    The restriction is conclusive only for pseudo-Dedekind domains, so other
    domains are refused unless ``force`` is set (diagnostic use).
    """
    pd = pseudo_dedekind_sweep(domain, budget, max_pairs)
    if not pd.holds and not force:
        raise NotPseudoDedekind(
            f"{domain.describe()} fails the pseudo-Dedekind sweep at {pd.witness['I']}")
    ideals = _universe(domain, budget, max_pairs)
    unit = domain.unit()
    restricted = [i for i in ideals if domain.eq(domain.v_closure(i), unit)]
    return _pair_sweep(domain, "vtop_restricted_sweep", budget, restricted, ideals,
                       details={"full_universe_size": len(ideals), "forced": force and not pd.holds})


# -- v-coprime elements ----------------------------------------------------


def v_coprime(domain: IdealDomain, x, y) -> bool:
    return domain.eq(domain.intersect(domain.principal(x), domain.principal(y)),
                     domain.principal(domain.elem_mul(x, y)))


def comaximal(domain: IdealDomain, x, y) -> bool:
    return domain.eq(domain.add(domain.principal(x), domain.principal(y)), domain.unit())


def _two_generated(domain, x, y):
    return domain.add(domain.principal(x), domain.principal(y))


def prop7_colon_identity_check(domain: IdealDomain, x, y, expect_square: bool = True) -> CheckReport:
    """For v-coprime x, y: ``(x^2,y):(x,y) = (x,y)`` and, if sharp, ``(x^2,y) = (x,y)^2``."""
    if not v_coprime(domain, x, y):
        raise PreconditionViolated(
            f"{domain.elem_literal(x)} and {domain.elem_literal(y)} are not v-coprime")
    with _Timer() as t:
        xy = _two_generated(domain, x, y)
        x2y = _two_generated(domain, domain.elem_mul(x, x), y)
        colon = domain.integral_colon(x2y, xy)
        square = domain.mul(xy, xy)
        colon_ok = domain.eq(colon, xy)
        square_ok = domain.eq(x2y, square)
    ok = colon_ok and (square_ok or not expect_square)
    inputs = [domain.elem_literal(x), domain.elem_literal(y)]
    witness = None
    if not ok:
        witness = {"(x^2,y)": domain.literal(x2y), "(x,y)": domain.literal(xy),
                   "(x^2,y):(x,y)": domain.literal(colon), "(x,y)^2": domain.literal(square)}
    return CheckReport(
        domain=domain.describe(),
        check="prop7_colon_identity_check",
        inputs=inputs,
        verdict=HOLDS if ok else FAILS,
        witness=witness,
        stats=Stats(1, [] if ok else [inputs], t.ms),
        details={"colon_identity": colon_ok, "square_identity": square_ok},
    )


def prop7_sweep(domain: IdealDomain, height: int, identities: bool = True) -> CheckReport:
    """v-coprime implies comaximal, over all element pairs of bounded height.

    With ``identities`` each v-coprime pair also runs the colon/square check.
    """
    elems = domain.elements(height)
    failures = []
    first = None
    coprime_pairs = 0
    checked = 0
    with _Timer() as t:
        for n, x in enumerate(elems):
            for y in elems[n:]:
                checked += 1
                if not v_coprime(domain, x, y):
                    continue
                coprime_pairs += 1
                lits = [domain.elem_literal(x), domain.elem_literal(y)]
                if not comaximal(domain, x, y):
                    failures.append(lits + ["v-coprime but not comaximal"])
                    if first is None:
                        first = {"x": lits[0], "y": lits[1],
                                 "xD+yD": domain.literal(_two_generated(domain, x, y))}
                    continue
                if identities:
                    r = prop7_colon_identity_check(domain, x, y)
                    if not r.holds:
                        failures.append(lits + ["colon/square identity fails"])
                        if first is None:
                            first = dict(r.witness, x=lits[0], y=lits[1])
    return CheckReport(
        domain=domain.describe(),
        check="prop7_sweep",
        inputs=[],
        verdict=FAILS if failures else HOLDS,
        witness=first,
        stats=Stats(checked, failures, t.ms),
        budget=f"height {height}",
        prediction=_prediction(domain),
        details={"elements": len(elems), "v_coprime_pairs": coprime_pairs},
    )


# -- order of vanishing ----------------------------------------------------


def _require_maximal_order(domain):
    if not isinstance(domain, QuadraticDomain) or not domain.order.maximal:
        raise ValueError("order-of-vanishing checks need a maximal quadratic order")


def lemma10_ord_check(domain: QuadraticDomain, a, b, primes: Sequence) -> CheckReport:
    """``ord_P(A:B) = max(ord_P A - ord_P B, 0)`` at each listed prime."""
    _require_maximal_order(domain)
    rows = []
    failures = []
    with _Timer() as t:
        colon = domain.integral_colon(a, b)
        for p in primes:
            oa, ob, oc = (domain.ord_at_prime(x, p) for x in (a, b, colon))
            rows.append([domain.literal(p), oa, ob, oc])
            if oc != max(oa - ob, 0):
                failures.append(_lit(domain, a, b, p))
    witness = None
    if failures:
        witness = {"A": domain.literal(a), "B": domain.literal(b), "A:B": domain.literal(colon),
                   "P": failures[0][2]}
    return CheckReport(
        domain=domain.describe(),
        check="lemma10_ord_check",
        inputs=_lit(domain, a, b),
        verdict=FAILS if failures else HOLDS,
        witness=witness,
        stats=Stats(len(primes), failures, t.ms),
        details={"per_prime": rows},
    )


def lemma10_sweep(domain: QuadraticDomain, max_norm: int, prime_norm: int) -> CheckReport:
    _require_maximal_order(domain)
    ideals = domain.universe(max_norm)
    primes = domain.primes(prime_norm)
    failures = []
    first = None
    checked = 0
    with _Timer() as t:
        for a in ideals:
            for b in ideals:
                r = lemma10_ord_check(domain, a, b, primes)
                checked += len(primes)
                if not r.holds:
                    failures.extend(r.stats.failures)
                    first = first or r.witness
    return CheckReport(
        domain=domain.describe(),
        check="lemma10_sweep",
        inputs=[],
        verdict=FAILS if failures else HOLDS,
        witness=first,
        stats=Stats(checked, failures, t.ms),
        budget=f"norm {max_norm}, primes of norm <= {prime_norm}",
        details={"primes": _lit(domain, *primes), "universe_size": len(ideals)},
    )


# -- identities ------------------------------------------------------------


def identity_sweep(domain: IdealDomain, budget, samples: int = 500, seed: int = 0) -> CheckReport:
    """Sampled closure-operator and colon identities.

    For random pairs (I, H) from the universe: ``I:(I:(I:H)) = I:H`` for the
    fractional and the integral colon, ``I <= I_t <= I_v``,
    ``(I_v)_v = I_v``, and ``(I:H)*H <= I``.
    """
    ideals = domain.universe(budget)
    rng = random.Random(seed)
    failures = []
    first = None
    with _Timer() as t:
        for _ in range(samples):
            i, h = rng.choice(ideals), rng.choice(ideals)
            broken = []
            for name, colon in (("colon", domain.colon), ("integral_colon", domain.integral_colon)):
                b = colon(i, h)
                if not domain.eq(colon(i, colon(i, b)), b):
                    broken.append(f"triple {name}")
                if not domain.contains(i, domain.mul(colon(i, h), h)):
                    broken.append(f"adjunction {name}")
            it, iv = domain.t_closure(i), domain.v_closure(i)
            if not (domain.contains(it, i) and domain.contains(iv, it)):
                broken.append("I <= I_t <= I_v")
            if not domain.eq(domain.v_closure(iv), iv):
                broken.append("(I_v)_v = I_v")
            if broken:
                failures.append(_lit(domain, i, h) + broken)
                if first is None:
                    first = {"I": domain.literal(i), "H": domain.literal(h), "broken": ", ".join(broken)}
    return CheckReport(
        domain=domain.describe(),
        check="identity_sweep",
        inputs=[],
        verdict=FAILS if failures else HOLDS,
        witness=first,
        stats=Stats(samples, failures, t.ms),
        budget=str(budget),
        details={"seed": seed, "universe_size": len(ideals)},
    )
