"""Brute-force search for factorizations I = A'B' with A' >= A, B' >= B.

This module decides the defining property of sharpness directly and never
calls the colon-based criterion; :func:`equivalence_harness` then compares
the two over a shared finite universe.

Quadratic orders: A' and B' range over every ideal between A (resp. B) and
the ring, which is a finite set of lattices.  Valuation domains: a cut
factorization is pinned down by one real ``alpha`` (the value of A') and the
kinds of the two factors; the admissible ``alpha`` form an interval, and a
short list of candidates (its endpoints, midpoint and a group point inside)
covers every case.  Each returned witness is re-validated.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, Iterator, List, Optional, Tuple

from . import quadratic as qr
from . import valuation as vd
from .domains import IdealDomain, QuadraticDomain, ValuationDomain
from .engine import criterion_parts
from .errors import BudgetExceeded, PreconditionViolated
from .exact import ExactReal
from .report import FAILS, HOLDS, CheckReport, Stats

__all__ = [
    "FactorizationWitness",
    "quad_def41_search",
    "val_def41_search",
    "def41_search",
    "equivalence_harness",
    "DEFAULT_MAX_TRIPLES",
]

DEFAULT_MAX_TRIPLES = 2_000_000

EXHAUSTIVE = "exhaustive-lattice"
CASE_ANALYSIS = "cut-case-analysis"


@dataclass(frozen=True)
class FactorizationWitness:
    a: Any
    b: Any
    provenance: str


# -- quadratic orders --------------------------------------------------------


def quad_def41_search(order: qr.OrderSpec, i, a, b,
                      budget: int = qr.DEFAULT_LATTICE_BUDGET) -> Optional[FactorizationWitness]:
    if not qr.qi_contains(i, qr.qi_mul(a, b)):
        raise PreconditionViolated("A*B is not contained in I")
    for a2 in _superideals(a, budget):
        for b2 in _superideals(b, budget):
            if qr.qi_mul(a2, b2) == i:
                w = FactorizationWitness(a2, b2, EXHAUSTIVE)
                assert qr.qi_contains(a2, a) and qr.qi_contains(b2, b)
                return w
    return None


_SUPER_CACHE = {}


def _superideals(i, budget):
    key = (i, budget)
    if key not in _SUPER_CACHE:
        _SUPER_CACHE[key] = qr.qi_superideals(i, budget)
    return _SUPER_CACHE[key]


# -- valuation domains -------------------------------------------------------


def _alpha_candidates(group: vd.ValueGroup, lo: ExactReal, hi: ExactReal) -> Iterator[ExactReal]:
    yield hi
    yield lo
    if lo < hi:
        yield (lo + hi) / 2
        g = vd.vg_point_between(group, lo, hi)
        if g is not None:
            yield g


def val_def41_search(group: vd.ValueGroup, i: vd.CutIdeal, a: vd.CutIdeal,
                     b: vd.CutIdeal) -> Optional[FactorizationWitness]:
    if not vd.ci_contains(group, i, vd.ci_mul(group, a, b)):
        raise PreconditionViolated("A*B is not contained in I")
    gamma = i.gamma
    zero = ExactReal()
    # alpha = value of A', gamma - alpha = value of B'; both factors are
    # integral, A' >= A needs alpha <= gamma_A and B' >= B needs
    # gamma - alpha <= gamma_B
    lo = max(gamma - b.gamma, zero)
    hi = min(a.gamma, gamma)
    if hi < lo:
        return None
    kinds = [(vd.WEAK, vd.WEAK), (vd.WEAK, vd.STRICT), (vd.STRICT, vd.WEAK), (vd.STRICT, vd.STRICT)]
    for alpha in _alpha_candidates(group, lo, hi):
        for ka, kb in kinds:
            a2 = vd.ci_make(group, alpha, ka)
            b2 = vd.ci_make(group, gamma - alpha, kb)
            if not (vd.ci_is_integral(group, a2) and vd.ci_is_integral(group, b2)):
                continue
            if (vd.ci_contains(group, a2, a) and vd.ci_contains(group, b2, b)
                    and vd.ci_mul(group, a2, b2) == i):
                return FactorizationWitness(a2, b2, CASE_ANALYSIS)
    return None


def def41_search(domain: IdealDomain, i, a, b) -> Optional[FactorizationWitness]:
    if isinstance(domain, QuadraticDomain):
        return quad_def41_search(domain.order, i, a, b, domain.lattice_budget)
    if isinstance(domain, ValuationDomain):
        return val_def41_search(domain.group, i, a, b)
    raise TypeError(f"no oracle for {type(domain).__name__}")


# -- harness -----------------------------------------------------------------


def equivalence_harness(domain: IdealDomain, budget,
                        max_triples: int = DEFAULT_MAX_TRIPLES) -> CheckReport:
    """Engine verdict vs oracle verdict on one enumerated universe.

    Engine: every pair (I, H) satisfies the colon criterion.  Oracle: every
    triple (I, A, B) with AB inside I admits a factorization.  Each engine
    failure (I, H) must also be an oracle failure at
    ``(I, I:(I:H), I:H)``.  The report holds iff all of this agrees.
    """
    ideals = domain.universe(budget)
    if len(ideals) ** 3 > max_triples:
        raise BudgetExceeded(
            f"{len(ideals)} ideals give {len(ideals) ** 3} triples, above the limit {max_triples}")
    lit = domain.literal
    start = time.perf_counter()

    engine_failures = []
    inconsistent = []
    for i in ideals:
        for h in ideals:
            a, b, prod = criterion_parts(domain, i, h)
            if prod != i:
                engine_failures.append((i, h))
                if not domain.contains(i, prod):
                    inconsistent.append([lit(i), lit(h), "criterion's A*B is not inside I"])
                elif def41_search(domain, i, a, b) is not None:
                    inconsistent.append([lit(i), lit(h), "oracle factors the criterion's (A, B)"])

    oracle_failures = []
    triples = 0
    products = {}
    for a in ideals:
        for b in ideals:
            products[a, b] = domain.mul(a, b)
    for i in ideals:
        for a in ideals:
            for b in ideals:
                if not domain.contains(i, products[a, b]):
                    continue
                triples += 1
                if def41_search(domain, i, a, b) is None:
                    oracle_failures.append((i, a, b))

    engine_holds = not engine_failures
    oracle_holds = not oracle_failures
    agree = engine_holds == oracle_holds and not inconsistent
    failures = [list(x) for x in inconsistent]
    witness = None
    if engine_holds != oracle_holds:
        if engine_holds:
            i, a, b = oracle_failures[0]
            witness = {"disagreement": "engine holds, oracle fails",
                       "I": lit(i), "A": lit(a), "B": lit(b)}
        else:
            i, h = engine_failures[0]
            witness = {"disagreement": "engine fails, oracle holds", "I": lit(i), "H": lit(h)}
        failures.insert(0, list(witness.values()))
    elif inconsistent:
        witness = {"disagreement": inconsistent[0][2], "I": inconsistent[0][0], "H": inconsistent[0][1]}
    details = {
        "engine_verdict": HOLDS if engine_holds else FAILS,
        "oracle_verdict": HOLDS if oracle_holds else FAILS,
        "universe_size": len(ideals),
        "triples_checked": triples,
        "engine_failures": len(engine_failures),
        "oracle_failures": len(oracle_failures),
    }
    if engine_failures:
        i, h = engine_failures[0]
        details["engine_first_failure"] = [lit(i), lit(h)]
    if oracle_failures:
        details["oracle_first_failure"] = [lit(x) for x in oracle_failures[0]]
    sharp, reason = domain.prediction()
    return CheckReport(
        domain=domain.describe(),
        check="equivalence_harness",
        inputs=[],
        verdict=HOLDS if agree else FAILS,
        witness=witness,
        stats=Stats(len(ideals) ** 2 + triples, failures, (time.perf_counter() - start) * 1000.0),
        budget=str(budget),
        prediction={"sharp": sharp, "reason": reason},
        details=details,
    )
