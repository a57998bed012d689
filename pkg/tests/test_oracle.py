from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import D3, D5, DENSE, DVR, dense_cuts
from sharpdomain import engine, oracle
from sharpdomain.domains import ValuationDomain
from sharpdomain.errors import PreconditionViolated
from sharpdomain.exact import ExactReal
from sharpdomain.quadratic import QuadNum
from sharpdomain.valuation import STRICT, WEAK, ci_is_integral

R3 = ExactReal.sqrt(3)
P5 = D5.ideal(2, QuadNum(1, 1))
P3 = D3.ideal(2, QuadNum(1, 1))
TWO_THIRDS = ValuationDomain(["2/3"])


def valid(domain, w, i, a, b):
    return (domain.contains(w.a, a) and domain.contains(w.b, b)
            and domain.eq(domain.mul(w.a, w.b), i)
            and domain.is_integral(w.a) and domain.is_integral(w.b))


def test_quad_examples():
    two = D5.principal(QuadNum(2))
    w = oracle.def41_search(D5, two, P5, P5)
    assert (w.a, w.b, w.provenance) == (P5, P5, "exhaustive-lattice")
    assert oracle.def41_search(D3, D3.principal(QuadNum(2)), P3, P3) is None
    i = D5.mul(P5, D5.principal(QuadNum(3)))
    w = oracle.def41_search(D5, i, P5, D5.principal(QuadNum(3)))
    assert valid(D5, w, i, P5, D5.principal(QuadNum(3)))


def test_quad_negative_candidates_spelled_out():
    two = D3.principal(QuadNum(2))
    supers = D3.superideals(P3)
    assert set(supers) == {P3, D3.unit()}
    products = {D3.mul(x, y) for x in supers for y in supers}
    assert products == {D3.mul(P3, P3), P3, D3.unit()}
    assert two not in products


def test_val_examples():
    g = DENSE.group
    assert oracle.val_def41_search(g, DENSE.cut(4), DENSE.cut(R3, STRICT), DENSE.cut(4 - R3, STRICT)) is None
    m = DENSE.cut(0, STRICT)
    sq = DENSE.cut(R3 / 2, STRICT)
    w = oracle.val_def41_search(g, m, sq, sq)
    assert valid(DENSE, w, m, sq, sq) and w.provenance == "cut-case-analysis"
    assert DENSE.mul(m, m) == m
    w = oracle.val_def41_search(DVR.group, DVR.cut(2), DVR.cut(1), DVR.cut(2))
    assert valid(DVR, w, DVR.cut(2), DVR.cut(1), DVR.cut(2))
    w = oracle.val_def41_search(DVR.group, DVR.cut(4), DVR.cut(2), DVR.cut(2))
    assert (w.a, w.b) == (DVR.cut(2), DVR.cut(2))


def test_val_precondition():
    with pytest.raises(PreconditionViolated):
        oracle.val_def41_search(DVR.group, DVR.cut(4), DVR.cut(1), DVR.cut(2))
    with pytest.raises(PreconditionViolated):
        oracle.def41_search(D5, D5.principal(QuadNum(4)), P5, P5)


def test_exact_factorization_found():
    a, b = DENSE.cut(1, STRICT), DENSE.cut(R3, STRICT)
    i = DENSE.mul(a, b)
    w = oracle.def41_search(DENSE, i, a, b)
    assert w is not None and valid(DENSE, w, i, a, b)


def naive_exponent_search(i, a, b, limit=20):
    """Exponents i, a, b of m: look for a' <= a, b' <= b with a' + b' = i."""
    for a2 in range(0, limit + 1):
        for b2 in range(0, limit + 1):
            if a2 <= a and b2 <= b and a2 + b2 == i:
                return a2, b2
    return None


@pytest.mark.parametrize("domain,step", [(DVR, Fraction(1)), (TWO_THIRDS, Fraction(2, 3))],
                         ids=["<1>", "<2/3>"])
def test_discrete_oracle_against_exponents(domain, step):
    checked = 0
    for i in range(0, 11):
        for a in range(0, 11):
            for b in range(0, 11):
                if a + b < i:
                    continue
                checked += 1
                cuts = [domain.cut(step * n) for n in (i, a, b)]
                w = oracle.val_def41_search(domain.group, *cuts)
                naive = naive_exponent_search(i, a, b)
                assert (w is None) == (naive is None)
                if w is not None:
                    assert valid(domain, w, *cuts)
    assert checked > 500


@given(dense_cuts(integral=True), dense_cuts(integral=True), dense_cuts(integral=True))
def test_dense_witnesses_revalidate(i, a, b):
    if not DENSE.contains(i, DENSE.mul(a, b)):
        with pytest.raises(PreconditionViolated):
            oracle.def41_search(DENSE, i, a, b)
        return
    w = oracle.def41_search(DENSE, i, a, b)
    if w is not None:
        assert valid(DENSE, w, i, a, b)


@given(dense_cuts(integral=True), dense_cuts(integral=True), dense_cuts(integral=True))
def test_engine_witness_implies_oracle_witness(i, a, b):
    if not DENSE.contains(i, DENSE.mul(a, b)):
        return
    if engine.factor_witness(DENSE, i, a, b) is not None:
        assert oracle.def41_search(DENSE, i, a, b) is not None


def test_oracle_does_not_use_engine(monkeypatch):
    def boom(*args, **kwargs):
        raise AssertionError("oracle called into the engine")

    for name in ("sharp_pair_check", "factor_witness", "criterion_parts"):
        monkeypatch.setattr(engine, name, boom)
    assert oracle.def41_search(D5, D5.principal(QuadNum(2)), P5, P5) is not None
    assert oracle.def41_search(DENSE, DENSE.cut(4), DENSE.cut(R3, STRICT), DENSE.cut(4 - R3, STRICT)) is None


@pytest.mark.parametrize("domain,budget,verdict", [
    (D5, 12, "holds"), (D3, 8, "fails"), (DVR, 4, "holds"), (TWO_THIRDS, 3, "holds")],
    ids=["d=-5", "d=-3", "<1>", "<2/3>"])
def test_harness_small(domain, budget, verdict):
    r = oracle.equivalence_harness(domain, budget)
    assert r.holds
    assert r.details["engine_verdict"] == r.details["oracle_verdict"] == verdict


class BrokenColon(ValuationDomain):
    """A DVR whose integral colon always answers D."""

    def integral_colon(self, i, j):
        return self.unit()


def test_harness_catches_a_wrong_engine():
    r = oracle.equivalence_harness(BrokenColon([1]), 3)
    assert not r.holds
    assert r.witness["disagreement"] == "engine fails, oracle holds"
