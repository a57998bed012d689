from fractions import Fraction

from hypothesis import settings, strategies as st

from sharpdomain.domains import QuadraticDomain, ValuationDomain
from sharpdomain.exact import ExactReal
from sharpdomain.quadratic import QuadNum

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
exact_reals = st.builds(ExactReal, small_rationals, small_rationals, small_rationals, small_rationals)
nonzero_exact_reals = exact_reals.filter(lambda x: not x.is_zero())

small_ints = st.integers(-6, 6)
quad_elements = st.builds(QuadNum, small_ints, small_ints)
nonzero_quad_elements = quad_elements.filter(lambda z: not z.is_zero())

D5 = QuadraticDomain(-5)
D3 = QuadraticDomain(-3)
DVR = ValuationDomain([1])
DENSE = ValuationDomain([1, "sqrt2"])


def quad_ideals(domain, max_gens=3):
    """Integral ideals from random small generators."""
    return st.lists(nonzero_quad_elements, min_size=1, max_size=max_gens).map(
        lambda gens: domain.ideal(*gens))


def fractional_quad_ideals(domain):
    return st.tuples(quad_ideals(domain), st.integers(1, 4)).map(
        lambda t: domain.mul(t[0], domain.principal(QuadNum(Fraction(1, t[1])))))


cut_kinds = st.sampled_from(["weak", "strict"])
dense_points = st.builds(lambda a, b: ExactReal(a, b), st.integers(-4, 8), st.integers(-4, 4))
probe_points = st.sampled_from([ExactReal.parse(t) for t in ("sqrt3", "sqrt3/2", "4-sqrt3", "1+sqrt6", "sqrt6-1")])


def dense_cuts(integral=False):
    values = st.one_of(dense_points, probe_points)
    if integral:
        values = values.filter(lambda v: v.sign() >= 0)
    return st.builds(lambda v, k: DENSE.cut(v, k), values, cut_kinds)


def dvr_cuts(integral=False):
    lo = 0 if integral else -8
    return st.builds(lambda v, k: DVR.cut(v, k), st.fractions(lo, 8, max_denominator=3), cut_kinds)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
