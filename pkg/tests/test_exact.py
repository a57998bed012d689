import itertools
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from conftest import exact_reals, nonzero_exact_reals
from sharpdomain.errors import ParseError
from sharpdomain.exact import ExactReal, er_arith, er_sign
from sharpdomain.lattice import hnf, lattice_intersect, lattice_member

mpmath.mp.dps = 60
R2, R3, R6 = ExactReal.sqrt(2), ExactReal.sqrt(3), ExactReal.sqrt(6)


def high_precision(x: ExactReal):
    q0, q1, q2, q3 = (mpmath.mpf(c.numerator) / c.denominator for c in x.coords)
    return q0 + q1 * mpmath.sqrt(2) + q2 * mpmath.sqrt(3) + q3 * mpmath.sqrt(6)


def test_basis_table():
    assert er_arith(R2, R3, "mul") == R6
    assert R2 * R6 == 2 * R3
    assert R3 * R6 == 3 * R2
    assert R2 * R2 == 2 and R3 * R3 == 3 and R6 * R6 == 6


def test_conjugate_product():
    assert er_arith(1 + R2, 1 - R2, "mul") == ExactReal(-1)


def test_square_expansion():
    x = 1 + R2 + R3
    assert x * x == ExactReal(6, 2, 2, 2)


def test_sign_examples():
    assert er_sign(ExactReal()) == 0
    assert er_sign(3 - 2 * R2) == 1
    assert er_sign(1 + R2 - R3) == 1
    # 5 - 2*sqrt6 ~ 0.101, and its negative
    assert er_sign(5 - 2 * R6) == 1
    assert er_sign(2 * R6 - 5) == -1


def test_sign_of_tiny_nonzero_value():
    # (sqrt2 + sqrt3)^8 has a conjugate product that is a small integer;
    # 1/(sqrt3 - sqrt2)^8 is huge so (sqrt3 - sqrt2)^8 is tiny but positive
    x = R3 - R2
    y = x * x * x * x * x * x * x * x
    assert er_sign(y) == 1
    assert er_sign(-y) == -1


@given(nonzero_exact_reals)
def test_sign_matches_high_precision(x):
    assert er_sign(x) == (1 if high_precision(x) > 0 else -1)


@given(exact_reals)
def test_sign_of_square(x):
    s = er_sign(x * x)
    assert s >= 0
    assert (s == 0) == x.is_zero()


@given(exact_reals, exact_reals)
def test_commutative(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(exact_reals, exact_reals, exact_reals)
def test_associative_and_distributive(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(nonzero_exact_reals)
def test_inverse(x):
    assert x * x.inverse() == 1


@given(exact_reals)
def test_literal_round_trip(x):
    assert ExactReal.parse(str(x)) == x


@given(exact_reals, exact_reals)
def test_order_agrees_with_high_precision(a, b):
    if a == b:
        return
    assert (a < b) == (high_precision(a) < high_precision(b))


@given(exact_reals)
def test_floor(x):
    f = x.floor()
    assert ExactReal(f) <= x < ExactReal(f + 1)


@pytest.mark.parametrize("text,value", [
    ("4-sqrt3", 4 - R3),
    ("1/2*sqrt3", R3 / 2),
    ("sqrt3/2", R3 / 2),
    ("-3/4", ExactReal(Fraction(-3, 4))),
    ("1 + 2*sqrt2 - sqrt6", 1 + 2 * R2 - R6),
])
def test_parse(text, value):
    assert ExactReal.parse(text) == value


@pytest.mark.parametrize("text", ["", "sqrt5", "1+", "2**sqrt2", "1/0", "sqrt"])
def test_parse_errors(text):
    with pytest.raises(ParseError) as err:
        ExactReal.parse(text)
    assert 0 <= err.value.pos <= len(text)


# -- lattices -----------------------------------------------------------------


def test_hnf_examples():
    assert hnf([(2, 0), (0, 2), (1, 1)]).rows == ((1, 1), (0, 2))
    assert hnf([(1, 0), (0, 1)]).rows == ((1, 0), (0, 1))
    assert hnf([(4, 0), (6, 0)]).rows == ((2, 0),)
    assert hnf([(0, 0)], dim=2).rows == ()


def test_member_examples():
    lat = hnf([(1, 1), (0, 2)])
    assert lattice_member((2, 2), lat)
    assert not lattice_member((1, 0), hnf([(2, 0)]))
    assert lattice_member((3, 1), lat)
    assert not lattice_member((1, 0), lat)


vectors = st.lists(st.integers(-6, 6), min_size=3, max_size=3)
row_sets = st.lists(vectors, min_size=1, max_size=4)


@given(row_sets)
def test_hnf_idempotent(rows):
    h = hnf(rows, dim=3)
    assert hnf(h.rows, dim=3) == h


@given(row_sets, st.randoms(use_true_random=False))
def test_hnf_ignores_row_order_and_unimodular_moves(rows, rnd):
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    if len(shuffled) > 1:
        k = rnd.randint(-3, 3)
        shuffled[0] = [x + k * y for x, y in zip(shuffled[0], shuffled[1])]
    assert hnf(rows, dim=3) == hnf(shuffled, dim=3)


@given(row_sets, vectors)
def test_hnf_shape(rows, _):
    h = hnf(rows, dim=3)
    piv = h.pivots()
    assert list(piv) == sorted(piv)
    for r, p in zip(h.rows, piv):
        assert r[p] > 0 and all(v == 0 for v in r[:p])
    for k, p in enumerate(piv):
        for above in h.rows[:k]:
            assert 0 <= above[p] < h.rows[k][p]


small_rows = st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=1, max_size=2)
coefficients = st.lists(st.integers(-10, 10), min_size=2, max_size=2)


@given(small_rows, coefficients)
def test_member_of_small_combinations(rows, coeffs):
    v = [sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(2)]
    assert lattice_member(v, hnf(rows, dim=2))


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       st.lists(st.integers(-10, 10), min_size=2, max_size=2))
def test_member_matches_cramer(entries, v):
    a, b, c, d = entries
    det = a * d - b * c
    if det == 0:
        return
    # v = x*(a,b) + y*(c,d) has a unique rational solution
    x = Fraction(v[0] * d - v[1] * c, det)
    y = Fraction(a * v[1] - b * v[0], det)
    expected = x.denominator == 1 and y.denominator == 1
    assert lattice_member(v, hnf([(a, b), (c, d)])) == expected
    if expected:
        assert tuple(v) in brute_span([(a, b), (c, d)], bound=max(10, abs(x), abs(y)))


def brute_span(rows, bound=10):
    """All combinations with coefficients in [-bound, bound]."""
    bound = int(bound)
    out = set()
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(rows)):
        out.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(len(rows[0]))))
    return out


@given(small_rows, small_rows)
def test_intersection_members(a, b):
    la, lb = hnf(a, dim=2), hnf(b, dim=2)
    both = lattice_intersect(la, lb)
    for r in both.rows:
        assert lattice_member(r, la) and lattice_member(r, lb)
    for v in itertools.product(range(-6, 7), repeat=2):
        if lattice_member(v, la) and lattice_member(v, lb):
            assert lattice_member(v, both)
