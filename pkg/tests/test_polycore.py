from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittenzeta.polycore import (MPoly, PolySyntaxError, PositivePoly, PositivityError, RationalFunction,
                                 RationalSeries, parse_poly, poly_eval, poly_mul, ratfun_identity_check,
                                 reverse_poly, series_log, series_pow, series_pow_log, sturm_positive)

F = Fraction


# -- strategies -------------------------------------------------------------

small_q = st.fractions(min_value=F(1, 8), max_value=8, max_denominator=8)
roots = st.lists(small_q, min_size=1, max_size=4)


@st.composite
def rooted_poly(draw):
    return PositivePoly.from_roots(draw(roots), c0=draw(small_q))


@st.composite
def positive_coeff_poly(draw):
    cs = draw(st.lists(st.fractions(min_value=0, max_value=5, max_denominator=4), min_size=1, max_size=4))
    return PositivePoly.from_coeffs([draw(small_q)] + cs[:-1] + [draw(small_q)])


any_poly = st.one_of(rooted_poly(), positive_coeff_poly())
exponent = st.fractions(min_value=-3, max_value=3, max_denominator=5)


# -- parser -----------------------------------------------------------------

def test_parse_product_form():
    f = parse_poly("(1+x)(1+2x)")
    assert f.coeffs == (1, 3, 2)
    assert f.roots == (1, 2)


def test_parse_fg():
    f = parse_poly("(1+x)(1+2x)(1+3x)(2+3x)")
    assert f.degree == 4 and f.c0 == 2 and f.cd == 18


def test_parse_coefficient_list_and_sign():
    f = parse_poly("[1,-1,1]")
    assert f.coeffs == (1, -1, 1) and f.roots is None


def test_parse_rejects_non_positive():
    with pytest.raises(PositivityError) as exc:
        parse_poly("[1,-1]")
    lo, hi = exc.value.witness
    assert 0 <= lo <= 1 <= hi


@pytest.mark.parametrize("text", ["(1+x", "(1+x)y", "[1,]", "", "(1+2y)"])
def test_parse_syntax_error(text):
    with pytest.raises(PolySyntaxError):
        parse_poly(text)


def test_parse_rejects_degree_zero():
    with pytest.raises(ValueError):
        parse_poly("[3]")


@given(any_poly)
def test_parse_pretty_roundtrip(f):
    assert parse_poly(f.pretty()) == f


@given(any_poly)
def test_json_roundtrip(f):
    assert PositivePoly.from_json(f.to_json()) == f


def test_json_shape():
    assert parse_poly("(1+x)(1+2x)").to_json() == {"coeffs": ["1", "3", "2"], "roots": ["1", "2"]}


def test_root_list_must_match():
    with pytest.raises(ValueError):
        PositivePoly((F(1), F(3), F(2)), (F(1), F(3)))


# -- reverse ----------------------------------------------------------------

def test_reverse_examples():
    assert reverse_poly(parse_poly("[1,3,2]")).coeffs == (2, 3, 1)
    assert reverse_poly(parse_poly("[1,1]")).coeffs == (1, 1)


def test_gG_scaling():
    fG = parse_poly("(1+x)(1+2x)(1+3x)(2+3x)")
    g = reverse_poly(fG)
    for x in [F(0), F(1), F(-2, 7), F(5, 3)]:
        assert g(3 * x) == 9 * fG(x)


@given(any_poly)
def test_reverse_involution_and_positivity(f):
    g = reverse_poly(f)
    assert reverse_poly(g) == f
    assert sturm_positive(g.coeffs)[0]


# -- Sturm ------------------------------------------------------------------

def test_sturm_examples():
    assert sturm_positive([2, 3])[0]
    assert sturm_positive([1, -1, 1])[0]
    ok, w = sturm_positive([1, -3, 2])
    assert not ok and w[0] <= F(1, 2) <= w[1]


@settings(max_examples=30)
@given(st.lists(st.fractions(min_value=0, max_value=4, max_denominator=3), min_size=1, max_size=3),
       st.fractions(min_value=F(1, 10), max_value=10, max_denominator=10))
def test_sturm_detects_planted_root(cs, r):
    # (x - r) * (positive poly) has a root at r > 0
    p = poly_mul([-r, 1], [F(1)] + cs)
    ok, w = sturm_positive(p)
    assert not ok
    # either f(0) <= 0 or the interval brackets the root
    assert poly_eval(p, w[0]) <= 0 or w[0] <= r <= w[1]


# -- series -----------------------------------------------------------------

def test_series_pow_examples():
    f1 = parse_poly("(1+x)")
    assert list(series_pow(f1, -1, 4).coeffs) == [1, -1, 1, -1, 1]
    fB = parse_poly("(1+x)(1+2x)")
    assert series_pow(fB, F(-1, 3), 0)[0] == 1
    assert series_pow(fB, F(1, 3), 2)[2] == F(-1, 3)


def test_series_pow_binomial_oracle():
    # (1+u)^{1/3} with u = 3x + 2x^2 by composing the binomial series
    fB = parse_poly("(1+x)(1+2x)")
    N = 8
    binom = [F(1)]
    for k in range(1, N + 1):
        binom.append(binom[-1] * (F(1, 3) - k + 1) / k)
    u = RationalSeries.from_poly([0, 3, 2], N)
    assert RationalSeries(tuple(binom)).compose(u) == series_pow(fB, F(1, 3), N)


def test_series_log_examples():
    assert list(series_pow_log(parse_poly("(1+x)"), 0, 2)[0].coeffs) == [0, 1, F(-1, 2)]
    assert list(series_pow_log(parse_poly("(1+x)(1+2x)"), 0, 1)[0].coeffs) == [0, 3]


def _normalized(s: RationalSeries) -> list:
    # series_pow drops an irrational c0^alpha; compare (f/c0)^alpha throughout
    return [c / s[0] for c in s.coeffs]


@settings(max_examples=40)
@given(any_poly, exponent, exponent, st.integers(0, 25))
def test_series_pow_additive(f, a, b, N):
    lhs = series_pow(f, a, N) * series_pow(f, b, N)
    assert _normalized(lhs) == _normalized(series_pow(f, a + b, N))


def test_series_pow_rational_prefactor_kept():
    f = parse_poly("(4)(1+x)")
    s = series_pow(f, F(1, 2), 3)
    assert s.prefactor is None and s[0] == 2
    t = series_pow(parse_poly("(2)(1+x)"), F(1, 2), 3)
    assert t.prefactor == (2, F(1, 2)) and t[0] == 1


@given(any_poly, st.integers(0, 30))
def test_series_inverse(f, N):
    prod = series_pow(f, -1, N) * RationalSeries.from_poly(f.coeffs, N)
    assert list(prod.coeffs) == [1] + [0] * N


@given(any_poly, st.integers(0, 4))
def test_series_pow_polynomial_cutoff(f, n):
    d = f.degree
    s = series_pow(f, n, d * n + 5)
    assert all(s[m] == 0 for m in range(d * n + 1, d * n + 6))


@given(any_poly, st.integers(1, 12))
def test_exp_of_log(f, N):
    # exp(L) by the recurrence E' = L' E reproduces f / c0
    L = series_log(f, N)
    E = [F(1)] + [F(0)] * N
    for k in range(1, N + 1):
        E[k] = sum(j * L[j] * E[k - j] for j in range(1, k + 1)) / k
    assert E == [c / f.c0 for c in (list(f.coeffs) + [0] * N)[: N + 1]]


@given(any_poly, st.integers(0, 10))
def test_series_derivative_integral(f, N):
    s = series_pow(f, F(1, 2), N)
    assert s.derivative().integral(s[0]) .truncate(N - 1 if N else 0) == s.truncate(N - 1 if N else 0)


# -- rational functions -----------------------------------------------------

def test_ratfun_examples():
    V = ("x", "n")
    x, n = MPoly.var(V, "x"), MPoly.var(V, "n")
    one = MPoly.const(V, 1)
    assert ratfun_identity_check(RationalFunction(x * x - one, x - one), RationalFunction(x + one))
    assert ratfun_identity_check(RationalFunction(one, x), RationalFunction(one, x + MPoly.const(V, 0)))
    assert not ratfun_identity_check(RationalFunction((n + one) * x, x), RationalFunction(n))


def test_ratfun_zero_denominator():
    V = ("x",)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(MPoly.var(V, "x"), MPoly.const(V, 0))
