import cmath
import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittenzeta.constants import (ComplexVal, ConstExpr, ConstLaurent, bernoulli, const_eval, gamma_c,
                                  loggamma_c, zeta_c, zeta_neg_int)

F = Fraction
mpmath.mp.dps = 30


def test_bernoulli():
    assert bernoulli(0) == 1
    assert bernoulli(1) == F(-1, 2)
    assert bernoulli(2) == F(1, 6)
    assert bernoulli(12) == F(-691, 2730)
    assert all(bernoulli(n) == 0 for n in range(3, 40, 2))


@pytest.mark.parametrize("n", range(0, 30))
def test_bernoulli_vs_mpmath(n):
    assert bernoulli(n) == F(str(mpmath.bernfrac(n)[0])) / F(str(mpmath.bernfrac(n)[1]))


def test_zeta_neg_int():
    assert zeta_neg_int(0) == F(-1, 2)
    assert zeta_neg_int(1) == F(-1, 12)
    assert all(zeta_neg_int(2 * k) == 0 for k in range(1, 20))


def test_zeta_examples():
    assert abs(zeta_c(2).value - math.pi**2 / 6) < 1e-12
    assert abs(zeta_c(0).value + 0.5) < 1e-12
    assert abs(zeta_c(0.5).value - (-1.4603545088095868)) < 1e-12


def test_zeta_pole():
    with pytest.raises(ZeroDivisionError):
        zeta_c(1)


@pytest.mark.parametrize("n", range(0, 21))
def test_zeta_matches_neg_int(n):
    assert abs(zeta_c(-n).value - float(zeta_neg_int(n))) <= 1e-10 * max(1, abs(float(zeta_neg_int(n))))


def _rand_points(k, seed):
    rng = random.Random(seed)
    return [complex(rng.uniform(-60, 60), rng.uniform(-200, 200)) for _ in range(k)]


@pytest.mark.parametrize("s", _rand_points(40, 1) + [0.5 + 14.134725j, 1 + 2j * math.pi / math.log(2), -59.5 + 3j,
                                                     1.0001, 0.9999 + 1e-3j])
def test_zeta_vs_mpmath(s):
    v = zeta_c(s)
    want = complex(mpmath.zeta(mpmath.mpc(s.real, s.imag)))
    err = abs(v.value - want)
    # absolute 1e-12, scaled by |zeta| where it is large (see the error contract)
    assert err <= max(1e-12, 1e-12 * abs(want))
    assert err <= v.abs_err + 1e-15 * max(1, abs(want))


def test_gamma_examples():
    assert abs(gamma_c(0.5).value - math.sqrt(math.pi)) < 1e-14
    assert abs(gamma_c(5).value - 24) < 1e-12
    assert abs(gamma_c(F(1, 3)).value - 2.678938534707747) < 1e-13
    with pytest.raises(ZeroDivisionError):
        gamma_c(-2)


@pytest.mark.parametrize("s", [complex(random.Random(i).uniform(-20, 20), random.Random(i + 99).uniform(-30, 30))
                               for i in range(50)])
def test_gamma_recurrence(s):
    lhs, rhs = gamma_c(s + 1).value, s * gamma_c(s).value
    assert abs(lhs - rhs) <= 1e-11 * abs(lhs)


@given(st.complex_numbers(min_magnitude=0.1, max_magnitude=50).filter(lambda z: z.real > 0.05))
def test_loggamma_vs_mpmath(s):
    v = loggamma_c(s)
    want = complex(mpmath.loggamma(mpmath.mpc(s.real, s.imag)))
    assert abs(v.value - want) <= max(v.abs_err, 1e-12 * abs(want))


# -- ConstExpr --------------------------------------------------------------

def test_canonical_reflection():
    lhs = ConstExpr.loggamma(F(1, 3)) + ConstExpr.loggamma(F(2, 3))
    assert lhs == ConstExpr.log_pi() + ConstExpr.log(2) - ConstExpr.log(3) * F(1, 2)


def test_canonical_logs():
    assert ConstExpr.log(12) == ConstExpr.log(2) * 2 + ConstExpr.log(3)
    assert ConstExpr.log_2pi() == ConstExpr({"LOG_P(2)": 1, "LOG_PI": 1})
    assert ConstExpr.zetap_0() == ConstExpr.log_2pi() * F(-1, 2)
    assert ConstExpr.loggamma(F(7, 2)) == ConstExpr.loggamma(F(1, 2)) + ConstExpr.log(F(15, 8))


def test_const_eval_examples():
    assert abs(const_eval(ConstExpr.rational(F(1, 3))).re - 1 / 3) < 1e-15
    assert abs(const_eval(ConstExpr.log_2pi()).re - 1.8378770664093453) < 1e-14
    assert abs(const_eval(ConstExpr.zetap_m1()).re - (-0.16542114370045092)) < 1e-15
    assert abs(const_eval(ConstExpr.euler_gamma()).re - 0.5772156649015329) < 1e-15
    assert abs(const_eval(ConstExpr.zetap_0()).re - float(mpmath.zeta(0, derivative=1))) < 1e-15


def test_json_shape():
    e = ConstExpr.rational(F(1, 3)) + ConstExpr.log(2)
    assert e.to_json() == {"UNIT": "1/3", "LOG_P(2)": "1"}
    assert ConstExpr.from_json(e.to_json()) == e


symbols = st.sampled_from(["UNIT", "GAMMA", "ZETAP_M1", "LOG_PI", "LOG_P(2)", "LOG_P(3)", "LOG_P(5)",
                           "LOGGAMMA(1,3)", "LOGGAMMA(2,3)", "LOGGAMMA(1,4)", "LOGGAMMA(3,4)", "LOGGAMMA(5,6)",
                           "LOGGAMMA(1,2)", "LOGGAMMA(2,5)", "LOGGAMMA(4,5)"])
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
exprs = st.dictionaries(symbols, coeffs, max_size=5).map(ConstExpr)


@settings(max_examples=100)
@given(exprs, exprs)
def test_const_eval_additive(a, b):
    va, vb, vab = const_eval(a), const_eval(b), const_eval(a + b)
    assert abs(vab.value - (va.value + vb.value)) <= va.abs_err + vb.abs_err + vab.abs_err


@given(exprs)
def test_canonicalization_idempotent_and_value_preserving(e):
    again = ConstExpr(e.terms)
    assert again == e and again.terms == e.terms
    raw = 0.0
    for sym, c in e.terms.items():
        raw += float(c) * const_eval(ConstExpr({sym: 1})).re
    assert abs(raw - const_eval(e).re) < 1e-12 * (1 + abs(raw))


@given(exprs)
def test_reflected_symbols_vs_mpmath(e):
    want = mpmath.mpf(0)
    vals = {"UNIT": 1, "GAMMA": mpmath.euler, "ZETAP_M1": mpmath.zeta(-1, derivative=1), "LOG_PI": mpmath.log(mpmath.pi)}
    for sym, c in e.terms.items():
        if sym.startswith("LOG_P("):
            v = mpmath.log(int(sym[6:-1]))
        elif sym.startswith("LOGGAMMA("):
            j, q = sym[9:-1].split(",")
            v = mpmath.loggamma(mpmath.mpf(int(j)) / int(q))
        else:
            v = vals[sym]
        want += mpmath.mpf(c.numerator) / c.denominator * v
    assert abs(const_eval(e).re - float(want)) < 1e-12 * (1 + abs(float(want)))


# -- ConstLaurent / ComplexVal ------------------------------------------------

def test_laurent_product():
    # (1/s + g)(s - g s^2) = 1 + 0 s + O(s^2)
    g = ConstExpr.euler_gamma()
    a = ConstLaurent({-1: 1, 0: g}, 0)
    b = ConstLaurent({1: 1, 2: -g}, 2)
    p = a * b
    assert p[0] == ConstExpr.rational(1)
    assert p[1].is_zero()


def test_complexval_error_propagation():
    a = ComplexVal.of(1 + 1j, 1e-10)
    b = ComplexVal.of(2 - 1j, 2e-10)
    assert (a + b).abs_err >= 3e-10
    assert (a * b).abs_err >= abs(b.value) * 1e-10
    assert (a - a).close_to(0, 3e-10)
