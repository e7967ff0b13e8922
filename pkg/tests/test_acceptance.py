"""Acceptance criteria 1-9.

Each test carries ``@pytest.mark.criterion(n)``; the conftest prints one
PASS/FAIL line per criterion at the end of the run. Sub-checks that cannot
be met at the required tolerance are strict xfails, so their criterion is
reported as FAIL while the run stays green.
"""

import cmath
import math
import random
import time
from fractions import Fraction
from math import gcd

import mpmath
import pytest

from wittenzeta.claims import evaluate, find_claim
from wittenzeta.constants import ConstExpr, const_eval
from wittenzeta.continuation import NearPoleError, auto_depth, zeta_direct, zeta_local, zeta_mb
from wittenzeta.dzero import I_alpha, I_alpha_numeric_oracle, dzero
from wittenzeta.kernel import (F_hankel, K_2f1_oracle, K_closed_form_d1, K_eval, appendix_lemma_check,
                               poly_numeric)
from wittenzeta.modular import conjecture_check, identity_terms, lifted_sides, romik_A_check
from wittenzeta.polycore import parse_poly, reverse_poly
from wittenzeta.repcount import compare_asymptotic, exponent_probe, naive_counts, rep_counts
from wittenzeta.specials import (F_A, F_B, F_G, bg_sequence, certificate_check_appendix, certificate_check_b,
                                 fractional_is_pole, pole_catalog, recurrence_check, vanishing_identity,
                                 zeta_at_neg_int)

F = Fraction
F13 = parse_poly("(1+x)(1+3x)")
PRESETS = {"A": F_A, "B": F_B, "G": F_G}


class Budget:
    """Wall-clock budget for one criterion."""

    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f} s, budget {self.seconds} s"


# -- 1. exact special values ----------------------------------------------------

EXACT = [
    (F_A, ["1/3"]),
    (F_B, ["3/8", "-11/4480", "0", "-4581/1576960", "0", "-287820799443/256502005760", "0"]),
    (F_G, ["5/12", "33205/2612736", "0", "313071820474581425/1580471680499712", "0", None, "0"]),
    (F13, ["43/108", "-23/87480", "809/72171", "10828231/51963120", "2383543667/157837977"]),
]


@pytest.mark.criterion(1)
def test_c1_exact_values():
    with Budget(1):
        for f, vals in EXACT:
            for n, v in enumerate(vals):
                if v is not None:
                    assert zeta_at_neg_int(f, n) == F(v), (str(f), n)


# -- 2. residues at the abscissa and the appendix identity --------------------

ABSCISSA = [
    (F_A, lambda: mpmath.gamma(F(1, 3)) ** 3 / (2 * mpmath.sqrt(3) * mpmath.pi)),
    (F_B, lambda: mpmath.gamma(F(1, 4)) ** 2 / (8 * mpmath.sqrt(2 * mpmath.pi))),
    (F_G, lambda: mpmath.gamma(F(1, 3)) ** 3 / (mpmath.mpf(2) ** (mpmath.mpf(8) / 3) * mpmath.mpf(3) ** 1.5
                                                * mpmath.pi)),
]


@pytest.mark.criterion(2)
def test_c2_abscissa_residues_and_appendix():
    with Budget(10):
        for f, closed in ABSCISSA:
            rec = pole_catalog(f, 0)[0]
            assert rec.location == F(2, f.degree + 2)
            want = float(closed())
            assert abs(rec.residue_value.value - want) < 1e-8
            res, _ = zeta_local(f, rec.location)
            assert abs(res.value - want) < 1e-8
        for u in (-1 / 6, -1 / 3, 0.0, -0.4):
            lhs, rhs = appendix_lemma_check(u)
            assert abs(lhs.value - rhs.value) < 1e-8, u


# -- 3. continuation consistency -----------------------------------------------

@pytest.mark.criterion(3)
def test_c3_continuation_consistency():
    rng = random.Random(2024)
    with Budget(120):
        for name, f in PRESETS.items():
            for _ in range(20):
                s = complex(rng.uniform(0.9, 3), rng.uniform(-5, 5))
                a, b = zeta_mb(f, s), zeta_direct(f, s)
                assert abs(a.value - b.value) < 1e-6, (name, s)
        fs = list(PRESETS.values())
        done = 0
        while done < 30:
            f = fs[done % 3]
            s = complex(rng.uniform(-6, 3), rng.uniform(-5, 5))
            M = auto_depth(f.degree, s)
            try:
                a = zeta_mb(f, s, M=M)
            except NearPoleError:
                continue  # inside the exclusion disc of a pole; draw again
            b = zeta_mb(f, s, M=M + 2)
            assert abs(a.value - b.value) <= a.abs_err + b.abs_err + 1e-12 * (1 + abs(a.value)), s
            done += 1


# -- 4. pole catalog --------------------------------------------------------------

@pytest.mark.criterion(4)
def test_c4_pole_pattern_B():
    # the candidate with index n sits at s = k/3, k = 1 - n
    for n in range(61):
        k = 1 - n
        assert fractional_is_pole(F_B, n) == (k % 6 in (1, 5)), n


@pytest.mark.criterion(4)
def test_c4_pole_pattern_G():
    # vanishing half proved exactly; nonvanishing half is CONJECTURE-TESTED
    for n in range(201):
        assert fractional_is_pole(F_G, n) == (n % 10 not in (1, 3, 5, 6, 7, 9)), n


@pytest.mark.criterion(4)
@pytest.mark.parametrize("name", PRESETS)
def test_c4_first_residues_vs_local(name):
    f = PRESETS[name]
    poles = [r for r in pole_catalog(f, 12) if r.is_pole][:3]
    for r in poles:
        res, _ = zeta_local(f, r.location)
        assert abs(res.value - r.residue_value.value) < 1e-5, r.location


# -- 5. recurrences and certificates ----------------------------------------------

@pytest.mark.criterion(5)
def test_c5_recurrences_and_certificates():
    with Budget(5):
        assert recurrence_check(bg_sequence("b", 200))
        assert recurrence_check(bg_sequence("g", 100))
        assert certificate_check_b()
        assert certificate_check_appendix()


# -- 6. zeta'(0) -------------------------------------------------------------------

DZERO = {
    "A": (F_A, ConstExpr.log(2) + ConstExpr.log_pi()),
    "B": (F_B, ConstExpr.log(2) * F(5, 4) + ConstExpr.log_pi() * F(3, 2)),
    "G": (F_G, ConstExpr.log(2) * 2 - ConstExpr.log(3) * F(1, 2) + ConstExpr.log_pi() * F(5, 2)),
    "P": (F13, ConstExpr.from_json({"ZETAP_M1": "-4/9", "LOG_P(3)": "-25/108", "LOG_P(2)": "4/3",
                                     "LOG_PI": "4/3", "LOGGAMMA(1,3)": "1/3"})),
}


def _central_difference(f, h=1e-3):
    return (zeta_mb(f, h).value - zeta_mb(f, -h).value).real / (2 * h)


@pytest.mark.criterion(6)
@pytest.mark.parametrize("key", DZERO)
def test_c6_dzero_symbolic(key):
    f, want = DZERO[key]
    assert dzero(f) == want


@pytest.mark.criterion(6)
@pytest.mark.parametrize("key", ["A", "B", "P"])
def test_c6_dzero_central_difference(key):
    f, want = DZERO[key]
    assert abs(_central_difference(f) - const_eval(want).re) < 1e-4


@pytest.mark.criterion(6)
@pytest.mark.xfail(strict=True, reason="h^2 truncation of the plain difference is 1.2e-4 for omega_G at h = 1e-3")
def test_c6_dzero_central_difference_G():
    f, want = DZERO["G"]
    assert abs(_central_difference(f) - const_eval(want).re) < 1e-4


@pytest.mark.criterion(6)
def test_c6_I_alpha_vs_oracle():
    for p in range(1, 7):
        for q in range(1, 7):
            if gcd(p, q) != 1:
                continue
            sym = I_alpha(p, q)
            assert abs(const_eval(sym.value).re - I_alpha_numeric_oracle(p, q).re) < 1e-8, (p, q)
    for cid in ("ialpha:1", "ialpha:1/2", "ialpha:1/3", "ialpha:3/2"):
        assert evaluate(find_claim(cid)).passed, cid


# -- 7. modular identities --------------------------------------------------------

@pytest.mark.criterion(7)
def test_c7_modular_identities():
    with Budget(120):
        for n in (1, 2):
            assert romik_A_check(n, 30)
        for n in (1, 2, 3):
            assert conjecture_check("B", n, 20)
        for n in (1, 2):
            assert conjecture_check("G", n, 12)
        for case, ns in (("A", (1, 2)), ("B", (1, 2, 3)), ("G", (1, 2))):
            for n in ns:
                lhs, rhs = lifted_sides(identity_terms(case, n), 0)
                assert (lhs.coeffs[0], rhs.coeffs[0]) == vanishing_identity(case, n)
                assert lhs.coeffs[0] == rhs.coeffs[0]


# -- 8. representation counts ------------------------------------------------------

@pytest.mark.criterion(8)
@pytest.mark.parametrize("system", ["A2", "B2", "G2"])
def test_c8_euler_vs_naive(system):
    assert rep_counts(system, 500).counts == naive_counts(system, 500).counts


@pytest.mark.criterion(8)
def test_c8_g2_trend():
    rep = compare_asymptotic(10_000)
    rows = rep["rows"]
    assert len(rows) >= 3
    for a, b in zip(rows, rows[1:]):
        assert abs(b["log_rho"]) < abs(a["log_rho"])
        assert abs(b["lambda"] - 1) < abs(a["lambda"] - 1)


@pytest.mark.criterion(8)
@pytest.mark.xfail(strict=True, reason="fitted slope on [1e3, 1e4] is still dominated by subleading terms")
@pytest.mark.parametrize("system,target", [("A2", 2 / 5), ("B2", 1 / 3)])
def test_c8_exponent_probe(system, target):
    slope = exponent_probe(rep_counts(system, 10_000), 1000, 10_000)
    assert abs(slope - target) <= 0.05


# -- 9. kernel properties ----------------------------------------------------------

def _close(a, b, tol):
    return abs(complex(a) - complex(b)) <= tol


@pytest.mark.criterion(9)
def test_c9_kernel_properties():
    rng = random.Random(9)
    with Budget(60):
        # functional equation on 50 random points
        for i in range(50):
            f = [F_B, F_G, F13][i % 3]
            a = complex(rng.uniform(-2, 2), rng.uniform(-1.5, 1.5))
            s = complex(rng.uniform(-3, 3), rng.uniform(-2, 2))
            k1, k2 = K_eval(f, a, s), K_eval(reverse_poly(f), a, a * f.degree - s)
            assert _close(k1.value, k2.value, k1.abs_err + k2.abs_err + 1e-12), (a, s)
        # entirety probe where Gamma(s) blows up
        for f in (F_B, F_G):
            for n in range(4):
                k0, near = K_eval(f, 0.37 + 0.2j, -n), K_eval(f, 0.37 + 0.2j, -n + 1e-6)
                assert cmath.isfinite(k0.value)
                assert _close(k0.value, near.value, 1e-4 * max(1, abs(k0.value)))
        # decay envelope
        rate = poly_numeric(F_B).default_angle() - 0.1
        vals = {t: abs(F_hankel(F_B, 1.0, 0.4 + 1j * t).value) for t in (5, 10, 20)}
        C = vals[5] * math.exp(rate * 5)
        assert vals[5] > vals[10] > vals[20] > 0
        assert all(vals[t] <= C * math.exp(-rate * t) for t in (10, 20))
        # d = 1 closed form
        f1 = parse_poly("(1+5/2x)")
        for _ in range(20):
            a = complex(rng.uniform(-4, 4), rng.uniform(-3, 3))
            s = complex(rng.uniform(-6, 4), rng.uniform(-3, 3))
            want = K_closed_form_d1(2.5, s)
            assert _close(K_eval(f1, a, s).value, want, 1e-8 * max(1, abs(want)))
        # d = 2 hypergeometric oracle
        for f in (F_B, F13, parse_poly("(1+x)(1+3/2x)")):
            for _ in range(5):
                a = complex(rng.uniform(0.2, 2.5), rng.uniform(-1, 1))
                s = complex(rng.uniform(-2, 3), rng.uniform(-1, 1))
                o, k = K_2f1_oracle(f, a, s), K_eval(f, a, s)
                assert _close(o.value, k.value, 1e-8 * max(1, abs(o.value)))
