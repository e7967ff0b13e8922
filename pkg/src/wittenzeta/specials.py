"""Exact special values of zeta_f: values at non-positive integers, the pole
catalog with exact residue factors, and the b_n / g_n coefficient sequences
with their recurrences and telescoping certificates."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .constants import ComplexVal, zeta_c, zeta_neg_int
from .kernel import F_direct, K_lattice
from .polycore import (MPoly, PositivePoly, RationalFunction, fmt_q, parse_poly, poly_mul,
                       rational_power, reverse_poly, series_pow, series_pow_log)

F_A = parse_poly("(1+x)")
F_B = parse_poly("(1+x)(1+2x)")
F_G = parse_poly("(1+x)(1+2x)(1+3x)(2+3x)")


# ---------------------------------------------------------------------------
# values at non-positive integers
# ---------------------------------------------------------------------------

def _poly_pow(coeffs, n: int) -> list[Fraction]:
    out = [Fraction(1)]
    for _ in range(n):
        out = poly_mul(out, coeffs)
    return out


def _neg_log_coeff(f: PositivePoly, n: int, k: int) -> Fraction:
    """[-f^n log f][x^k] for k > n d; the log c0 part has degree n d < k."""
    ser, _ = series_pow_log(f, n, k)
    return -ser[k]


def zeta_at_neg_int(f: PositivePoly, n: int, form: str = "simplified") -> Fraction:
    """Exact zeta_f(-n) for n >= 0.

    ``form="simplified"`` uses coefficients of f^n and f^n log f directly;
    ``form="raw"`` goes through K_f at lattice points before simplification.
    Both must agree; see :func:`zeta_at_neg_int_both`.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    d = f.degree
    g = reverse_poly(f)
    top = 1 + (d + 1) * n
    if form == "simplified":
        head = zeta_neg_int((d + 2) * n + 1) / (d + 1) * (
            _neg_log_coeff(f, n, top) + _neg_log_coeff(g, n, top))
        fn = _poly_pow(f.coeffs, n)
        tail = sum((fn[i] * zeta_neg_int(n + i) * zeta_neg_int((d + 1) * n - i)
                    for i in range(d * n + 1)), Fraction(0))
        return head + tail
    if form == "raw":
        sign = -1 if (d * n + 1) % 2 else 1
        pref = Fraction(math.factorial(n) ** 2 * sign, (d + 1) * math.factorial(top))
        # K_f(-n, 1+n) = K_g(-n, -1-(d+1)n)
        head = pref * zeta_neg_int((d + 2) * n + 1) * (K_lattice(g, n, top) + K_lattice(f, n, top))
        sign2 = -1 if (n * (d + 1)) % 2 else 1
        tail = Fraction(0)
        for i in range(d * n + 1):
            w = Fraction(sign2 * math.factorial(n), d * math.factorial(i) * math.factorial(d * n - i))
            tail += w * K_lattice(f, n, i) * zeta_neg_int(n + i) * zeta_neg_int((d + 1) * n - i)
        return head + tail
    raise ValueError(f"unknown form {form!r}")


def zeta_at_neg_int_both(f: PositivePoly, n: int) -> dict:
    """Both evaluations side by side, with an agreement flag."""
    a = zeta_at_neg_int(f, n, "simplified")
    b = zeta_at_neg_int(f, n, "raw")
    return {"n": n, "simplified": a, "raw": b, "agree": a == b}


# ---------------------------------------------------------------------------
# pole catalog
# ---------------------------------------------------------------------------

def fractional_residue_parts(f: PositivePoly, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """(s0, q_f, q_g) with [f^{-s0}][x^n] = c0^{-s0} q_f and
    [g^{-s0}][x^n] = c_d^{-s0} q_g, where s0 = (1-n)/(d+1)."""
    d = f.degree
    s0 = Fraction(1 - n, d + 1)
    g = reverse_poly(f)
    qf = series_pow([c / f.c0 for c in f.coeffs], -s0, n)[n]
    qg = series_pow([c / g.c0 for c in g.coeffs], -s0, n)[n]
    return s0, qf, qg


def fractional_is_pole(f: PositivePoly, n: int) -> bool:
    """Exact decision whether c0^{-s0} q_f + c_d^{-s0} q_g is nonzero."""
    s0, qf, qg = fractional_residue_parts(f, n)
    if s0.denominator == 1:
        return False
    if qf == 0 and qg == 0:
        return False
    if qf == 0 or qg == 0:
        return True
    r = -qf / qg
    if r <= 0:
        return True
    # zero iff r = (c0/c_d)^{s0}, i.e. r^q = (c0/c_d)^p for s0 = p/q
    return r ** s0.denominator != (f.c0 / f.cd) ** s0.numerator


@dataclass(frozen=True)
class PoleRecord:
    """One candidate pole of zeta_f.

    For FRACTIONAL records the residue factor
    [f^{-s0}][x^n] + [g^{-s0}][x^n] = c0^{-s0} q_f + c_d^{-s0} q_g is kept
    exactly through (q_f, q_g, c0, c_d); ``rational_factor`` holds its value
    when both powers are rational and is None otherwise.
    """

    location: Fraction
    kind: str
    n: int | None
    q_f: Fraction | None
    q_g: Fraction | None
    c0: Fraction
    cd: Fraction
    rational_factor: Fraction | None
    zeta_arg: Fraction | None
    residue_value: ComplexVal
    is_pole: bool

    @property
    def factor_value(self) -> float | None:
        if self.kind != "FRACTIONAL":
            return None
        s0 = self.location
        return (float(self.c0) ** float(-s0) * float(self.q_f)
                + float(self.cd) ** float(-s0) * float(self.q_g))

    def factor_text(self) -> str:
        if self.kind != "FRACTIONAL":
            return ""
        if self.rational_factor is not None:
            return fmt_q(self.rational_factor)
        e = fmt_q(-self.location)
        return (f"{fmt_q(self.c0)}^({e})*({fmt_q(self.q_f)}) + "
                f"{fmt_q(self.cd)}^({e})*({fmt_q(self.q_g)})")

    def to_json(self) -> dict:
        r = self.residue_value
        out = {
            "s0": fmt_q(self.location),
            "kind": self.kind,
            "is_pole": self.is_pole,
            "residue": {"re": r.re, "im": r.im, "abs_err": r.abs_err},
        }
        if self.kind == "FRACTIONAL":
            out.update({
                "n": self.n,
                "rational_factor": self.factor_text(),
                "q_f": fmt_q(self.q_f),
                "q_g": fmt_q(self.q_g),
                "zeta_arg": fmt_q(self.zeta_arg),
            })
        return out


def abscissa_record(f: PositivePoly) -> PoleRecord:
    """The pole at 2/(d+2), residue F_f(2/(d+2), d/(d+2)) / (d+2)."""
    d = f.degree
    s0 = Fraction(2, d + 2)
    F = F_direct(f, 2 / (d + 2), d / (d + 2))
    res = ComplexVal.of(F.value / (d + 2), F.abs_err / (d + 2))
    return PoleRecord(s0, "ABSCISSA", None, None, None, f.c0, f.cd, None, None, res, True)


def fractional_record(f: PositivePoly, n: int) -> PoleRecord:
    d = f.degree
    s0, qf, qg = fractional_residue_parts(f, n)
    if s0.denominator == 1:
        raise ValueError(f"s0 = {s0} is an integer; zeta_f is analytic there")
    pf = rational_power(f.c0, -s0)
    pg = rational_power(f.cd, -s0)
    exact = pf * qf + pg * qg if pf is not None and pg is not None else None
    zarg = (d + 2) * s0 - 1
    is_pole = fractional_is_pole(f, n)
    fac = (float(f.c0) ** float(-s0) * float(qf) + float(f.cd) ** float(-s0) * float(qg))
    if not is_pole:
        res = ComplexVal.of(0j, 0.0)
    else:
        z = zeta_c(float(zarg))
        val = z.value * fac / (d + 1)
        res = ComplexVal.of(val, z.abs_err * abs(fac) / (d + 1) + 4e-16 * abs(val))
    return PoleRecord(s0, "FRACTIONAL", n, qf, qg, f.c0, f.cd, exact, zarg, res, is_pole)


def pole_catalog(f: PositivePoly, n_max: int) -> list[PoleRecord]:
    """The abscissa pole plus every candidate s0 = (1-n)/(d+1), n <= n_max, s0 not an integer."""
    d = f.degree
    out = [abscissa_record(f)]
    for n in range(n_max + 1):
        if (1 - n) % (d + 1) == 0:
            continue
        out.append(fractional_record(f, n))
    return out


def scaling_relation_check(f: PositivePoly, lam, mu) -> bool:
    """Exact check of g(lam x) = mu f(x) with g = x^d f(1/x)."""
    g = reverse_poly(f)
    lam, mu = Fraction(lam), Fraction(mu)
    return all(g.coeffs[k] * lam**k == mu * f.coeffs[k] for k in range(f.degree + 1))


# ---------------------------------------------------------------------------
# b_n and g_n
# ---------------------------------------------------------------------------

_BG_BASE = {
    "b": ([Fraction(1), Fraction(3), Fraction(2)], 3),
    # (1+x)(1+2x)(1+3x)(1+3x/2) = f_G / 2
    "g": ([c / 2 for c in F_G.coeffs], 5),
}


@dataclass
class CoeffSequence:
    name: str
    values: list[Fraction]
    log: list[str] = field(default_factory=list)

    def zero_pattern(self) -> list[int]:
        return [n for n, v in enumerate(self.values) if v == 0]


def bg_sequence(name: str, n_max: int) -> CoeffSequence:
    """b_n = [f_B^{(n-1)/3}][x^n] or g_n = [(f_G/2)^{(n-1)/5}][x^n], n <= n_max."""
    if name not in _BG_BASE:
        raise ValueError("name must be 'b' or 'g'")
    base, q = _BG_BASE[name]
    vals = [series_pow(base, Fraction(n - 1, q), n)[n] for n in range(n_max + 1)]
    return CoeffSequence(name, vals)


def _b_recurrence(v, n):
    return 27 * (n + 4) * (n + 6) * v[n + 6] - 4 * (n + 2) * (n + 5) * v[n]


def _g_recurrence(v, n):
    return (729 * (n + 4) * (n + 9) * (n + 14) * (n + 19) * (6 * n + 103) * v[n]
            - 1875 * (n + 14) * (n + 19) * (216 * n**3 + 7596 * n**2 + 83694 * n + 290603) * v[n + 10]
            + 50000 * (n + 12) * (n + 16) * (n + 18) * (n + 20) * (6 * n + 43) * v[n + 20])


def recurrence_check(seq: CoeffSequence) -> bool:
    """Exact check of the b (span 6) or g (span 20) recurrence over the stored range."""
    rec, span = (_b_recurrence, 6) if seq.name == "b" else (_g_recurrence, 20)
    if len(seq.values) < span + 1:
        raise ValueError(f"need at least {span + 1} terms")
    ok = True
    for n in range(len(seq.values) - span):
        r = rec(seq.values, n)
        if r != 0:
            seq.log.append(f"n={n}: residual {fmt_q(r)}")
            ok = False
    seq.log.append(f"checked n=0..{len(seq.values) - span - 1}: {'ok' if ok else 'FAILED'}")
    return ok


def zero_pattern_report(seq: CoeffSequence) -> dict:
    """Compare the zero set of b_n / g_n with the predicted residues.

    For g the nonvanishing half (n = 0, 2, 4, 8 mod 10) is a conjecture, so it is
    reported with status CONJECTURE-TESTED.
    """
    if seq.name == "b":
        # poles of omega_B sit only at k/3 with k = 1, 5 mod 6, so b_n vanishes
        # unless n = 0, 2 mod 6 (not merely for n = 1 mod 3)
        mod, zero_res = 6, {1, 3, 4, 5}
        status = "PROVED"
    else:
        mod, zero_res = 10, {1, 3, 5, 6, 7, 9}
        status = "CONJECTURE-TESTED"
    wrong_zero = [n for n, v in enumerate(seq.values) if v == 0 and n % mod not in zero_res]
    wrong_nonzero = [n for n, v in enumerate(seq.values) if v != 0 and n % mod in zero_res]
    return {
        "name": seq.name,
        "n_max": len(seq.values) - 1,
        "zero_residues": sorted(zero_res),
        "modulus": mod,
        "predicted_zeros_hold": not wrong_nonzero,
        "nonvanishing_holds": not wrong_zero,
        "nonvanishing_status": status,
        "exceptions": wrong_zero + wrong_nonzero,
    }


# ---------------------------------------------------------------------------
# telescoping certificates
# ---------------------------------------------------------------------------

_BX = ("n", "x")
_UX = ("u", "x")


def _b_certificate(vars=_BX) -> RationalFunction:
    n, x = MPoly.var(vars, "n"), MPoly.var(vars, "x")
    inner = (2 * n * x**4 - 6 * n * x**3 - 39 * n * x**2 - 36 * n * x - 9 * n
             + 10 * x**4 - 12 * x**3 - 150 * x**2 - 144 * x - 36)
    return RationalFunction(3 * (x + 1) * (2 * x + 1) * inner, x**5)


def _appendix_certificate(vars=_UX) -> RationalFunction:
    x = MPoly.var(vars, "x")
    return RationalFunction(2 * x * (x + 1) * (2 * x + 1) * (3 * x**2 + 3 * x + 1),
                            (3 * x + 1) * (3 * x + 2))


def certificate_residual_b(certificate: RationalFunction | None = None) -> MPoly:
    """Numerator of LHS/F - (R' + R F_x/F) for the b_n telescoping relation,
    F(x, n) = f_B^{(n-1)/3} x^{-n-1}; zero iff the certificate is valid."""
    R = certificate if certificate is not None else _b_certificate()
    n, x = MPoly.var(_BX, "n"), MPoly.var(_BX, "x")
    fB = (1 + x) * (1 + 2 * x)
    # F(x, n+6) / F(x, n) = f_B^2 / x^6
    lhs = (RationalFunction(27 * (4 + n) * (6 + n) * fB**2, x**6)
           - RationalFunction(4 * (2 + n) * (5 + n)))
    logder = (RationalFunction((n - 1) * fB.diff("x"), 3 * fB)
              - RationalFunction(n + 1, x))
    rhs = R.diff("x") + R * logder
    diff = lhs - rhs
    return diff.num


def certificate_residual_appendix(certificate: RationalFunction | None = None) -> MPoly:
    """Same for (2u+1) F(x,u) + 9(6u+5) F(x,u+1) = d/dx(R F) with
    F = (x(1+x)(1+2x))^{2u} ((1+3x)(2+3x))^{-2u-2/3}."""
    R = certificate if certificate is not None else _appendix_certificate()
    u, x = MPoly.var(_UX, "u"), MPoly.var(_UX, "x")
    p = x * (1 + x) * (1 + 2 * x)
    q = (1 + 3 * x) * (2 + 3 * x)
    lhs = RationalFunction(2 * u + 1) + RationalFunction(9 * (6 * u + 5) * p**2, q**2)
    logder = (RationalFunction(2 * u * p.diff("x"), p)
              + RationalFunction((-6 * u - 2) * q.diff("x"), 3 * q))
    rhs = R.diff("x") + R * logder
    return (lhs - rhs).num


def certificate_check_b(certificate: RationalFunction | None = None) -> bool:
    return certificate_residual_b(certificate).is_zero()


def certificate_check_appendix(certificate: RationalFunction | None = None) -> bool:
    return certificate_residual_appendix(certificate).is_zero()


def appendix_induced_recurrence() -> dict:
    """The recurrence on I_2(u) obtained by integrating the certified identity
    over a closed contour: coefficients of I_2(u) and I_2(u+1)."""
    if not certificate_check_appendix():
        raise AssertionError("appendix certificate failed")
    return {"I2(u)": "2*u + 1", "I2(u+1)": "54*u + 45"}


# ---------------------------------------------------------------------------
# vanishing patterns
# ---------------------------------------------------------------------------

def _log_coeff(f: PositivePoly, n: int, k: int) -> Fraction:
    ser, _ = series_pow_log(f, n, k)
    return ser[k]


def vanishing_identity(name: str, n: int) -> tuple[Fraction, Fraction]:
    """(lhs, rhs) of the scalar identity equivalent to omega(-2n) = 0."""
    z = zeta_neg_int
    if name == "A":
        lhs = Fraction(math.factorial(2 * n), math.factorial(4 * n + 1)) * z(6 * n + 1)
        rhs = sum((Fraction(1, math.factorial(i) * math.factorial(2 * n - i)) * z(i + 2 * n) * z(4 * n - i)
                   for i in range(2 * n + 1)), Fraction(0))
        return lhs, rhs
    if name == "B":
        f, d, lam = F_B, 2, Fraction(1) + Fraction(1, 2 ** (1 + 4 * n))
    elif name == "G":
        f, d, lam = F_G, 4, Fraction(1) + Fraction(1, 3 ** (1 + 6 * n))
    else:
        raise ValueError("name must be A, B or G")
    top = 1 + (d + 1) * 2 * n
    lhs = z((d + 2) * 2 * n + 1) / (d + 1) * lam * _log_coeff(f, 2 * n, top)
    fn = _poly_pow(f.coeffs, 2 * n)
    rhs = sum((fn[i] * z(i + 2 * n) * z((d + 1) * 2 * n - i) for i in range(2 * d * n + 1)), Fraction(0))
    return lhs, rhs


def _preset_name(f: PositivePoly) -> str | None:
    for name, p in (("A", F_A), ("B", F_B), ("G", F_G)):
        if list(f.coeffs) == list(p.coeffs):
            return name
    return None


def vanishing_suite(f: PositivePoly, n_odd: int = 5, n_even: int = 4) -> dict:
    """Report on the vanishing of zeta_f at negative integers."""
    d = f.degree
    report = {"poly": f.pretty(), "degree": d, "odd_checks": [], "even_checks": [], "failures": []}
    if d % 2 == 1:
        for n in range(n_odd + 1):
            v = zeta_at_neg_int(f, 2 * n + 1)
            report["odd_checks"].append({"s": -(2 * n + 1), "value": fmt_q(v), "zero": v == 0})
            if v != 0:
                report["failures"].append(f"zeta_f({-(2 * n + 1)}) = {fmt_q(v)}")
    name = _preset_name(f)
    if name is not None:
        for n in range(1, n_even + 1):
            lhs, rhs = vanishing_identity(name, n)
            ok = lhs == rhs
            report["even_checks"].append({"s": -2 * n, "lhs": fmt_q(lhs), "rhs": fmt_q(rhs), "holds": ok})
            if not ok:
                report["failures"].append(f"identity for omega_{name}({-2 * n}) fails")
    report["ok"] = not report["failures"]
    return report
