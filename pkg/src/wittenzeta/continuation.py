"""Evaluation of zeta_f(s) = sum_{n,m>=1} (n m^{d+1} f(n/m))^{-s} on C.

Two independent routes:

* ``zeta_direct`` sums the double series with nested Euler-Maclaurin
  corrections; it needs Re s > 2/(d+2) and serves as an oracle.
* ``zeta_mb`` uses the Mellin-Barnes representation shifted to the line
  Re z = -M - 1/2:

      zeta_f(s) = zeta((d+2)s - 1) F_f(s, 1-s)
                + sum_{i=0}^{M} a_i(s) zeta(s-i) zeta((d+1)s+i)
                + (1/2 pi i) int F_f(s, z) zeta(s+z) zeta((d+1)s - z) dz

  with a_i(s) the Taylor coefficients of f(x)^{-s}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .constants import EPS, ComplexVal, gamma_arr, rgamma_arr, zeta_arr
from .kernel import K_eval, K_precise, F_split_many, poly_numeric, split_angles
from .highprec import taylor_coeffs
from .polycore import PositivePoly, reverse_poly
from .quadrature import composite_gauss_legendre


class NearPoleError(ValueError):
    """Raised when s is within the guard radius of a pole of zeta_f."""


class ContinuationDomainError(ValueError):
    pass


POLE_GUARD = 1e-4
REMOVABLE_GUARD = 1e-5


def auto_depth(d: int, s: complex) -> int:
    """Shift depth keeping the pole families on the correct side of the line."""
    sig = complex(s).real
    M = max(math.ceil(-d * sig), math.ceil(1 - (d + 1) * sig), math.ceil(-sig), 1)
    while sig > M + 0.5:
        M += 1
    return M


def check_depth(d: int, s: complex, M: int) -> None:
    sig = complex(s).real
    line = -M - 0.5
    if not (d * sig > line and (d + 1) * sig - 1 > line and 1 - sig > line):
        raise ContinuationDomainError(f"shift depth M={M} is too small for Re s = {sig}")


# ---------------------------------------------------------------------------
# singular points of the representation
# ---------------------------------------------------------------------------

def _candidates(d: int, s: complex) -> list[Fraction]:
    """Points near s where some term of the representation is singular."""
    sig = s.real
    out = [Fraction(2, d + 2)]
    n0 = 1 - (d + 1) * sig
    for n in range(math.floor(n0) - 2, math.ceil(n0) + 3):
        if n >= 0:
            out.append(Fraction(1 - n, d + 1))
    for k in range(math.floor(sig) - 1, math.ceil(sig) + 2):
        if k >= 1:
            out.append(Fraction(k))
    return sorted(set(out))


def _is_true_pole(f: PositivePoly, c: Fraction) -> bool:
    from .specials import fractional_is_pole

    d = f.degree
    if c == Fraction(2, d + 2):
        return True
    if c.denominator == 1:
        return False
    n = 1 - c * (d + 1)
    if n.denominator != 1 or n < 0:
        return False
    return fractional_is_pole(f, int(n))


# ---------------------------------------------------------------------------
# Mellin-Barnes evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZetaEvaluator:
    """Mellin-Barnes evaluator with an optional fixed shift depth."""

    f: PositivePoly
    M: int | None = None
    tol: float = 1e-11
    step: float = 1 / 16

    def __call__(self, s) -> ComplexVal:
        return zeta_mb(self.f, s, M=self.M, tol=self.tol, step=self.step)


def _boundary(f: PositivePoly, s: complex) -> ComplexVal:
    # zeta((d+2)s-1) F_f(s,1-s), with F = Gamma(1-s) Gamma((d+1)s-1)/Gamma(s) K_f(s,1-s)
    d = f.degree
    k = K_precise(f, s, 1 - s)
    g = complex(gamma_arr(1 - s) * gamma_arr((d + 1) * s - 1) * rgamma_arr(s))
    zv, ze = zeta_arr([(d + 2) * s - 1])
    val = complex(zv[0]) * g * k.value
    err = abs(g) * (abs(zv[0]) * k.abs_err + float(ze[0]) * abs(k.value)) + 64 * EPS * abs(val) * (1 + abs(s))
    return ComplexVal.of(val, err)


def _residue_sum(f: PositivePoly, s: complex, M: int) -> ComplexVal:
    d = f.degree
    ak = np.array(taylor_coeffs(f, s, M))
    i = np.arange(M + 1)
    z1, e1 = zeta_arr(s - i)
    z2, e2 = zeta_arr((d + 1) * s + i)
    terms = ak * z1 * z2
    val = complex(terms.sum())
    err = float(np.sum(np.abs(ak) * (np.abs(z1) * e2 + e1 * np.abs(z2)))) + 8 * (M + 1) * EPS * float(np.abs(terms).sum())
    return ComplexVal.of(val, err)


def _line_values(f: PositivePoly, s: complex, M: int, t: np.ndarray):
    """Integrand F(s,z) zeta(s+z) zeta((d+1)s-z) / (2 pi) at z = -M-1/2 + i t."""
    d = f.degree
    pn = poly_numeric(f)
    z = -M - 0.5 + 1j * t
    F = np.empty_like(z)
    Fe = np.empty(z.shape)
    thetas = split_angles(f, s, z, subtract=M)
    for th in np.unique(thetas):
        sel = thetas == th
        v, e = F_split_many(f, s, z[sel], theta=float(th), subtract=M)
        F[sel], Fe[sel] = v, e
    z1, e1 = zeta_arr(s + z)
    z2, e2 = zeta_arr((d + 1) * s - z)
    vals = F * z1 * z2 / (2 * math.pi)
    errs = (Fe * np.abs(z1 * z2) + np.abs(F) * (e1 * np.abs(z2) + np.abs(z1) * e2)) / (2 * math.pi) \
        + 8 * EPS * np.abs(vals)
    return vals, errs


def _line_integral(f: PositivePoly, s: complex, M: int, tol: float, step: float) -> ComplexVal:
    d = f.degree
    pn = poly_numeric(f)
    # the integrand is of moderate size between t = 0 and t = d Im s and decays
    # exponentially outside; scan outward in blocks until it is negligible
    lo_t = min(0.0, d * s.imag) - 4
    hi_t = max(0.0, d * s.imag) + 4
    peak = 0.0

    def scan(edge: float, direction: int) -> float:
        nonlocal peak
        t = edge
        while abs(t) < 400:
            pts = t + direction * np.arange(1, 9) * 1.0
            v, _ = _line_values(f, s, M, pts)
            m = float(np.max(np.abs(v)))
            peak = max(peak, m)
            t = float(pts[-1])
            if m < max(1e-3 * tol, 1e-3 * EPS * peak):
                return t
        raise ContinuationDomainError("line integrand does not decay")

    core = np.arange(lo_t, hi_t + 1e-9, 1.0)
    v0, _ = _line_values(f, s, M, core)
    peak = float(np.max(np.abs(v0)))
    T_hi = scan(hi_t, +1)
    T_lo = scan(lo_t, -1)

    n = int(math.ceil((T_hi - T_lo) / step))
    t = T_lo + step * np.arange(n + 1)
    vals, errs = _line_values(f, s, M, t)
    w = np.full(t.shape, step)
    w[0] = w[-1] = step / 2
    fine = complex(np.sum(w * vals))
    coarse_vals = vals[::2]
    wc = np.full(coarse_vals.shape, 2 * step)
    wc[0] = wc[-1] = step
    if n % 2:
        coarse = fine  # odd node count: fall back to the tail check below
    else:
        coarse = complex(np.sum(wc * coarse_vals))
    err = abs(fine - coarse) + float(np.sum(w * errs)) + abs(vals[0]) + abs(vals[-1])
    return ComplexVal.of(fine, err)


def _mb_raw(f: PositivePoly, s: complex, M: int, tol: float, step: float) -> ComplexVal:
    check_depth(f.degree, s, M)
    b = _boundary(f, s)
    r = _residue_sum(f, s, M)
    li = _line_integral(f, s, M, tol, step)
    return b + r + li


def _oriented(f: PositivePoly) -> PositivePoly:
    """f or g = x^d f(1/x), whichever has the larger smallest root modulus.

    zeta_f = zeta_g (swap n and m), and the Taylor part removed on the shifted
    line grows like rho_min^-M, so the larger rho_min keeps it smaller.
    """
    g = reverse_poly(f)
    return g if poly_numeric(g).rho_min > poly_numeric(f).rho_min * (1 + 1e-12) else f


def zeta_mb(f: PositivePoly, s, M: int | None = None, tol: float = 1e-11,
            step: float = 1 / 16) -> ComplexVal:
    """zeta_f(s) anywhere off the poles, through the shifted Mellin-Barnes formula."""
    s = complex(s)
    f = _oriented(f)
    d = f.degree
    cands = _candidates(d, s)
    dists = [abs(s - complex(c)) for c in cands]
    j = int(np.argmin(dists))
    c, dist = cands[j], dists[j]
    true_pole = _is_true_pole(f, c)
    if true_pole and dist < POLE_GUARD:
        raise NearPoleError(f"s = {s} is within {POLE_GUARD} of the pole {c}")
    if not true_pole and dist < REMOVABLE_GUARD:
        # removable point of the representation: Cauchy mean over a small circle
        gap = min(abs(complex(c) - complex(o)) for o in cands if o != c)
        rho = min(0.05, 0.2 * gap)
        # trapezoid aliasing decays like (rho / gap)^N
        ratio = rho / gap
        N = max(8, math.ceil(math.log(1e-15) / math.log(ratio)))
        cc = complex(c)
        depth = M if M is not None else auto_depth(d, cc - rho)
        total = 0j
        err = 0.0
        for k in range(N):
            w = cc + rho * cmath.exp(2j * math.pi * (k + 0.5) / N)
            v = _mb_raw(f, w, depth, tol, step)
            kern = (w - cc) / (w - s)
            total += v.value * kern
            err += v.abs_err * abs(kern)
        mean = total / N
        alias = ratio**N * (abs(mean) + err / N / EPS**0.5 + 1)
        return ComplexVal.of(mean, err / N + 16 * EPS * abs(mean) + alias)
    depth = M if M is not None else auto_depth(d, s)
    return _mb_raw(f, s, depth, tol, step)


def zeta_local(f: PositivePoly, s0, radius: float = 1e-3, points: int = 8) -> tuple[ComplexVal, ComplexVal]:
    """(residue, constant term of the Laurent expansion) at a pole s0."""
    s0 = Fraction(s0)
    if not _is_true_pole(f, s0):
        raise ValueError(f"{s0} is not a pole of zeta_f")
    c = complex(s0)
    res = 0j
    reg = 0j
    err_res = 0.0
    err_reg = 0.0
    for k in range(points):
        w = c + radius * cmath.exp(2j * math.pi * (k + 0.5) / points)
        v = zeta_mb(f, w)
        res += (w - c) * v.value
        reg += v.value
        err_res += radius * v.abs_err
        err_reg += v.abs_err
    res /= points
    reg /= points
    # the discrete mean carries an aliasing error of order radius^points
    # times the next Laurent coefficients; second order term bounded by reg
    alias = radius**points * (abs(reg) + 1)
    return (ComplexVal.of(res, err_res / points + alias),
            ComplexVal.of(reg, err_reg / points + alias / radius))


# ---------------------------------------------------------------------------
# direct summation oracle
# ---------------------------------------------------------------------------

def _log_term(pn, n, m):
    """log(n m P(n, m)) where P(n, m) = m^d f(n/m), analytic in complex m."""
    out = np.log(n) + np.log(m) + math.log(pn.c0)
    for a in pn.alphas:
        out = out + np.log(m + a * n)
    return out


def _bern_coeffs(K: int) -> np.ndarray:
    from .constants import bernoulli

    return np.array([float(bernoulli(2 * j)) / (2 * j) for j in range(1, K + 1)])


def _taylor_at(fun, x0: complex, radius: float, J: int = 64) -> np.ndarray:
    """Taylor coefficients c_k of fun around x0 (last axis = k)."""
    phi = 2 * np.pi * np.arange(J) / J
    pts = x0[..., None] + radius * np.exp(1j * phi)
    vals = fun(pts)
    coef = np.fft.fft(vals, axis=-1) / J
    k = np.arange(J)
    return coef / radius**k


def _inner_sum(pn, s: complex, m: np.ndarray, N: int, EMK: int, u_nodes, u_weights) -> np.ndarray:
    """G(m) = sum_{n>=1} (n m P(n,m))^{-s}, vectorised over (complex) m."""
    m = np.asarray(m, dtype=complex)
    # near the abscissa both node sets grow to ~10^4; bound the m x n work arrays
    block = max(1, 2_000_000 // (N + len(u_nodes)))
    if len(m) > block:
        return np.concatenate([_inner_block(pn, s, m[i:i + block], N, EMK, u_nodes, u_weights)
                               for i in range(0, len(m), block)])
    return _inner_block(pn, s, m, N, EMK, u_nodes, u_weights)


def _inner_block(pn, s: complex, m: np.ndarray, N: int, EMK: int, u_nodes, u_weights) -> np.ndarray:
    n = np.arange(1, N, dtype=float)
    head = np.exp(-s * _log_term(pn, n[None, :], m[:, None])).sum(axis=1)
    # integral from N to infinity with n = N e^u
    nn = N * np.exp(u_nodes)
    integ = (np.exp(-s * _log_term(pn, nn[None, :], m[:, None])) * (nn * u_weights)[None, :]).sum(axis=1)
    half = 0.5 * np.exp(-s * _log_term(pn, float(N), m))
    # Euler-Maclaurin: - sum_j B_{2j}/(2j)! h^{(2j-1)}(N) = - sum_j B_{2j}/(2j) c_{2j-1}
    radius = N * 0.5

    def h(x):
        return np.exp(-s * _log_term(pn, x, m[:, None]))

    c = _taylor_at(h, np.full(m.shape, float(N), dtype=complex), radius)
    bc = _bern_coeffs(EMK)
    corr = -(c[:, 1:2 * EMK:2] * bc[None, :]).sum(axis=1)
    return head + integ + half + corr


def zeta_direct(f: PositivePoly, s, tol: float = 1e-10, N: int = 32) -> ComplexVal:
    """Double series by Euler-Maclaurin in both summation variables.

    The inner sum over n is truncated at N with an integral tail and
    Bernoulli corrections; the resulting G(m) is analytic in m, and the outer
    sum is treated the same way (derivatives of G from samples on a complex
    circle).  The error estimate compares two truncation points.
    """
    s = complex(s)
    d = f.degree
    if s.real < 2 / (d + 2) + 0.05:
        raise ContinuationDomainError("direct summation needs Re s >= 2/(d+2) + 0.05")
    v1 = _zeta_direct_once(f, s, N)
    v2 = _zeta_direct_once(f, s, N + 12)
    err = abs(v1 - v2) + 64 * EPS * abs(v2)
    return ComplexVal.of(v2, err)


def _decay_nodes(rate: float, freq: float):
    # integral over u in [0, U] of functions decaying like e^{-rate u}
    U = 40.0 / rate
    panels = int(max(16, U * (1 + freq) / 2))
    x, w = np.polynomial.legendre.leggauss(24)
    edges = np.linspace(0, U, panels + 1)
    half = (edges[1] - edges[0]) / 2
    mids = (edges[:-1] + edges[1:]) / 2
    nodes = (mids[:, None] + half * x[None, :]).ravel()
    weights = np.tile(w, panels) * half
    return nodes, weights


def _zeta_direct_once(f: PositivePoly, s: complex, N: int) -> complex:
    pn = poly_numeric(f)
    d = pn.d
    EMK = 8
    # inner tail decays like n^{1-(d+1) Re s}... in u = log n: rate (d+1)Re s - 1 at worst
    rate_in = min(s.real, (d + 1) * s.real) + d * s.real - 1
    rate_in = max(rate_in, 0.05)
    u_in, w_in = _decay_nodes(rate_in, abs(s.imag) * (d + 2))
    Mo = N
    m_head = np.arange(1, Mo, dtype=float)
    total = _inner_sum(pn, s, m_head, N, EMK, u_in, w_in).sum()
    # outer integral from Mo to infinity with m = Mo e^u
    rate_out = min((d + 2) * s.real - 2, (d + 1) * s.real - 1)
    rate_out = max(rate_out, 0.05)
    u_out, w_out = _decay_nodes(rate_out, abs(s.imag) * (d + 2))
    mm = Mo * np.exp(u_out)
    G = _inner_sum(pn, s, mm, N, EMK, u_in, w_in)
    total += np.sum(G * mm * w_out)
    total += 0.5 * _inner_sum(pn, s, np.array([float(Mo)]), N, EMK, u_in, w_in)[0]
    # outer Euler-Maclaurin corrections from G on a complex circle around Mo
    radius = Mo * min(0.5, math.sin(pn.delta / 3) if pn.delta < math.pi else 0.5)
    J = 64
    phi = 2 * np.pi * np.arange(J) / J
    pts = Mo + radius * np.exp(1j * phi)
    Gc = _inner_sum(pn, s, pts, N, EMK, u_in, w_in)
    c = np.fft.fft(Gc) / J / radius ** np.arange(J)
    bc = _bern_coeffs(EMK)
    total += -np.sum(c[1:2 * EMK:2] * bc)
    return complex(total)


__all__ = [
    "NearPoleError",
    "ContinuationDomainError",
    "ZetaEvaluator",
    "auto_depth",
    "zeta_direct",
    "zeta_mb",
    "zeta_local",
]
