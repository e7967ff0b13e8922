"""Arbitrary-precision evaluation of the split representation of F_f(a, z).

The double-precision routine in :mod:`kernel` loses roughly
log10((rho_max / rho_min)^M) digits when z is deep in the left half-plane,
because the removed Taylor part of f^{-a} is large compared with F itself.
This module runs the same representation with mpmath numbers at a working
precision chosen to absorb that loss.  It is used only when the
double-precision error bound is too loose.
"""

from __future__ import annotations

import math

import mpmath as mp

from .constants import ComplexVal
from .polycore import PositivePoly, reverse_poly


def _alphas(f: PositivePoly) -> list:
    """The alpha_i in f = c0 prod(1 + alpha_i x)."""
    if f.roots is not None:
        return [mp.mpf(a.numerator) / a.denominator for a in f.roots]
    coeffs = [mp.mpf(c.numerator) / c.denominator for c in reversed(f.coeffs)]
    return [-1 / b for b in mp.polyroots(coeffs, maxsteps=200, extraprec=2 * mp.mp.prec)]


class _PolyMP:
    def __init__(self, f: PositivePoly):
        self.d = f.degree
        self.coeffs = [mp.mpf(c.numerator) / c.denominator for c in f.coeffs]
        self.alphas = _alphas(f)
        self.log_c0 = mp.log(self.coeffs[0])
        rho = [abs(1 / a) for a in self.alphas]
        self.rho_min, self.rho_max = min(rho), max(rho)

    def log_f(self, x):
        return self.log_c0 + mp.fsum(mp.log(1 + a * x) for a in self.alphas)

    def power_coeffs(self, a, r, min_terms: int):
        # Taylor coefficients of f^{-a} until negligible on |x| = r
        c, d = self.coeffs, self.d
        h = [mp.mpc(1)]
        eps = mp.mpf(10) ** (-mp.mp.dps - 5)
        peak = mp.mpf(1)
        small = 0
        n = 0
        while n < 20000:
            n += 1
            acc = mp.fsum(c[j] * ((n - j) + a * j) * h[n - j] for j in range(1, min(d, n) + 1))
            h.append(-acc / (n * c[0]))
            size = abs(h[-1]) * r**n
            peak = max(peak, size)
            if n > 2 * abs(a) + 10 and n > min_terms and size < eps * peak:
                small += 1
                if small >= 4:
                    break
            else:
                small = 0
        scale = mp.exp(-a * self.log_c0)
        return [scale * x for x in h]


def F_split_mp(f: PositivePoly, a, z, theta: float, subtract: int, dps: int):
    """F_f(a, z) by the subtracted split representation at ``dps`` digits."""
    with mp.workdps(dps):
        a, z = mp.mpc(a), mp.mpc(z)
        pf = _PolyMP(f)
        pg = _PolyMP(reverse_poly(f))
        d = pf.d
        r = mp.mpf("0.9") * pf.rho_min if subtract >= 0 else mp.mpf("0.5") * pf.rho_min
        R = 2 * pf.rho_max
        th = mp.mpf(theta)
        log_w0 = mp.log(r) + 1j * th
        log_W = mp.log(R) + 1j * th
        ak = pf.power_coeffs(a, r, subtract + 2)
        lo = subtract + 1
        head = mp.exp(z * log_w0) * mp.fsum(
            ak[k] * mp.exp(k * log_w0) / (k + z) for k in range(lo, len(ak)))
        poly = mp.exp(z * log_W) * mp.fsum(
            ak[k] * mp.exp(k * log_W) / (k + z) for k in range(lo)) if lo > 0 else mp.mpc(0)
        # tail from the expansion of g^{-a} at 0, branch of log f matched at W
        da = d * a
        W = mp.exp(log_W)
        bk = pg.power_coeffs(a, 1 / R, 0)
        lf = pf.log_f(W)
        lg = d * log_W + pg.log_f(1 / W)
        wind = int(mp.nint(mp.im(lf - lg) / (2 * mp.pi)))
        branch = mp.exp(-2j * mp.pi * wind * a)
        tail = branch * mp.exp((z - da) * log_W) * mp.fsum(
            bk[k] * mp.exp(-k * log_W) / (da + k - z) for k in range(len(bk)))
        poly_rev = ak[:lo]

        def mid(u):
            lx = u + 1j * th
            x = mp.exp(lx)
            fa = mp.exp(-a * pf.log_f(x))
            if lo > 0:
                fa -= mp.polyval(poly_rev[::-1], x)
            return fa * mp.exp(z * lx)

        m = mp.quad(mid, [mp.log(r), mp.log(R)])
        return head + poly + m + tail


def K_split_mp(f: PositivePoly, a, s, theta: float, subtract: int, oriented_rev: bool,
               dps: int) -> ComplexVal:
    """K_f(a, s) in high precision; the error is the change under +15 digits.

    With ``oriented_rev`` the integral is taken as F_g(a, ad - s).
    """
    a, s = complex(a), complex(s)
    d = f.degree
    ff = reverse_poly(f) if oriented_rev else f
    z = d * a - s if oriented_rev else s
    vals = []
    for p in (dps, dps + 15):
        F = F_split_mp(ff, a, z, theta, subtract, p)
        with mp.workdps(p):
            aa, ss = mp.mpc(a), mp.mpc(s)
            vals.append(mp.gamma(aa) * mp.rgamma(ss) * mp.rgamma(d * aa - ss) * F)
    v = complex(vals[1])
    err = float(abs(vals[1] - vals[0])) + 4 * 2.0**-52 * abs(v)
    return ComplexVal.of(v, err)


def digits_needed(value: complex, err: float, target: float = 1e-15) -> int:
    """Working precision that brings a double-precision error ``err`` down to
    ``target`` relative, assuming the loss is pure cancellation."""
    rel = err / max(abs(value), 1e-300)
    lost = max(0.0, math.log10(max(rel, 1e-16)) + 16)
    return int(min(200, 25 + lost + max(0.0, -math.log10(target) - 15)))


def taylor_coeffs(f: PositivePoly, a, n: int, dps: int = 40) -> list[complex]:
    """[f^{-a}][x^k] for k <= n, computed at ``dps`` digits and rounded.

    Near a = -m the coefficients beyond degree d m are O(a + m) and come out
    of the recurrence by cancellation, so double precision is not enough.
    """
    with mp.workdps(dps):
        p = _PolyMP(f)
        c, d = p.coeffs, p.d
        a = mp.mpc(a)
        h = [mp.mpc(1)]
        for k in range(1, n + 1):
            acc = mp.fsum(c[j] * ((k - j) + a * j) * h[k - j] for j in range(1, min(d, k) + 1))
            h.append(-acc / (k * c[0]))
        scale = mp.exp(-a * p.log_c0)
        return [complex(scale * x) for x in h]
