"""The Mellin-type integral F_f(a,s) and the entire kernel K_f(a,s).

    F_f(a, s) = int_0^inf f(x)^(-a) x^(s-1) dx
    K_f(a, s) = Gamma(a) / (Gamma(s) Gamma(d a - s)) * F_f(a, s)

Several independent routes are provided: direct quadrature on the strip of
convergence, a Hankel contour that continues F in s, a split representation
(power series at 0 and at infinity glued by a finite ray integral) that
continues F in both variables, and exact closed forms at lattice points.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .constants import EPS, EULER_GAMMA, ComplexVal, ConstExpr, loggamma_arr, rgamma_arr
from .polycore import PositivePoly, poly_mul, reverse_poly, series_pow, series_pow_log
from .quadrature import QuadratureError, gauss_legendre_adaptive, tanh_sinh_unit


class KernelDomainError(ValueError):
    pass


@dataclass(frozen=True)
class KernelConfig:
    """Contour and accuracy settings; ``None`` picks the default geometry."""

    radius: float | None = None
    angle: float | None = None
    abs_err: float = 1e-10


DEFAULT_CONFIG = KernelConfig()


def _is_int(z: complex) -> bool:
    return z.imag == 0 and z.real == round(z.real)


class PolyNumeric:
    """Floating-point data attached to a PositivePoly (roots, sector, logs)."""

    def __init__(self, f: PositivePoly):
        self.f = f
        self.d = f.degree
        self.coeffs = np.array([float(c) for c in f.coeffs])
        self.c0 = float(f.c0)
        self.cd = float(f.cd)
        if f.roots is not None:
            self.alphas = np.array([float(a) for a in f.roots], dtype=complex)
        else:
            betas = np.roots(self.coeffs[::-1])
            self.alphas = -1.0 / betas
        betas = -1.0 / self.alphas
        self.rho = np.abs(betas)
        # half-opening of the root-free sector around the positive axis
        self.delta = float(np.min(np.abs(np.angle(betas))))

    @cached_property
    def reversed(self) -> "PolyNumeric":
        return poly_numeric(reverse_poly(self.f))

    @property
    def rho_min(self) -> float:
        return float(np.min(self.rho))

    @property
    def rho_max(self) -> float:
        return float(np.max(self.rho))

    def default_angle(self) -> float:
        if self.delta > math.pi / 4:
            return min(self.delta - math.pi / 4, 3 * math.pi / 4)
        return self.delta / 2

    def log_f(self, x):
        """log f(x) = log c0 + sum log(1 + alpha_i x), principal branches."""
        x = np.asarray(x, dtype=complex)
        out = np.full(x.shape, math.log(self.c0), dtype=complex)
        for a in self.alphas:
            out = out + np.log1p(a * x)
        return out

    @lru_cache(maxsize=512)
    def power_coeffs(self, a: complex, kappa: float = 0.5, min_terms: int = 0,
                     tol: float = 1e-18, kmax: int = 6000) -> np.ndarray:
        """Taylor coefficients of f(x)^(-a) (principal branch) until they are
        negligible on the circle |x| = kappa * rho_min."""
        c = self.coeffs
        d = self.d
        r = kappa * self.rho_min
        h = [1.0 + 0j]
        small = 0
        n = 0
        while n < kmax:
            n += 1
            acc = 0j
            for j in range(1, min(d, n) + 1):
                acc += c[j] * ((n - j) + a * j) * h[n - j]
            h.append(-acc / (n * c[0]))
            if n > 2 * abs(a) + 10 and n > min_terms and abs(h[-1]) * r**n < tol:
                small += 1
                if small >= 4:
                    break
            else:
                small = 0
        return np.exp(-a * math.log(self.c0)) * np.array(h)


@lru_cache(maxsize=64)
def poly_numeric(f: PositivePoly) -> PolyNumeric:
    return PolyNumeric(f)


# ---------------------------------------------------------------------------
# F by direct quadrature
# ---------------------------------------------------------------------------

def _unit_piece(pn: PolyNumeric, a: complex, c: complex, tol: float):
    # int_0^1 f(x)^(-a) x^(c-1) dx
    def fun(x):
        return np.exp(-a * pn.log_f(x) + (c - 1) * np.log(x))

    return tanh_sinh_unit(fun, tol)


def F_direct(f: PositivePoly, a, s, config: KernelConfig = DEFAULT_CONFIG) -> ComplexVal:
    """F_f(a,s) by quadrature on (0,1] and, via x -> 1/x, on [1,inf)."""
    a, s = complex(a), complex(s)
    d = f.degree
    if not (d * a.real > s.real > 0):
        raise KernelDomainError("direct integral needs d Re(a) > Re(s) > 0")
    pn = poly_numeric(f)
    tol = config.abs_err / 4
    v1, e1 = _unit_piece(pn, a, s, tol)
    v2, e2 = _unit_piece(pn.reversed, a, d * a - s, tol)
    val = complex(v1 + v2)
    err = float(e1 + e2) + 64 * EPS * abs(val)
    if err > max(config.abs_err, 1e-6 * abs(val)) * 100:
        raise QuadratureError(f"direct quadrature did not converge (err {err:.2e})")
    return ComplexVal.of(val, err)


# ---------------------------------------------------------------------------
# F on the Hankel contour
# ---------------------------------------------------------------------------

def F_hankel(f: PositivePoly, a, s, config: KernelConfig = DEFAULT_CONFIG) -> ComplexVal:
    """F_f(a,s) from the keyhole contour: in along arg x = delta', around the
    circle |x| = r, out along arg x = 2 pi - delta'; divided by e^{2 pi i s} - 1."""
    a, s = complex(a), complex(s)
    d = f.degree
    if _is_int(s):
        raise KernelDomainError("Hankel representation is singular at integer s")
    if not d * a.real > s.real:
        raise KernelDomainError("Hankel representation needs d Re(a) > Re(s)")
    pn = poly_numeric(f)
    r = config.radius if config.radius is not None else min(0.5, pn.rho_min / 2)
    dp = config.angle if config.angle is not None else pn.default_angle()
    tol = config.abs_err / 8

    def ray(phase_arg: float, geo_arg: float):
        # int_r^inf f(rho e^{i geo})^{-a} rho^{s-1} drho, times e^{i phase s};
        # rho = r / x maps the ray onto (0, 1]
        def fun(x):
            rho = r / x
            pts = rho * cmath.exp(1j * geo_arg)
            return np.exp(-a * pn.log_f(pts) + s * np.log(rho)) / x

        v, e = tanh_sinh_unit(fun, tol)
        return complex(v) * cmath.exp(1j * phase_arg * s), float(e) * abs(cmath.exp(1j * phase_arg * s))

    v_in, e_in = ray(dp, dp)
    v_out, e_out = ray(2 * math.pi - dp, -dp)

    def arc(phi):
        pts = r * np.exp(1j * phi)
        return np.exp(-a * pn.log_f(pts) + s * (math.log(r) + 1j * phi)) * 1j

    v_arc, e_arc = gauss_legendre_adaptive(arc, dp, 2 * math.pi - dp, tol)
    total = -v_in + complex(v_arc) + v_out
    mag = abs(v_in) + abs(complex(v_arc)) + abs(v_out)
    denom = cmath.exp(2j * math.pi * s) - 1
    val = total / denom
    err = (e_in + e_out + float(np.max(e_arc)) + 64 * EPS * mag) / abs(denom)
    return ComplexVal.of(val, err)


# ---------------------------------------------------------------------------
# split representation: valid for all (a, s) off the poles of F
# ---------------------------------------------------------------------------

def F_split_many(f: PositivePoly, a, z, theta: float | None = None, tol: float = 1e-14,
                 subtract: int = -1):
    """Vectorised F_f(a, z) for an array of z at fixed a.

    The ray ``arg x = theta`` (|theta| < delta) is cut at |x| = r and |x| = R;
    the two ends are integrated termwise from the expansions of f^{-a} at 0
    and at infinity, which continues F meromorphically.

    With ``subtract = M >= 0`` the Taylor polynomial P_M of f^{-a} is removed
    from the middle integrand and its pieces are integrated from R instead of
    from r.  The result is the same function, but the evaluation stays well
    conditioned for Re z near -M - 1/2, where the plain split cancels badly.
    Returns ``(values, errors)``.
    """
    a = complex(a)
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    pn = poly_numeric(f)
    d = pn.d
    theta = 0.0 if theta is None else float(theta)
    if abs(theta) >= pn.delta:
        raise KernelDomainError("ray angle must stay inside the root-free sector")
    kappa = 0.5 if subtract < 0 else 0.9
    r = kappa * pn.rho_min
    R = 2 * pn.rho_max
    eith = cmath.exp(1j * theta)
    log_w0 = math.log(r) + 1j * theta
    log_W = math.log(R) + 1j * theta

    ak = pn.power_coeffs(a, kappa, subtract + 2)
    k = np.arange(len(ak))
    if np.any((z.imag == 0) & np.isin(-z.real, k)):
        raise KernelDomainError("F has a pole at z = -k")
    lo = subtract + 1

    # head: sum_{k >= lo} a_k w0^{k+z} / (k+z)
    w0k = ak[lo:] * np.exp(k[lo:] * log_w0)
    head_terms = w0k[None, :] / (k[lo:][None, :] + z[:, None])
    zw0 = np.exp(z * log_w0)
    head = zw0 * head_terms.sum(axis=1)
    head_mag = np.abs(zw0) * np.abs(head_terms).sum(axis=1)

    # subtracted polynomial integrated from W to infinity: sum_{k < lo} a_k W^{k+z}/(k+z)
    if lo > 0:
        Wk = ak[:lo] * np.exp(k[:lo] * log_W)
        poly_terms = Wk[None, :] / (k[:lo][None, :] + z[:, None])
        zW = np.exp(z * log_W)
        poly_part = zW * poly_terms.sum(axis=1)
        poly_mag = np.abs(zW) * np.abs(poly_terms).sum(axis=1)
    else:
        poly_part = np.zeros_like(z)
        poly_mag = np.zeros(z.shape)

    # tail through g(y) = y^d f(1/y), with the branch of log f matched at W
    pg = pn.reversed
    bk = pg.power_coeffs(a)
    kb = np.arange(len(bk))
    da = d * a
    W = R * eith
    lf = complex(pn.log_f(W))
    lg = d * log_W + complex(pg.log_f(1 / W))
    wind = round((lf - lg).imag / (2 * math.pi))
    branch = cmath.exp(-2j * math.pi * wind * a)
    denom = da + kb[None, :] - z[:, None]
    if np.any(denom == 0):
        raise KernelDomainError("F has a pole at z = d a + k")
    tail_terms = (bk * np.exp(-kb * log_W))[None, :] / denom
    tail_pref = branch * np.exp((z - da) * log_W)
    tail = tail_pref * tail_terms.sum(axis=1)
    tail_mag = np.abs(tail_pref) * np.abs(tail_terms).sum(axis=1)

    # middle ray in u = log|x|
    poly = ak[:lo][::-1]

    def mid(u):
        lx = u + 1j * theta
        x = np.exp(lx)
        fa = np.exp(-a * pn.log_f(x))
        if lo > 0:
            fa = fa - np.polyval(poly, x)
        return fa[None, :] * np.exp(z[:, None] * lx[None, :])

    # rounding floor of the middle integral: below it, refinement only chases noise
    u = np.linspace(math.log(r), math.log(R), 64)
    xs = np.exp(u + 1j * theta)
    size = np.abs(np.exp(-a * pn.log_f(xs)))
    if lo > 0:
        size = size + np.polyval(np.abs(poly), np.abs(xs))
    wts = np.exp(np.outer(z.real, u) - np.outer(z.imag, np.full_like(u, theta)))
    floor = (wts * size[None, :]).max(axis=1) * math.log(R / r)
    mid_val, mid_err = gauss_legendre_adaptive(mid, math.log(r), math.log(R),
                                               16 * EPS * floor, n0=48,
                                               nmax=16384, rtol=tol)
    mid_mag = np.abs(mid_val)
    if lo > 0:
        # rounding in f^{-a} - P_M is bounded by eps times the size of P_M's terms
        mid_mag = mid_mag + floor

    vals = head + poly_part + mid_val + tail
    mag = head_mag + poly_mag + tail_mag + mid_mag
    errs = mid_err + 64 * EPS * mag + 1e-17 * (np.abs(head) + np.abs(tail))
    return vals, errs


def split_angles(f: PositivePoly, a, z, subtract: int = -1, grid: int = 48) -> np.ndarray:
    """Ray angle per z for :func:`F_split_many`, chosen among five candidates
    to minimise the largest term met along the ray (the rounding floor)."""
    a = complex(a)
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    pn = poly_numeric(f)
    kappa = 0.5 if subtract < 0 else 0.9
    r, R = kappa * pn.rho_min, 2 * pn.rho_max
    u = np.linspace(math.log(r), math.log(R), grid)
    big = pn.default_angle()
    cands = np.array([-big, -big / 2, 0.0, big / 2, big])
    ak = np.abs(pn.power_coeffs(a, kappa, subtract + 2))
    best = np.full(z.shape, np.inf)
    out = np.zeros(z.shape)
    for th in cands:
        xs = np.exp(u + 1j * th)
        size = np.abs(np.exp(-a * pn.log_f(xs)))
        if subtract >= 0:
            size = size + np.polyval(ak[: subtract + 1][::-1], np.abs(xs))
        logw = np.outer(z.real, u) - np.outer(z.imag, np.full_like(u, th))
        mag = (logw + np.log(size)[None, :]).max(axis=1)
        better = mag < best - 1e-9
        out[better] = th
        best[better] = mag[better]
    return out


def F_split(f: PositivePoly, a, s, theta: float | None = None) -> ComplexVal:
    v, e = F_split_many(f, a, [s], theta)
    return ComplexVal.of(v[0], float(e[0]))


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def K_lattice(f: PositivePoly, m: int, n: int) -> Fraction:
    """Exact K_f(-m, -n) for integers m, n >= 0."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    d = f.degree
    fm = [Fraction(1)]
    for _ in range(m):
        fm = poly_mul(fm, f.coeffs)
    if n <= d * m:
        coef = fm[n] if n < len(fm) else Fraction(0)
        sign = -1 if ((d + 1) * m) % 2 else 1
        return sign * d * Fraction(math.factorial(n) * math.factorial(d * m - n), math.factorial(m)) * coef
    # n > dm: coefficient of -f^m log f; the log c0 part has degree dm < n
    ser, _ = series_pow_log(f, m, n)
    coef = -ser[n]
    sign = -1 if (n + m) % 2 else 1
    return sign * Fraction(math.factorial(n), math.factorial(m) * math.factorial(n - d * m - 1)) * coef


def _K_at_neg_int_s(pn: PolyNumeric, a: complex, n: int) -> complex:
    # K_f(a,-n) = (-1)^n n! Gamma(a)/Gamma(ad+n) [f^{-a}][x^n]
    coef = _coeff_neg_power(pn, a, n)
    ratio = _gamma_ratio(a, pn.d * a + n)
    return (-1) ** n * math.factorial(n) * ratio * coef


def _coeff_neg_power(pn: PolyNumeric, a: complex, n: int) -> complex:
    c = pn.coeffs
    h = [1.0 + 0j]
    for k in range(1, n + 1):
        acc = 0j
        for j in range(1, min(pn.d, k) + 1):
            acc += c[j] * ((k - j) + a * j) * h[k - j]
        h.append(-acc / (k * c[0]))
    return cmath.exp(-a * math.log(pn.c0)) * h[n]


def _gamma_ratio(x: complex, y: complex) -> complex:
    """Gamma(x)/Gamma(y) for x not a pole."""
    if _is_int(y) and y.real <= 0:
        return 0j
    return complex(np.exp(loggamma_arr(x) - loggamma_arr(y)))


def K_diag_expansion(f: PositivePoly) -> tuple[ConstExpr, ConstExpr]:
    """(K_f(0,1), d/ds K_f(s, 1-s) at s = 0) as exact constant expressions."""
    if f.roots is None:
        raise ValueError("diagonal expansion needs rational roots")
    d = f.degree
    ratio = f.coeffs[d - 1] / f.coeffs[d]
    const = ConstExpr.rational(ratio)
    slope = ratio * ((d - 1) * ConstExpr.euler_gamma() - ConstExpr.log(f.cd))
    for al in f.roots:
        slope = slope + ConstExpr.log(al) * ((d + 1) / al)
    return const, slope


# ---------------------------------------------------------------------------
# K dispatch
# ---------------------------------------------------------------------------

_CIRCLE_RADIUS = 0.3
_CIRCLE_POINTS = 24


def _ray_angle(pn: PolyNumeric, a: complex, s: complex) -> float:
    """Rotate the ray towards the decaying side when the phases agree."""
    t1 = s.imag
    t2 = s.imag - pn.d * a.imag
    if t1 * t2 > 0 and max(abs(t1), abs(t2)) > 2:
        return math.copysign(pn.default_angle(), t1)
    return 0.0


def _conditioning(f: PositivePoly, a: complex, s: complex):
    """(use g, z, M, theta) for the split representation of F_f(a, s): the side
    needing the deeper continuation becomes the head and its Taylor part is removed."""
    d = f.degree
    rev = (d * a - s).real < min(s.real, 0.0)
    # F_f(a, s) = F_g(a, ad - s)
    z, ff = (d * a - s, reverse_poly(f)) if rev else (s, f)
    M = math.floor(-z.real) if z.real < -0.5 else -1
    theta = float(split_angles(ff, a, [z], M)[0])
    return rev, ff, z, M, theta


def _F_conditioned(f: PositivePoly, a: complex, s: complex):
    _, ff, z, M, theta = _conditioning(f, a, s)
    return F_split_many(ff, a, [z], theta, subtract=M)


def K_precise(f: PositivePoly, a, s, rel_tol: float = 1e-13) -> ComplexVal:
    """K_eval, redone in arbitrary precision when its error bound exceeds
    ``rel_tol`` relative (deep continuation with well separated root moduli)."""
    from .highprec import K_split_mp, digits_needed

    a, s = complex(a), complex(s)
    k = K_eval(f, a, s)
    if k.abs_err <= rel_tol * abs(k.value) or (k.abs_err < 1e-300):
        return k
    rev, _, _, M, theta = _conditioning(f, a, s)
    hp = K_split_mp(f, a, s, theta, M, rev, digits_needed(k.value, k.abs_err, rel_tol))
    return hp if hp.abs_err < k.abs_err else k


def _K_generic(f: PositivePoly, a: complex, s: complex) -> ComplexVal:
    d = f.degree
    v, e = _F_conditioned(f, a, s)
    pref = complex(np.exp(loggamma_arr(a)) * rgamma_arr(s) * rgamma_arr(d * a - s))
    val = pref * v[0]
    err = abs(pref) * float(e[0]) + 32 * EPS * abs(val) * (1 + abs(a) + abs(s))
    return ComplexVal.of(val, err)


def _K_circle_in_a(f: PositivePoly, a: complex, s: complex, depth: int = 0) -> ComplexVal:
    # mean value over a circle around a (K is entire in a)
    phis = 2 * math.pi * (np.arange(_CIRCLE_POINTS) + 0.5) / _CIRCLE_POINTS
    vals = [K_eval(f, a + _CIRCLE_RADIUS * cmath.exp(1j * p), s, _depth=depth + 1) for p in phis]
    val = sum(v.value for v in vals) / len(vals)
    err = sum(v.abs_err for v in vals) / len(vals) + 8 * EPS * max(abs(v.value) for v in vals)
    return ComplexVal.of(val, err)


def K_eval(f: PositivePoly, a, s, config: KernelConfig = DEFAULT_CONFIG, _depth: int = 0) -> ComplexVal:
    """Entire kernel K_f(a,s): closed forms first, then the functional equation,
    then quadrature of the continued integral."""
    a, s = complex(a), complex(s)
    pn = poly_numeric(f)
    d = pn.d
    a_lattice = _is_int(a) and a.real <= 0
    s_lattice = _is_int(s) and s.real <= 0
    if a_lattice and s_lattice:
        return ComplexVal.of(float(K_lattice(f, int(-a.real), int(-s.real))), 0.0)
    if a_lattice and a.real == 0:
        val = complex(np.sum(np.exp(-s * np.log(pn.alphas))))
        return ComplexVal.of(val, 16 * EPS * float(np.sum(np.abs(np.exp(-s * np.log(pn.alphas))))))
    if s_lattice:
        val = _K_at_neg_int_s(pn, a, int(-s.real))
        return ComplexVal.of(val, 64 * EPS * abs(val) * (1 + abs(a)))
    near_a = a.real < 0.5 and abs(a - round(a.real)) < _CIRCLE_RADIUS and round(a.real) <= 0
    if near_a and _depth == 0:
        return _K_circle_in_a(f, a, s, _depth)
    k = d * a - s
    if _is_int(k) and k.real <= 0:
        # K_f(a,s) = K_g(a, ad - s) with ad - s a non-positive integer
        val = _K_at_neg_int_s(pn.reversed, a, int(-k.real))
        return ComplexVal.of(val, 64 * EPS * abs(val) * (1 + abs(a)))
    return _K_generic(f, a, s)


def K_closed_form_d1(alpha, s) -> complex:
    """For f = 1 + alpha x the kernel is alpha^{-s}."""
    return cmath.exp(-complex(s) * cmath.log(complex(alpha)))


# ---------------------------------------------------------------------------
# hypergeometric oracle for quadratics, and the appendix integral identity
# ---------------------------------------------------------------------------

def _hyp2f1_series(a: complex, b: complex, c: complex, z: complex, tol: float = 1e-16):
    term = 1 + 0j
    total = term
    n = 0
    while True:
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        n += 1
        if abs(term) < tol * max(1.0, abs(total)) and n > 5:
            # geometric tail bound
            ratio = abs(z) * 1.01
            return total, abs(term) * ratio / max(1e-300, 1 - ratio)
        if n > 20000:
            raise QuadratureError("hypergeometric series did not converge")


def hyp2f1(a, b, c, z):
    """Gauss 2F1 by its series, after a Pfaff transform when that shrinks |z|."""
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    w = z / (z - 1) if z != 1 else None
    if abs(z) < 0.75 or w is None or abs(w) >= abs(z):
        if abs(z) >= 1:
            raise QuadratureError("2F1 argument outside the disc of convergence")
        return _hyp2f1_series(a, b, c, z)
    v, e = _hyp2f1_series(a, c - b, c, w)
    pref = (1 - z) ** (-a)
    return pref * v, abs(pref) * e


def K_2f1_oracle(f: PositivePoly, a, s) -> ComplexVal:
    """K for a quadratic with rational roots: Gamma(a)/Gamma(2a) a1^{-s} 2F1(a,s;2a;1-a2/a1)."""
    if f.degree != 2 or f.roots is None:
        raise ValueError("needs a quadratic with rational roots")
    a, s = complex(a), complex(s)
    al1, al2 = (float(x) for x in sorted(f.roots, reverse=True))
    c0 = float(f.c0)
    z = 1 - al2 / al1
    hv, he = hyp2f1(a, s, 2 * a, z)
    pref = complex(np.exp(loggamma_arr(a)) * rgamma_arr(2 * a)) * cmath.exp(-s * math.log(al1) - a * math.log(c0))
    val = pref * hv
    return ComplexVal.of(val, abs(pref) * he + 16 * EPS * abs(val))


def appendix_lemma_check(u) -> tuple[ComplexVal, ComplexVal]:
    """Both sides of
    int_0^inf (x(1+x)(1+2x))^{2u} ((1+3x)(2+3x))^{-2u-2/3} dx
        = 3^{-3u-3/2} Gamma(1/6-u) Gamma(u+1/2) / (2^{2/3} Gamma(2/3)).
    """
    u = complex(u)
    if not -0.5 < u.real < 1 / 6:
        raise KernelDomainError("needs -1/2 < Re(u) < 1/6")
    e1 = 2 * u
    e2 = -2 * u - 2 / 3

    def near0(x):
        return np.exp(e1 * (np.log(x) + np.log1p(x) + np.log1p(2 * x)) + e2 * (np.log1p(3 * x) + np.log(2 + 3 * x)))

    def near_inf(t):
        # x = 1/t, dx = dt/t^2
        lx = -np.log(t)
        body = e1 * (lx + np.log1p(t) + np.log(t + 2) + 2 * lx) + e2 * (np.log(t + 3) + np.log(2 * t + 3) + 2 * lx)
        return np.exp(body - 2 * np.log(t))

    v1, r1 = tanh_sinh_unit(near0, 1e-13)
    v2, r2 = tanh_sinh_unit(near_inf, 1e-13)
    lhs_val = complex(v1 + v2)
    lhs = ComplexVal.of(lhs_val, float(r1 + r2) + 64 * EPS * abs(lhs_val))
    log_rhs = (-3 * u - 1.5) * math.log(3) + loggamma_arr(1 / 6 - u) + loggamma_arr(u + 0.5) \
        - (2 / 3) * math.log(2) - loggamma_arr(2 / 3)
    rhs_val = complex(np.exp(log_rhs))
    rhs = ComplexVal.of(rhs_val, 32 * EPS * abs(rhs_val))
    return lhs, rhs


__all__ = [
    "KernelConfig",
    "KernelDomainError",
    "F_direct",
    "F_hankel",
    "F_split",
    "F_split_many",
    "K_eval",
    "K_lattice",
    "K_diag_expansion",
    "K_2f1_oracle",
    "K_closed_form_d1",
    "appendix_lemma_check",
    "hyp2f1",
    "poly_numeric",
]
