"""Exact zeta_f'(0) for polynomials whose roots are all rational.

With M = 1 the shifted Mellin-Barnes formula is valid around s = 0.  Its line
integral carries a factor 1/Gamma(s), so it contributes
``sum_i I(alpha_i)`` to the derivative, where

    I(alpha) = (1/2 pi i) int_{Re z = -3/2} Gamma(z) zeta(z) alpha^{-z} Gamma(-z) zeta(-z) dz.

The three front terms are expanded with :class:`ConstLaurent` arithmetic and
their s-coefficient is the remaining part ``A_f``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .constants import EPS, ComplexVal, ConstExpr, ConstLaurent, const_eval, zeta_arr
from .kernel import K_diag_expansion
from .polycore import PositivePoly


class IrrationalRootError(ValueError):
    pass


def _check_coprime(p: int, q: int) -> None:
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise ValueError(f"p={p}, q={q} must be coprime positive integers")


def s_qp(q: int, p: int, j: int) -> Fraction:
    """-(q-1)/2 + i, where 0 <= i < q solves i p + j = 0 (mod q)."""
    _check_coprime(p, q)
    if not 1 <= j <= q:
        raise ValueError("j must lie in 1..q")
    i = (-j * pow(p, -1, q)) % q if q > 1 else 0
    return Fraction(-(q - 1), 2) + i


def r_q(q: int, p: int) -> Fraction:
    """(1/q) sum_{i=1}^{q} i s_{q,p}(i).

    Equals the root-of-unity sum over mu^q = 1, mu != 1 of
    mu / ((mu - 1)(mu^p - 1)); the i = q term is needed for that.
    """
    return sum((i * s_qp(q, p, i) for i in range(1, q + 1)), Fraction(0)) / q


def c0pq(p: int, q: int) -> ConstExpr:
    """Constant term of q^{-s} I(s, p/q) at s = 0."""
    _check_coprime(p, q)
    return ConstExpr.rational(Fraction(1, 4) + (Fraction(p, q) + Fraction(q, p)) / 12)


def c1pq(p: int, q: int) -> ConstExpr:
    """s-coefficient of q^{-s} I(s, p/q) at s = 0."""
    _check_coprime(p, q)
    out = ConstExpr.zetap_m1() * Fraction(1, p * q)
    out = out - ConstExpr.zetap_0() * Fraction(p + q, 2 * p * q)
    if q > 1:
        out = out + ConstExpr.log(q) * (r_q(q, p) / q)
    if p > 1:
        out = out + ConstExpr.log(p) * (r_q(p, q) / p)
    for j in range(1, q):
        out = out + ConstExpr.loggamma(Fraction(j, q)) * (s_qp(q, p, j) / q)
    for j in range(1, p):
        out = out + ConstExpr.loggamma(Fraction(j, p)) * (s_qp(p, q, j) / p)
    return out


@dataclass(frozen=True)
class IAlphaResult:
    p: int
    q: int
    value: ConstExpr
    c0pq: ConstExpr
    c1pq: ConstExpr
    numeric: ComplexVal


def I_alpha(p: int, q: int) -> IAlphaResult:
    """I(p/q) as an exact constant expression."""
    _check_coprime(p, q)
    alpha = Fraction(p, q)
    c0, c1 = c0pq(p, q), c1pq(p, q)
    # s-coefficient of the residues picked up when the line moves to Re z = -3/2
    shift = (ConstExpr.euler_gamma() * alpha**2 + ConstExpr.log_2pi() * (3 * alpha)
             + 1 - ConstExpr.zetap_m1() * 12) / (12 * alpha)
    value = c0 * ConstExpr.log(q) + c1 - shift
    return IAlphaResult(p, q, value, c0, c1, const_eval(value))


def I_alpha_numeric_oracle(p: int, q: int, step: float = 1 / 32, T: float = 40.0) -> ComplexVal:
    """I(p/q) by the trapezoid rule on the line Re z = -3/2.

    The integrand is analytic in a strip around the line and decays like
    exp(-pi |t|), so the trapezoid rule converges geometrically in 1/step.
    """
    _check_coprime(p, q)
    alpha = p / q

    def integral(h: float) -> complex:
        t = np.arange(-T, T + h / 2, h)
        z = -1.5 + 1j * t
        z1, _ = zeta_arr(z)
        z2, _ = zeta_arr(-z)
        # Gamma(z) Gamma(-z) = -pi / (z sin(pi z))
        gg = -np.pi / (z * np.sin(np.pi * z))
        vals = gg * z1 * z2 * np.exp(-z * math.log(alpha))
        return complex(np.sum(vals) * h / (2 * np.pi))

    fine = integral(step)
    coarse = integral(2 * step)
    return ComplexVal.of(fine.real, abs(fine - coarse) + 64 * EPS * abs(fine))


# ---------------------------------------------------------------------------
# Laurent expansions at s = 0 of the factors in the front terms
# ---------------------------------------------------------------------------

def _g() -> ConstExpr:
    return ConstExpr.euler_gamma()


def _inv_gamma() -> ConstLaurent:
    # 1/Gamma(s) = s + gamma s^2 + O(s^3)
    return ConstLaurent({1: 1, 2: _g()}, 2)


def _gamma_one(eps: Fraction) -> ConstLaurent:
    # Gamma(1 + eps s) = 1 - gamma eps s + O(s^2)
    return ConstLaurent({0: 1, 1: _g() * (-eps)}, 1)


def _gamma_minus_one(eps: Fraction) -> ConstLaurent:
    # Gamma(-1 + x) = -1/x + (gamma - 1) + O(x)
    return ConstLaurent({-1: Fraction(-1) / eps, 0: _g() - 1}, 0)


def _zeta_at(a: int, eps: Fraction) -> ConstLaurent:
    """zeta(a + eps s) for a in {-1, 0, 1}."""
    if a == 1:
        return ConstLaurent({-1: 1 / eps, 0: _g()}, 0)
    if a == 0:
        return ConstLaurent({0: Fraction(-1, 2), 1: ConstExpr.zetap_0() * eps}, 1)
    if a == -1:
        return ConstLaurent({0: Fraction(-1, 12), 1: ConstExpr.zetap_m1() * eps}, 1)
    raise ValueError("only a in {-1, 0, 1} are needed")


def front_terms(f: PositivePoly) -> ConstLaurent:
    """Boundary term plus the two residue terms of the M = 1 formula, to O(s^2)."""
    if f.roots is None:
        raise IrrationalRootError("zeta_f'(0) in closed form needs rational roots")
    d = f.degree
    c0, c1 = f.coeffs[0], f.coeffs[1]
    K0, K1 = K_diag_expansion(f)
    kern = ConstLaurent({0: K0, 1: K1}, 1)
    # Gamma(1-s) Gamma((d+1)s-1) / Gamma(s) * zeta((d+2)s-1) * K_f(s, 1-s)
    boundary = _inv_gamma() * _gamma_one(Fraction(-1)) * _gamma_minus_one(Fraction(d + 1)) \
        * _zeta_at(-1, Fraction(d + 2)) * kern
    c0_pow = ConstLaurent({0: 1, 1: -ConstExpr.log(c0)}, 1)
    # zeta(s) zeta((d+1)s) c0^{-s}
    res0 = _zeta_at(0, Fraction(1)) * _zeta_at(0, Fraction(d + 1)) * c0_pow
    # zeta(s-1) zeta((d+1)s+1) * (-s c0^{-s-1} c1)
    lin = ConstLaurent({1: -c1 / c0, 2: ConstExpr.log(c0) * (c1 / c0)}, 2)
    res1 = _zeta_at(-1, Fraction(1)) * _zeta_at(1, Fraction(d + 1)) * lin
    return boundary + res0 + res1


def A_f(f: PositivePoly) -> ConstExpr:
    """s-coefficient of the front terms."""
    return front_terms(f)[1]


def dzero(f: PositivePoly) -> ConstExpr:
    """zeta_f'(0) = A_f + sum_i I(alpha_i) in canonical form."""
    out = A_f(f)
    for al in f.roots:
        out = out + I_alpha(al.numerator, al.denominator).value
    return out
