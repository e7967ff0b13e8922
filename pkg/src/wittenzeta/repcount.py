"""Counts r(n) of n-dimensional representations for the rank-two Lie algebras.

The generating function is prod_{m,n >= 1} (1 - q^{dim(m,n)})^{-1} with the Weyl
dimension formula for A2, B2 or G2.  Counts are exact Python integers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gamma as _gamma

from .constants import zeta_c

# dim(m, n) = prod of linear forms / denominator
_SYSTEMS = {
    "A2": (((1, 0), (0, 1), (1, 1)), 2),
    "B2": (((1, 0), (0, 1), (1, 1), (1, 2)), 6),
    "G2": (((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)), 120),
}


class IntegralityError(ArithmeticError):
    pass


def weyl_dim(system: str, m: int, n: int) -> int:
    forms, den = _SYSTEMS[system]
    num = math.prod(a * m + b * n for a, b in forms)
    q, r = divmod(num, den)
    if r:
        raise IntegralityError(f"{system} dimension at ({m},{n}) is {num}/{den}")
    return q


@dataclass(frozen=True)
class DimMultiset:
    system: str
    mult: dict[int, int]
    cutoff: int


def enum_dims(system: str, N: int) -> DimMultiset:
    """All Weyl dimensions <= N with multiplicity."""
    if system not in _SYSTEMS:
        raise ValueError(f"unknown root system {system}")
    if N < 1:
        raise ValueError("N must be >= 1")
    mult: Counter = Counter()
    n = 1
    # dim is increasing in m and in n, so stop once dim(1, n) > N
    while weyl_dim(system, 1, n) <= N:
        m = 1
        while True:
            v = weyl_dim(system, m, n)
            if v > N:
                break
            mult[v] += 1
            m += 1
        n += 1
    return DimMultiset(system, dict(sorted(mult.items())), N)


@dataclass(frozen=True)
class RepCountTable:
    system: str
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    @property
    def N(self) -> int:
        return len(self.counts) - 1


def euler_expand(dims: DimMultiset, N: int | None = None) -> RepCountTable:
    """Coefficients of prod_v (1 - q^v)^{-mu(v)} to order N."""
    N = dims.cutoff if N is None else N
    if N > dims.cutoff:
        raise ValueError("dimension list is cut off below N")
    r = np.zeros(N + 1, dtype=object)
    r[:] = 0
    r[0] = 1
    for v, mu in dims.mult.items():
        if v > N:
            continue
        rows = -(-(N + 1) // v)
        for _ in range(mu):
            # dividing by 1 - q^v is a running sum along residue classes mod v
            pad = np.zeros(rows * v, dtype=object)
            pad[:] = 0
            pad[: N + 1] = r
            r = np.cumsum(pad.reshape(rows, v), axis=0).ravel()[: N + 1]
    return RepCountTable(dims.system, tuple(int(x) for x in r))


def naive_counts(system: str, N: int) -> RepCountTable:
    """Same coefficients by multiplying truncated geometric series one by one."""
    out = [1] + [0] * N
    dims = enum_dims(system, N)
    for v, mu in dims.mult.items():
        for _ in range(mu):
            geo = [1 if k % v == 0 else 0 for k in range(N + 1)]
            new = [0] * (N + 1)
            for i, a in enumerate(out):
                if a:
                    for j in range(0, N + 1 - i, v):
                        new[i + j] += a * geo[j]
            out = new
    return RepCountTable(system, tuple(out))


def rep_counts(system: str, N: int) -> RepCountTable:
    return euler_expand(enum_dims(system, N), N)


# ---------------------------------------------------------------------------
# G2 asymptotics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class G2Constants:
    """Constants of the r_G2 asymptotic.

    ``G3`` is negative: it is the second-order saddle-point correction
    -(9 B^2 / (200 A)) (3/A)^{1/20}, where A t^{-1/3} + B t^{-1/5} are the
    leading terms of log prod (1 - e^{-v t})^{-1}.  ``G3_printed`` is the
    same magnitude with a positive sign, as the formula is usually quoted;
    with that sign r(n)/asymptotic(n) drifts away from 1.
    """

    C3: float
    G1: float
    G2: float
    G3: float
    G3_printed: float


def _zeta_real(x: float) -> float:
    return zeta_c(x).re


@lru_cache(maxsize=None)
def g2_constants() -> G2Constants:
    pi = math.pi
    z43, z15, z65 = _zeta_real(4 / 3), _zeta_real(1 / 5), _zeta_real(6 / 5)
    g13, g15 = float(_gamma(1 / 3)), float(_gamma(1 / 5))
    c = 1 + 3 ** 0.4
    C3 = 2 ** (79 / 48) * 3 ** (9 / 32) * 5 ** (7 / 16) * pi ** (31 / 16) * z43 ** (1 / 16) * g13 ** 0.25
    G1 = 5 ** 0.25 * g13**3 / 3 ** (13 / 8) * (2 * z43 / pi) ** 0.75
    G2 = (2 ** (13 / 20) * 3 ** (1 / 8) * c * pi ** (3 / 20) * z15 * z65 * g15) / (
        5 ** (17 / 20) * z43 ** (3 / 20) * g13 ** (3 / 5))
    G3 = (3 ** (23 / 8) * c**2 * z15**2 * z65**2 * g15**2) / (
        2 ** (9 / 20) * 5 ** (79 / 20) * g13 ** (21 / 5)) * (pi / z43) ** (21 / 20)
    return G2Constants(C3, G1, G2, -G3, G3)


def g1_by_logs() -> float:
    """G1 evaluated as the exponential of a sum of logarithms."""
    lg = math.lgamma(1 / 3)
    s = 0.25 * math.log(5) + 3 * lg - 13 / 8 * math.log(3) + 0.75 * (
        math.log(2) + math.log(_zeta_real(4 / 3)) - math.log(math.pi))
    return math.exp(s)


def log_g2_asymptotic(n: float, printed_sign: bool = False) -> float:
    k = g2_constants()
    g3 = k.G3_printed if printed_sign else k.G3
    return math.log(k.C3) - 9 / 16 * math.log(n) + k.G1 * n**0.25 + k.G2 * n**0.15 + g3 * n**0.05


def g2_asymptotic(n: float, printed_sign: bool = False) -> float:
    """C3 n^{-9/16} exp(G1 n^{1/4} + G2 n^{3/20} + G3 n^{1/20})."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.exp(log_g2_asymptotic(n, printed_sign))


def saddle_log_count(n: float, A: float, B: float, L0: float, L1: float) -> float:
    """log r(n) from the numerically solved saddle point of
    n t + A t^{-1/3} + B t^{-1/5} - L0 log t + L1 (no expansion in n).

    A and B are Gamma(rho) zeta(rho + 1) Res_{s=rho} L(s) at rho = 1/3, 1/5 for
    the Dirichlet series L(s) = sum mu(v) v^{-s}; L0 = L(0), L1 = L'(0).
    """
    from scipy.optimize import brentq

    def dphi(t):
        return n - A / 3 * t ** (-4 / 3) - B / 5 * t ** (-6 / 5) - L0 / t

    t = brentq(dphi, 1e-14, 1e3)
    phi = n * t + A * t ** (-1 / 3) + B * t ** (-1 / 5) - L0 * math.log(t) + L1
    d2 = 4 / 9 * A * t ** (-7 / 3) + 6 / 25 * B * t ** (-11 / 5) + L0 / t**2
    return phi - 0.5 * math.log(2 * math.pi * d2)


@dataclass(frozen=True)
class SaddleData:
    """Ingredients of log prod (1 - e^{-v t})^{-1} ~ A t^{-1/3} + B t^{-1/5} - L0 log t + L1
    for G2, with L(s) = sum mu(v) v^{-s} = 120^s omega_G(s)."""

    A: float
    B: float
    L0: float
    L1: float

    def constants(self) -> G2Constants:
        """Constants of the expanded saddle point, derived without the closed forms."""
        A, B = self.A, self.B
        G1 = 4 * (A / 3) ** 0.75
        G2 = B * (3 / A) ** 0.15
        G3 = -9 * B**2 / (200 * A) * (3 / A) ** 0.05
        logC = self.L1 - 0.5 * math.log(8 * math.pi * A / 9) + 9 / 16 * math.log(A / 3)
        return G2Constants(math.exp(logC), G1, G2, G3, float("nan"))

    def log_count(self, n: float) -> float:
        return saddle_log_count(n, self.A, self.B, self.L0, self.L1)


@lru_cache(maxsize=None)
def g2_saddle_data() -> SaddleData:
    """Saddle ingredients from the residues of omega_G at 1/3 and 1/5 and from omega_G(0), omega_G'(0)."""
    from .constants import const_eval
    from .dzero import dzero
    from .specials import F_G, abscissa_record, fractional_record, zeta_at_neg_int

    R3 = abscissa_record(F_G).residue_value.re
    R5 = fractional_record(F_G, 0).residue_value.re
    L0 = float(zeta_at_neg_int(F_G, 0))
    L1 = const_eval(dzero(F_G)).re + L0 * math.log(120)
    A = float(_gamma(1 / 3)) * _zeta_real(4 / 3) * 120 ** (1 / 3) * R3
    B = float(_gamma(1 / 5)) * _zeta_real(6 / 5) * 120 ** (1 / 5) * R5
    return SaddleData(A, B, L0, L1)


def sample_points(N: int) -> list[int]:
    """Decades and half-decades from 10^3 up to N."""
    pts = []
    e = 3.0
    while round(10**e) <= N:
        pts.append(round(10**e))
        e += 0.5
    return pts


def compare_asymptotic(N: int, table: RepCountTable | None = None) -> dict:
    """rho(n) = r(n)/asymptotic(n) and lambda(n) = log r(n)/(G1 n^{1/4}) with trend checks."""
    if N < 1000:
        raise ValueError("N must be at least 1000")
    if table is None:
        table = rep_counts("G2", N)
    G1 = g2_constants().G1
    rows = []
    for n in sample_points(N):
        lr = math.log(table[n])
        log_rho = lr - log_g2_asymptotic(n)
        lam = lr / (G1 * n**0.25)
        rows.append({"n": n, "log_rho": log_rho, "lambda": lam,
                     "log_rho_printed_sign": lr - log_g2_asymptotic(n, printed_sign=True)})
    rho_ok = all(abs(b["log_rho"]) < abs(a["log_rho"]) for a, b in zip(rows, rows[1:]))
    lam_ok = all(abs(b["lambda"] - 1) < abs(a["lambda"] - 1) for a, b in zip(rows, rows[1:]))
    return {"system": "G2", "N": N, "rows": rows, "log_rho_decreasing": rho_ok,
            "lambda_trend": lam_ok, "ok": rho_ok and lam_ok and len(rows) >= 2}


def exponent_probe(table: RepCountTable, lo: int = 1000, hi: int | None = None, points: int = 50) -> float:
    """Least-squares slope of log log r(n) against log n on [lo, hi]."""
    hi = table.N if hi is None else hi
    ns = np.unique(np.round(np.geomspace(lo, hi, points)).astype(int))
    x = np.log(ns.astype(float))
    y = np.array([math.log(math.log(table[int(n)])) for n in ns])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
