"""Exact Eisenstein q-expansions and the modular lifts of the vanishing identities.

Each identity equivalent to omega(-2n) = 0 is a sum of products of values
zeta(1 - 2k).  Replacing every zeta(1 - 2k) by zeta(1 - 2k) E_{2k}(tau) gives
an identity between q-series.  For A it is a theorem (Romik); for B and G it
is conjectural and only tested here to a finite q-order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .constants import bernoulli, zeta_neg_int
from .specials import F_B, F_G, _log_coeff, _poly_pow


@dataclass(frozen=True)
class QSeries:
    """sum_{n <= Q} a_n q^n with exact rational coefficients and a weight tag."""

    coeffs: tuple[Fraction, ...]
    weight: int

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, Q: int, weight: int) -> "QSeries":
        return cls(tuple(Fraction(0) for _ in range(Q + 1)), weight)

    def __add__(self, other: "QSeries") -> "QSeries":
        if self.weight != other.weight:
            raise ValueError(f"adding weights {self.weight} and {other.weight}")
        Q = min(self.order, other.order)
        return QSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(Q + 1)), self.weight)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            Q = min(self.order, other.order)
            out = [Fraction(0)] * (Q + 1)
            for i, a in enumerate(self.coeffs[: Q + 1]):
                if a:
                    for j in range(Q + 1 - i):
                        out[i + j] += a * other.coeffs[j]
            return QSeries(tuple(out), self.weight + other.weight)
        c = Fraction(other)
        return QSeries(tuple(c * a for a in self.coeffs), self.weight)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def _sigma(k: int, Q: int) -> list[int]:
    """sigma_k(n) for n <= Q (index 0 unused)."""
    s = [0] * (Q + 1)
    for d in range(1, Q + 1):
        p = d**k
        for m in range(d, Q + 1, d):
            s[m] += p
    return s


@lru_cache(maxsize=None)
def eisenstein(k: int, Q: int) -> QSeries:
    """E_k normalised to constant term 1; the zero series for odd k."""
    if k < 3:
        raise ValueError("weight must be at least 3")
    if k % 2:
        return QSeries.zero(Q, k)
    c = -Fraction(2 * k) / bernoulli(k)
    sig = _sigma(k - 1, Q)
    return QSeries((Fraction(1),) + tuple(c * sig[n] for n in range(1, Q + 1)), k)


# ---------------------------------------------------------------------------
# identities as data: coefficient times a product of zeta(1 - k) values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModularIdentity:
    """lhs_coeff * zeta(1 - lhs_k) = sum c * zeta(1 - k1) * zeta(1 - k2)."""

    name: str
    n: int
    lhs_coeff: Fraction
    lhs_k: int
    rhs: tuple[tuple[Fraction, int, int], ...]

    @property
    def weight(self) -> int:
        return self.lhs_k


def identity_terms(case: str, n: int) -> ModularIdentity:
    """The identity equivalent to omega_case(-2n) = 0, in lifted form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if case == "A":
        lhs = Fraction(math.factorial(2 * n), math.factorial(4 * n + 1))
        rhs = tuple((Fraction(1, math.factorial(i) * math.factorial(2 * n - i)), 2 * n + i + 1, 4 * n - i + 1)
                    for i in range(2 * n + 1))
        return ModularIdentity("A", n, lhs, 6 * n + 2, rhs)
    if case == "B":
        f, d, lam = F_B, 2, 1 + Fraction(1, 2 ** (1 + 4 * n))
    elif case == "G":
        f, d, lam = F_G, 4, 1 + Fraction(1, 3 ** (1 + 6 * n))
    else:
        raise ValueError("case must be A, B or G")
    top = 1 + (d + 1) * 2 * n
    lhs = lam * _log_coeff(f, 2 * n, top) / (d + 1)
    fn = _poly_pow(f.coeffs, 2 * n)
    K = 2 * (d + 1) * n  # zeta(i - K) pairs with E_{K - i + 1}
    rhs = tuple((fn[i], 2 * n + i + 1, K - i + 1) for i in range(2 * d * n + 1))
    return ModularIdentity(case, n, lhs, (d + 2) * 2 * n + 2, rhs)


ZetaFn = Callable[[int], Fraction]


def _zeta_1mk(k: int, zeta: ZetaFn) -> Fraction:
    # zeta(1 - k) with k >= 2
    return zeta(k - 1)


@dataclass(frozen=True)
class IdentityCheck:
    case: str
    n: int
    Q: int
    holds: bool
    first_mismatch: int | None
    lhs: tuple[Fraction, ...]
    rhs: tuple[Fraction, ...]
    status: str

    def to_json(self) -> dict:
        return {
            "case": self.case, "n": self.n, "q_order": self.Q, "holds": self.holds,
            "first_mismatch": self.first_mismatch, "status": self.status,
        }


def lifted_sides(ident: ModularIdentity, Q: int, zeta: ZetaFn = zeta_neg_int) -> tuple[QSeries, QSeries]:
    """Both sides of the lifted identity as q-series to order Q."""
    lhs = eisenstein(ident.lhs_k, Q) * (ident.lhs_coeff * _zeta_1mk(ident.lhs_k, zeta))
    rhs = QSeries.zero(Q, ident.weight)
    for c, k1, k2 in ident.rhs:
        if k1 + k2 != ident.weight:
            raise AssertionError(f"weight mismatch: {k1} + {k2} != {ident.weight}")
        if c == 0 or k1 % 2 or k2 % 2:
            continue  # odd weight: both the zeta value and E_k vanish
        term = eisenstein(k1, Q) * eisenstein(k2, Q)
        rhs = rhs + term * (c * _zeta_1mk(k1, zeta) * _zeta_1mk(k2, zeta))
    return lhs, rhs


def scalar_sides(ident: ModularIdentity, zeta: ZetaFn = zeta_neg_int) -> tuple[Fraction, Fraction]:
    """The identity with every E_k replaced by its value at i infinity, 1."""
    lhs = ident.lhs_coeff * _zeta_1mk(ident.lhs_k, zeta)
    rhs = sum((c * _zeta_1mk(k1, zeta) * _zeta_1mk(k2, zeta) for c, k1, k2 in ident.rhs), Fraction(0))
    return lhs, rhs


def _check(case: str, n: int, Q: int, zeta: ZetaFn) -> IdentityCheck:
    ident = identity_terms(case, n)
    lhs, rhs = lifted_sides(ident, Q, zeta)
    bad = [i for i in range(Q + 1) if lhs.coeffs[i] != rhs.coeffs[i]]
    holds = not bad
    if case == "A":
        status = "PROVED" if holds else "FAILED"
    else:
        status = f"CONJECTURE-TESTED(n={n}, Q={Q})" if holds else "COUNTEREXAMPLE"
    return IdentityCheck(case, n, Q, holds, bad[0] if bad else None, lhs.coeffs, rhs.coeffs, status)


def romik_A_check(n: int, Q: int = 30, zeta: ZetaFn = zeta_neg_int) -> bool:
    """Lifted form of the A identity (a theorem) to q-order Q."""
    return _check("A", n, Q, zeta).holds


def conjecture_check(case: str, n: int, Q: int | None = None, zeta: ZetaFn = zeta_neg_int) -> bool:
    """Lifted form of the B or G identity to q-order Q."""
    return conjecture_report(case, n, Q, zeta).holds


def conjecture_report(case: str, n: int, Q: int | None = None, zeta: ZetaFn = zeta_neg_int) -> IdentityCheck:
    if case not in ("A", "B", "G"):
        raise ValueError("case must be A, B or G")
    if Q is None:
        Q = {"A": 30, "B": 20, "G": 12}[case]
    return _check(case, n, Q, zeta)
