"""Exact polynomial, power-series and rational-function arithmetic over Q.

Everything here works with ``fractions.Fraction`` and never touches floating
point.  The central object is :class:`PositivePoly`, a polynomial whose
positivity on ``[0, inf)`` has been certified with a Sturm sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "PolySyntaxError",
    "PositivityError",
    "PositivePoly",
    "RationalSeries",
    "MPoly",
    "RationalFunction",
    "parse_poly",
    "reverse_poly",
    "series_pow",
    "series_pow_log",
    "sturm_positive",
    "ratfun_identity_check",
    "rational_power",
    "poly_mul",
    "poly_eval",
]


class PolySyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class PositivityError(ValueError):
    """Raised when a polynomial is not positive on [0, inf).

    ``witness`` is a closed rational interval ``(lo, hi)`` that contains a
    non-negative root of the polynomial.
    """

    def __init__(self, message: str, witness: tuple[Fraction, Fraction]):
        super().__init__(f"{message}; root in [{witness[0]}, {witness[1]}]")
        self.witness = witness


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted where exact rationals are required")
    return Fraction(x)


def fmt_q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# dense univariate helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p: Sequence, q: Sequence) -> list:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def poly_eval(p: Sequence, x):
    acc = 0 * x
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_deriv(p: Sequence) -> list:
    if len(p) == 1:
        return [Fraction(0)]
    return [k * p[k] for k in range(1, len(p))]


def _poly_rem(a: Sequence, b: Sequence) -> list:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - 1 - db
        c = a[-1] / lead
        for i in range(db + 1):
            a[k + i] -= c * b[i]
        a.pop()
    return _trim(a or [Fraction(0)])


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    s = [v for v in signs if v != 0]
    return sum(1 for u, v in zip(s, s[1:]) if u != v)


def _sturm_chain(p: Sequence) -> list[list]:
    chain = [list(p), _poly_deriv(p)]
    while len(chain[-1]) > 1 or chain[-1][0] != 0:
        r = _poly_rem(chain[-2], chain[-1])
        if len(r) == 1 and r[0] == 0:
            break
        chain.append([-c for c in r])
        if len(r) == 1:
            break
    return chain


def _count_roots(chain, lo, hi) -> int:
    """Distinct roots in the half-open interval (lo, hi]; hi=None means +inf."""
    v_lo = _variations(_sign(poly_eval(q, lo)) for q in chain)
    if hi is None:
        v_hi = _variations(_sign(q[-1]) for q in chain)
    else:
        v_hi = _variations(_sign(poly_eval(q, hi)) for q in chain)
    return v_lo - v_hi


def sturm_positive(coeffs: Sequence) -> tuple[bool, tuple[Fraction, Fraction] | None]:
    """Certify ``f(x) > 0`` for all ``x >= 0``.

    Returns ``(True, None)`` or ``(False, (lo, hi))`` where the rational
    interval brackets the smallest non-negative root of ``f``.
    """
    p = _trim([_q(c) for c in coeffs])
    if len(p) == 1 and p[0] == 0:
        raise ValueError("zero polynomial")
    if p[0] == 0:
        return False, (Fraction(0), Fraction(0))
    if p[0] < 0:
        # f(0) < 0 is itself a failure; report where the sign is wrong
        return False, (Fraction(0), Fraction(0))
    if len(p) == 1:
        return True, None
    chain = _sturm_chain(p)
    if _count_roots(chain, Fraction(0), None) == 0:
        return True, None
    # Cauchy bound, then bisect on root counts towards the smallest root
    hi = 1 + max(abs(c / p[-1]) for c in p[:-1])
    lo = Fraction(0)
    while hi - lo > Fraction(1, 1 << 20):
        mid = (lo + hi) / 2
        if poly_eval(p, mid) == 0 and _count_roots(chain, lo, mid) == 1:
            return False, (mid, mid)
        if _count_roots(chain, lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return False, (lo, hi)


def rational_power(base: Fraction, expo: Fraction) -> Fraction | None:
    """``base**expo`` if it is rational, else None (base > 0)."""
    base, expo = Fraction(base), Fraction(expo)
    if base <= 0:
        raise ValueError("base must be positive")
    if expo.denominator == 1:
        return base ** expo.numerator
    k = expo.denominator

    def iroot(n: int) -> int | None:
        r = round(n ** (1.0 / k)) if n < 2**1000 else _int_root(n, k)
        for c in (r - 1, r, r + 1):
            if c >= 0 and c**k == n:
                return c
        return None

    num, den = iroot(base.numerator), iroot(base.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den) ** expo.numerator


def _int_root(n: int, k: int) -> int:
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction] | None:
    """All roots of the polynomial if every one of them is rational."""
    p = list(coeffs)
    lcm = math.lcm(*(c.denominator for c in p))
    p = [c * lcm for c in p]
    roots = []
    while len(p) > 1:
        if p[0] == 0:
            roots.append(Fraction(0))
            p = p[1:]
            continue
        a0, ad = int(p[0]), int(p[-1])
        found = None
        for u in _divisors(a0):
            for v in _divisors(ad):
                for cand in (Fraction(u, v), Fraction(-u, v)):
                    if poly_eval(p, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return None
        roots.append(found)
        # synthetic division by (x - found)
        q = [Fraction(0)] * (len(p) - 1)
        acc = Fraction(0)
        for i in range(len(p) - 1, 0, -1):
            acc = acc * found + p[i]
            q[i - 1] = acc
        p = q
    return roots


# ---------------------------------------------------------------------------
# PositivePoly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PositivePoly:
    """Polynomial with exact rational coefficients, certified positive on [0, inf).

    ``roots`` holds the alphas of ``f(x) = c0 * prod(1 + alpha_i x)`` when all
    roots are rational (``None`` otherwise).
    """

    coeffs: tuple[Fraction, ...]
    roots: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        coeffs = tuple(_q(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 2 or coeffs[-1] == 0:
            raise ValueError("polynomial must have degree >= 1 with nonzero leading coefficient")
        ok, witness = sturm_positive(coeffs)
        if not ok:
            raise PositivityError("polynomial is not positive on [0, inf)", witness)
        if self.roots is not None:
            roots = tuple(sorted(_q(a) for a in self.roots))
            object.__setattr__(self, "roots", roots)
            expanded = [coeffs[0]]
            for a in roots:
                expanded = poly_mul(expanded, [Fraction(1), a])
            if tuple(expanded) != coeffs:
                raise ValueError("root list does not reproduce the coefficients")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, find_roots: bool = True) -> "PositivePoly":
        coeffs = [_q(c) for c in coeffs]
        roots = None
        if find_roots:
            betas = _rational_roots(coeffs)
            if betas is not None and all(b != 0 for b in betas):
                roots = tuple(-1 / b for b in betas)
        return cls(tuple(coeffs), roots)

    @classmethod
    def from_roots(cls, alphas: Sequence, c0=1) -> "PositivePoly":
        p = [_q(c0)]
        for a in alphas:
            p = poly_mul(p, [Fraction(1), _q(a)])
        return cls(tuple(p), tuple(_q(a) for a in alphas))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def c0(self) -> Fraction:
        return self.coeffs[0]

    @property
    def cd(self) -> Fraction:
        return self.coeffs[-1]

    def reverse(self) -> "PositivePoly":
        return reverse_poly(self)

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def to_json(self) -> dict:
        out = {"coeffs": [fmt_q(c) for c in self.coeffs]}
        if self.roots is not None:
            out["roots"] = [fmt_q(a) for a in self.roots]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "PositivePoly":
        coeffs = [Fraction(c) for c in data["coeffs"]]
        roots = data.get("roots")
        return cls(tuple(coeffs), tuple(Fraction(a) for a in roots) if roots is not None else None)

    def pretty(self) -> str:
        """Canonical text form; ``parse_poly(p.pretty()) == p``."""
        if self.roots is None:
            return "[" + ",".join(fmt_q(c) for c in self.coeffs) + "]"
        parts = [] if self.c0 == 1 else [f"({fmt_q(self.c0)})"]
        for a in self.roots:
            parts.append("(1+x)" if a == 1 else f"(1+{fmt_q(a)}x)")
        return "".join(parts)

    def __str__(self) -> str:
        return self.pretty()


def reverse_poly(f: PositivePoly) -> PositivePoly:
    """``g(x) = x^d f(1/x)``; roots map alpha -> 1/alpha and c0 -> c0*prod(alpha)."""
    coeffs = tuple(reversed(f.coeffs))
    roots = None
    if f.roots is not None:
        roots = tuple(1 / a for a in f.roots)
    return PositivePoly(coeffs, roots)


# ---------------------------------------------------------------------------
# text grammar
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise PolySyntaxError(f"expected '{ch}', got '{got}'", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise PolySyntaxError("expected digits", self.pos)
        return int(self.text[start:self.pos])

    def rational(self, optional_sign=True) -> Fraction:
        sign = 1
        if optional_sign and self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        num = self.integer()
        den = 1
        if self.peek() == "/":
            self.pos += 1
            den = self.integer()
            if den == 0:
                raise PolySyntaxError("zero denominator", self.pos)
        return sign * Fraction(num, den)

    def factor(self) -> list[Fraction]:
        self.expect("(")
        a = self.rational()
        b = Fraction(0)
        if self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            if self.peek() == "x":
                b = Fraction(sign)
            else:
                b = sign * self.rational(optional_sign=False)
                if self.peek() == "*":
                    self.pos += 1
            self.expect("x")
        self.expect(")")
        return [a, b] if b != 0 else [a]

    def parse(self) -> PositivePoly:
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            coeffs = [self.rational()]
            while self.peek() == ",":
                self.pos += 1
                coeffs.append(self.rational())
            self.expect("]")
            self._end()
            coeffs = _trim(coeffs)
            if len(coeffs) < 2:
                raise PolySyntaxError("degree 0 polynomial rejected", self.pos)
            return PositivePoly.from_coeffs(coeffs)
        if ch != "(":
            raise PolySyntaxError("expected '(' or '['", self.pos)
        factors = []
        while self.peek() == "(":
            factors.append(self.factor())
        self._end()
        c0 = Fraction(1)
        alphas = []
        coeffs = [Fraction(1)]
        for fac in factors:
            coeffs = poly_mul(coeffs, fac)
            if len(fac) == 1 or fac[0] == 0:
                c0 *= fac[0]
            else:
                c0 *= fac[0]
                alphas.append(fac[1] / fac[0])
        if len(coeffs) < 2:
            raise PolySyntaxError("degree 0 polynomial rejected", self.pos)
        ok, witness = sturm_positive(coeffs)
        if not ok:
            raise PositivityError("polynomial is not positive on [0, inf)", witness)
        return PositivePoly(tuple(coeffs), tuple(alphas))

    def _end(self):
        if self.peek() != "":
            raise PolySyntaxError(f"unexpected '{self.peek()}'", self.pos)


def parse_poly(text: str) -> PositivePoly:
    """Parse ``"(1+x)(1+2x)"`` or ``"[1,3,2]"`` into a certified PositivePoly."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------

@dataclass
class RationalSeries:
    """Power series ``sum coeffs[k] x^k + O(x^(N+1))`` with exact coefficients."""

    coeffs: list[Fraction] = field(default_factory=list)

    def __post_init__(self):
        self.coeffs = [_q(c) for c in self.coeffs]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def _n(self, other: "RationalSeries") -> int:
        return min(len(self.coeffs), len(other.coeffs))

    def __add__(self, other):
        n = self._n(other)
        return RationalSeries([self.coeffs[k] + other.coeffs[k] for k in range(n)])

    def __sub__(self, other):
        n = self._n(other)
        return RationalSeries([self.coeffs[k] - other.coeffs[k] for k in range(n)])

    def __neg__(self):
        return RationalSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, RationalSeries):
            return RationalSeries([c * other for c in self.coeffs])
        n = self._n(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]), Fraction(0)))
        return RationalSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, RationalSeries) and self.coeffs == other.coeffs

    def derivative(self) -> "RationalSeries":
        return RationalSeries([k * self.coeffs[k] for k in range(1, len(self.coeffs))] or [0])

    def integral(self, const=0) -> "RationalSeries":
        return RationalSeries([_q(const)] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def truncate(self, N: int) -> "RationalSeries":
        return RationalSeries(self.coeffs[: N + 1])

    def compose(self, inner: "RationalSeries") -> "RationalSeries":
        """``self(inner(x))`` for ``inner`` with zero constant term."""
        if inner[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(len(self.coeffs), len(inner.coeffs))
        out = RationalSeries([0] * n)
        power = RationalSeries([1] + [0] * (n - 1))
        inner = inner.truncate(n - 1)
        for k in range(n):
            if self.coeffs[k]:
                out = out + power * self.coeffs[k]
            power = power * inner
        return out

    @classmethod
    def from_poly(cls, p: Sequence, N: int) -> "RationalSeries":
        return cls([_q(p[k]) if k < len(p) else 0 for k in range(N + 1)])


def _coeffs_of(f) -> list[Fraction]:
    if isinstance(f, PositivePoly):
        return list(f.coeffs)
    return [_q(c) for c in f]


def _normalized_pow(c: Sequence[Fraction], alpha: Fraction, N: int) -> list[Fraction]:
    # (f/c0)^alpha via  n c0 h_n = -sum_{j>=1} c_j ((n - j) - alpha j) h_{n-j}
    c0 = c[0]
    d = len(c) - 1
    h = [Fraction(1)]
    for n in range(1, N + 1):
        acc = Fraction(0)
        for j in range(1, min(d, n) + 1):
            if c[j]:
                acc += c[j] * ((n - j) - alpha * j) * h[n - j]
        h.append(-acc / (n * c0))
    return h


def series_pow(f, alpha, N: int) -> RationalSeries:
    """Coefficients of ``f(x)^alpha`` up to ``x^N``.

    When ``c0**alpha`` is irrational the returned series is that of
    ``(f/c0)^alpha``; its ``prefactor`` attribute records ``(c0, alpha)``.
    """
    c = _coeffs_of(f)
    alpha = _q(alpha)
    if c[0] == 0:
        raise ValueError("constant term must be nonzero")
    h = _normalized_pow(c, alpha, N)
    scale = rational_power(c[0], alpha) if c[0] > 0 else None
    if scale is not None:
        s = RationalSeries([scale * x for x in h])
        s.prefactor = None
    else:
        s = RationalSeries(h)
        s.prefactor = (c[0], alpha)
    return s


def series_log(f, N: int) -> RationalSeries:
    """``log(f/c0)`` as a series, obtained by integrating ``f'/f``."""
    c = _coeffs_of(f)
    fs = RationalSeries.from_poly(c, N)
    inv = series_pow(c, -1, N)
    if inv.prefactor is not None:
        raise AssertionError("unreachable: integer powers are rational")
    return (fs.derivative() * inv).truncate(N - 1).integral() if N >= 1 else RationalSeries([0])


def series_pow_log(f, n: int, N: int) -> tuple[RationalSeries, Fraction]:
    """Series of ``f^n * log(f/c0)`` to order N, and the dropped ``c0``.

    The full ``f^n log f`` equals the returned series plus ``log(c0) * f^n``.
    """
    c = _coeffs_of(f)
    if int(n) != n:
        raise ValueError("n must be an integer")
    p = series_pow(c, int(n), N)
    return p * series_log(c, N), c[0]


# ---------------------------------------------------------------------------
# sparse multivariate polynomials and rational functions (for certificates)
# ---------------------------------------------------------------------------

class MPoly:
    """Sparse polynomial over Q in a fixed tuple of named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict | None = None):
        self.vars = tuple(vars)
        self.terms = {k: _q(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, vars, c) -> "MPoly":
        return cls(vars, {(0,) * len(vars): _q(c)})

    @classmethod
    def var(cls, vars, name: str) -> "MPoly":
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    @classmethod
    def univariate(cls, vars, name: str, coeffs: Sequence) -> "MPoly":
        i = vars.index(name)
        terms = {}
        for k, c in enumerate(coeffs):
            e = [0] * len(vars)
            e[i] = k
            terms[tuple(e)] = _q(c)
        return cls(vars, terms)

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError("variable sets differ")
            return other
        return MPoly.const(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return MPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t[k] = t.get(k, 0) + v1 * v2
        return MPoly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def diff(self, name: str) -> "MPoly":
        i = self.vars.index(name)
        t = {}
        for k, v in self.terms.items():
            if k[i]:
                e = list(k)
                e[i] -= 1
                t[tuple(e)] = v * k[i]
        return MPoly(self.vars, t)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{n}^{e}" if e > 1 else n for n, e in zip(self.vars, k) if e)
            parts.append(f"{fmt_q(v)}*{mono}" if mono else fmt_q(v))
        return " + ".join(parts)


class RationalFunction:
    """Quotient of two :class:`MPoly`; equality is decided by cross-multiplication."""

    def __init__(self, num: MPoly, den: MPoly | None = None):
        den = den if den is not None else MPoly.const(num.vars, 1)
        if den.is_zero():
            raise ZeroDivisionError("denominator is identically zero")
        self.num, self.den = num, den

    @property
    def vars(self):
        return self.num.vars

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MPoly):
            return RationalFunction(other)
        return RationalFunction(MPoly.const(self.vars, other))

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num**n, self.den**n)

    def diff(self, name: str) -> "RationalFunction":
        return RationalFunction(
            self.num.diff(name) * self.den - self.num * self.den.diff(name), self.den * self.den
        )

    def __eq__(self, other):
        o = self._coerce(other)
        return (self.num * o.den - o.num * self.den).is_zero()

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


def ratfun_identity_check(lhs: RationalFunction, rhs: RationalFunction) -> bool:
    if lhs.vars != rhs.vars:
        raise ValueError("variable sets differ")
    return lhs == rhs
