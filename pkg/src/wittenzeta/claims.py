"""The claims manifest: every value checked against an external source, in one file.

Each claim has an id, a kind, the expected value and a provenance tag
(PAPER for published values, DERIVED for values frozen from an oracle run).
:func:`evaluate` recomputes a claim and returns a :class:`ClaimResult`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .constants import ConstExpr
from .polycore import PositivePoly, fmt_q, parse_poly

PRESETS = {
    "A2": "(1+x)",
    "B2": "(1+x)(1+2x)",
    "G2": "(1+x)(1+2x)(1+3x)(2+3x)",
}
# omega(s) = NORMALIZATION^{-s} zeta_g(s) for the Lie algebra g
NORMALIZATION = {"A2": 2, "B2": 6, "G2": 120}


def preset_poly(name: str) -> PositivePoly:
    key = name.upper()
    if len(key) == 1:
        key += "2"
    if key not in PRESETS:
        raise ValueError(f"unknown preset {name!r}; choose A2, B2 or G2")
    return parse_poly(PRESETS[key])


def load_manifest() -> dict:
    text = resources.files("wittenzeta").joinpath("data/claims.json").read_text()
    return json.loads(text)


def load_claims(table1_only: bool = False) -> list[dict]:
    claims = load_manifest()["claims"]
    return [c for c in claims if c.get("table1")] if table1_only else claims


def find_claim(claim_id: str) -> dict:
    for c in load_claims():
        if c["id"] == claim_id:
            return c
    raise KeyError(f"no claim with id {claim_id!r}")


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    expected: object
    computed: object
    abs_err: float | None
    status: str
    provenance: str
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_json(self) -> dict:
        out = {"claim_id": self.claim_id, "expected": self.expected, "computed": self.computed,
               "abs_err": self.abs_err, "status": self.status, "provenance": self.provenance}
        if self.note:
            out["note"] = self.note
        return out


def _poly_of(claim: dict) -> PositivePoly:
    return preset_poly(claim["preset"]) if "preset" in claim else parse_poly(claim["poly"])


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _abscissa(c):
    d = _poly_of(c).degree
    got = Fraction(2, d + 2)
    return fmt_q(got), None, got == Fraction(c["expected"]), ""


def _residue(c):
    from .specials import abscissa_record

    rec = abscissa_record(_poly_of(c))
    got = rec.residue_value
    err = abs(got.value - float(c["expected"]))
    ok = err <= c["tol"] and got.abs_err <= c["tol"]
    return repr(got.re), err, ok, c.get("display", "")


def _value(c):
    from .specials import zeta_at_neg_int

    got = zeta_at_neg_int(_poly_of(c), c["n"])
    return fmt_q(got), 0.0, got == Fraction(c["expected"]), ""


def _values(c):
    from .specials import zeta_at_neg_int

    f = _poly_of(c)
    got = [zeta_at_neg_int(f, n) for n in range(len(c["expected"]))]
    ok = all(g == Fraction(e) for g, e in zip(got, c["expected"]))
    return [fmt_q(g) for g in got], 0.0, ok, ""


def _vanish(c):
    from .specials import zeta_at_neg_int

    f = _poly_of(c)
    got = {str(-n): fmt_q(zeta_at_neg_int(f, n)) for n in c["ns"]}
    return got, 0.0, all(v == "0" for v in got.values()), ""


def _dzero(c):
    from .dzero import dzero

    got = dzero(_poly_of(c))
    want = ConstExpr.from_json(c["expected"])
    return got.pretty(), 0.0, got == want, "expected value canonicalized before comparison"


def _ialpha(c):
    from .dzero import I_alpha

    got = I_alpha(c["p"], c["q"]).value
    want = ConstExpr.from_json(c["expected"])
    return got.pretty(), 0.0, got == want, "expected value canonicalized before comparison"


def _poles(c):
    from .specials import fractional_is_pole

    f = _poly_of(c)
    d = f.degree
    m, classes = c["modulus"], set(c["pole_residues"])
    wrong = []
    for n in range(c["depth"] + 1):
        k = 1 - n
        predicted = k % m in classes and k % (d + 1) != 0
        if fractional_is_pole(f, n) != predicted:
            wrong.append(f"{k}/{d + 1}")
    got = "pattern holds" if not wrong else f"mismatch at {', '.join(wrong[:5])}"
    note = c.get("status", "")
    return got, None, not wrong, note


def _g2_constant(c):
    from .repcount import g2_saddle_data

    got = getattr(g2_saddle_data().constants(), c["name"])
    err = abs(got - float(c["expected"]))
    return repr(got), err, err <= c["tol"], c.get("note", "")


def _g2_trend(c):
    from .repcount import compare_asymptotic

    rep = compare_asymptotic(c["N"])
    frozen = c["frozen"]
    close = all(abs(r["log_rho"] - a) <= c["tol"] and abs(r["lambda"] - b) <= c["tol"]
                for r, a, b in zip(rep["rows"], frozen["log_rho"], frozen["lambda"]))
    got = {"log_rho": [round(r["log_rho"], 4) for r in rep["rows"]],
           "lambda": [round(r["lambda"], 4) for r in rep["rows"]]}
    return got, None, rep["ok"] and close, "trend: |log rho| and |lambda - 1| decreasing"


def _exponent(c):
    from .repcount import exponent_probe, rep_counts

    table = rep_counts(c["system"], c["N"])
    slope = exponent_probe(table, 1000, c["N"])
    target = float(Fraction(c["target"]))
    err = abs(slope - target)
    return round(slope, 4), err, err <= c["tol"], c.get("note", "")


_KINDS = {
    "abscissa": _abscissa, "residue": _residue, "value": _value, "values": _values,
    "vanish": _vanish, "dzero": _dzero, "ialpha": _ialpha, "poles": _poles,
    "g2_constant": _g2_constant, "g2_trend": _g2_trend, "exponent_probe": _exponent,
}


def evaluate(claim: dict) -> ClaimResult:
    kind = claim["kind"]
    if kind not in _KINDS:
        raise ValueError(f"unknown claim kind {kind!r}")
    computed, err, ok, note = _KINDS[kind](claim)
    if isinstance(err, float) and math.isnan(err):
        ok = False
    expected = claim.get("expected", claim.get("target", claim.get("pole_residues")))
    return ClaimResult(claim["id"], expected, computed, err, _status(ok), claim["provenance"], note)
