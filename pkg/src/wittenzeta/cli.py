"""Command-line front end.

    wittenzeta value --preset B2 --s 0
    wittenzeta table1 [--cell residue:G]
    wittenzeta poles --preset G2 --depth 50
    wittenzeta dzero --poly "(1+x)(1+3x)"
    wittenzeta eisenstein-check --case G --n 2 --q-order 12
    wittenzeta repcount --system G2 --n 100000 --out counts.csv
    wittenzeta repcount --compare --n 10000
    wittenzeta certify --which all
    wittenzeta claims [--id dzero:G ...]

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
3 numeric non-convergence.  ``--config run.toml`` supplies defaults: top-level
keys apply to every command, a table named after the command to that command.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

DEFAULTS = {
    "format": "text", "out": None, "preset": None, "poly": None, "s": None, "M": None,
    "abs_err": 1e-11, "lie": False, "cell": None, "depth": None, "case": "B", "n": None,
    "Q": None, "system": "G2", "N": None, "compare": False, "which": "all", "id": None,
}


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    preset: str | None = None
    poly: str | None = None
    s: str | None = None
    M: int | None = None
    abs_err: float = 1e-11
    lie: bool = False
    cell: str | None = None
    depth: int | None = None
    case: str = "B"
    n: int | None = None
    Q: int | None = None
    system: str = "G2"
    N: int | None = None
    compare: bool = False
    which: str = "all"
    id: list[str] | None = None
    out: str | None = None
    format: str = "text"


@dataclass
class Report:
    data: object
    ok: bool = True
    text: str = ""
    rows: list[list] = field(default_factory=list)  # for csv output


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _parse_s(text: str) -> complex | Fraction:
    t = text.strip().replace(" ", "")
    try:
        return Fraction(t)
    except ValueError:
        pass
    try:
        return complex(t.replace("i", "j"))
    except ValueError as exc:
        raise UsageError(f"cannot parse s = {text!r}") from exc


def _poly(cfg: RunConfig):
    from .claims import preset_poly
    from .polycore import parse_poly

    if cfg.preset and cfg.poly:
        raise UsageError("give either --preset or --poly, not both")
    if cfg.preset:
        return preset_poly(cfg.preset)
    if cfg.poly:
        try:
            return parse_poly(cfg.poly)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    raise UsageError("one of --preset or --poly is required")


def _preset_key(cfg: RunConfig) -> str | None:
    if not cfg.preset:
        return None
    key = cfg.preset.upper()
    return key + "2" if len(key) == 1 else key


def _nearest_pole_record(f, s: complex):
    from .specials import abscissa_record, fractional_record

    d = f.degree
    if abs(s - 2 / (d + 2)) < 1e-3:
        return abscissa_record(f)
    n = round(1 - (d + 1) * s.real)
    return fractional_record(f, n)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_value(cfg: RunConfig) -> Report:
    from .claims import NORMALIZATION
    from .continuation import NearPoleError, zeta_mb
    from .polycore import fmt_q
    from .specials import zeta_at_neg_int

    if cfg.s is None:
        raise UsageError("--s is required")
    f = _poly(cfg)
    s = _parse_s(str(cfg.s))
    key = _preset_key(cfg)
    norm = NORMALIZATION[key] if (cfg.lie and key) else 1
    name = f"zeta_{key}" if (cfg.lie and key) else (f"omega_{key[0]}" if key else "zeta_f")
    if isinstance(s, Fraction) and s.denominator == 1 and s <= 0:
        v = zeta_at_neg_int(f, int(-s)) * Fraction(1, norm ** int(-s))
        data = {"function": name, "s": fmt_q(s), "value": fmt_q(v), "exact": True}
        return Report(data, True, f"{name}({fmt_q(s)}) = {fmt_q(v)} (exact)")
    sc = complex(s)
    try:
        v = zeta_mb(f, sc, M=cfg.M, tol=cfg.abs_err)
    except NearPoleError as exc:
        rec = _nearest_pole_record(f, sc)
        raise UsageError(f"{exc}; pole record: {json.dumps(rec.to_json())}") from exc
    val = v.value * norm**sc
    err = v.abs_err * abs(norm**sc)
    data = {"function": name, "s": str(s), "re": val.real, "im": val.imag, "abs_err": err,
            "exact": False, "method": "mellin-barnes"}
    return Report(data, True, f"{name}({s}) = {val.real:.15g} {val.imag:+.15g}i  (+- {err:.2g})")


def _claims_report(results, title: str) -> Report:
    lines = [title]
    width = max((len(r.claim_id) for r in results), default=10)
    for r in results:
        comp = r.computed if isinstance(r.computed, str) else json.dumps(r.computed)
        if len(comp) > 70:
            comp = comp[:67] + "..."
        lines.append(f"  {r.status:4}  {r.claim_id:{width}}  [{r.provenance}]  {comp}")
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} PASS")
    return Report([r.to_json() for r in results], ok, "\n".join(lines))


def cmd_table1(cfg: RunConfig) -> Report:
    from .claims import evaluate, load_claims

    claims = load_claims(table1_only=True)
    if cfg.cell:
        claims = [c for c in claims if c["id"] == cfg.cell]
        if not claims:
            raise UsageError(f"no table cell {cfg.cell!r}")
    if cfg.depth is not None:
        for c in claims:
            if c["kind"] == "poles":
                c["depth"] = cfg.depth
    return _claims_report([evaluate(c) for c in claims], "headline table (omega_A, omega_B, omega_G)")


def cmd_claims(cfg: RunConfig) -> Report:
    from .claims import evaluate, find_claim, load_claims

    try:
        claims = [find_claim(i) for i in cfg.id] if cfg.id else load_claims()
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    return _claims_report([evaluate(c) for c in claims], "Claims manifest")


def cmd_poles(cfg: RunConfig) -> Report:
    from .claims import find_claim
    from .specials import pole_catalog

    f = _poly(cfg)
    depth = 50 if cfg.depth is None else cfg.depth
    recs = pole_catalog(f, depth)
    data = {"poly": f.pretty(), "depth": depth, "poles": [r.to_json() for r in recs]}
    ok = True
    lines = [f"candidate poles of zeta_f for f = {f.pretty()}, depth {depth}"]
    for r in recs:
        lines.append(f"  s = {r.location}: {'pole' if r.is_pole else 'no pole'} ({r.kind})")
    key = _preset_key(cfg)
    if key:
        claim = find_claim(f"poles:{key[0]}")
        m, classes = claim["modulus"], set(claim["pole_residues"])
        d = f.degree
        wrong = [str(r.location) for r in recs if r.kind == "FRACTIONAL"
                 and r.is_pole != ((1 - r.n) % m in classes)]
        ok = not wrong
        data["pattern"] = {"modulus": m, "pole_classes": sorted(classes), "holds": ok, "mismatches": wrong,
                           "status": claim.get("status", "PROVED")}
        lines.append(f"pattern s = k/{d + 1} is a pole iff k mod {m} in {sorted(classes)}: "
                     f"{'holds' if ok else 'FAILS at ' + ', '.join(wrong)}")
    return Report(data, ok, "\n".join(lines))


def cmd_dzero(cfg: RunConfig) -> Report:
    from .constants import const_eval
    from .dzero import IrrationalRootError, dzero

    f = _poly(cfg)
    try:
        e = dzero(f)
    except IrrationalRootError as exc:
        raise UsageError(str(exc)) from exc
    v = const_eval(e)
    data = {"poly": f.pretty(), "value": e.to_json(), "pretty": e.pretty(), "numeric": v.re, "abs_err": v.abs_err,
            "basis": "zeta'(0) rewritten as -(log 2 + log pi)/2; log Gamma(r) for r > 1/2 reflected when the "
                     "sine is a product of prime powers"}
    text = f"zeta_f'(0) = {e.pretty()}  ({v.re:.15g})\n  canonical basis: {data['basis']}"
    return Report(data, True, text)


def cmd_eisenstein(cfg: RunConfig) -> Report:
    from .modular import conjecture_report

    case = (cfg.case or "B").upper()[:1]
    n = 1 if cfg.n is None else cfg.n
    try:
        r = conjecture_report(case, n, cfg.Q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = r.to_json()
    if not r.holds:
        i = r.first_mismatch
        data["mismatch"] = {"q_power": i, "lhs": str(r.lhs[i]), "rhs": str(r.rhs[i])}
    text = f"case {case}, n = {n}, q-order {r.Q}: {'holds' if r.holds else 'FAILS'} [{r.status}]"
    return Report(data, r.holds, text)


def cmd_repcount(cfg: RunConfig) -> Report:
    from .repcount import compare_asymptotic, rep_counts

    system = (cfg.system or "G2").upper()
    if cfg.compare:
        N = 10_000 if cfg.N is None and cfg.n is None else (cfg.N or cfg.n)
        rep = compare_asymptotic(N)
        lines = [f"G2 counts against the asymptotic formula, N = {N}"]
        for r in rep["rows"]:
            lines.append(f"  n = {r['n']:>8}  log rho = {r['log_rho']:+.4f}  lambda = {r['lambda']:.4f}"
                         f"  (log rho with printed G3 sign: {r['log_rho_printed_sign']:+.4f})")
        lines.append(f"trends: |log rho| decreasing {rep['log_rho_decreasing']}, "
                     f"|lambda - 1| decreasing {rep['lambda_trend']}")
        return Report(rep, rep["ok"], "\n".join(lines))
    N = cfg.n if cfg.n is not None else (cfg.N or 100)
    table = rep_counts(system, N)
    rows = [[n, c] for n, c in enumerate(table.counts)]
    data = {"system": system, "N": N, "counts": [str(c) for c in table.counts]}
    tail = ", ".join(str(c) for c in table.counts[-5:])
    return Report(data, True, f"r_{system}(n) for n <= {N}; last values: {tail}", rows)


def cmd_certify(cfg: RunConfig) -> Report:
    from .specials import (bg_sequence, certificate_check_appendix, certificate_check_b,
                           recurrence_check)

    which = (cfg.which or "all").lower()
    checks: dict[str, Callable[[], bool]] = {
        "b": certificate_check_b,
        "appendix": certificate_check_appendix,
        "b-recurrence": lambda: recurrence_check(bg_sequence("b", 206)),
        "g-recurrence": lambda: recurrence_check(bg_sequence("g", 120)),
    }
    if which == "all":
        names = list(checks)
    elif which in checks:
        names = [which]
    else:
        raise UsageError(f"--which must be one of {', '.join(checks)} or all")
    results = {k: bool(checks[k]()) for k in names}
    text = "\n".join(f"  {k}: {'true' if v else 'FALSE'}" for k, v in results.items())
    return Report(results, all(results.values()), "exact certificate checks\n" + text)


COMMANDS = {
    "value": cmd_value, "table1": cmd_table1, "claims": cmd_claims, "poles": cmd_poles,
    "dzero": cmd_dzero, "eisenstein-check": cmd_eisenstein, "repcount": cmd_repcount,
    "certify": cmd_certify,
}


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML file with default options")
    common.add_argument("--format", choices=["text", "json", "csv"], default=None)
    common.add_argument("--out", help="write the report to this file")

    poly = argparse.ArgumentParser(add_help=False)
    poly.add_argument("--preset", help="A2, B2 or G2 (the omega functions)")
    poly.add_argument("--poly", help='polynomial such as "(1+x)(1+3x)"')

    p = argparse.ArgumentParser(prog="wittenzeta", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("value", parents=[common, poly], help="evaluate zeta_f or omega at s")
    v.add_argument("--s", help="point: rational, real or complex such as 0.5+2j")
    v.add_argument("--M", type=int, help="shift depth of the continuation")
    v.add_argument("--abs-err", dest="abs_err", type=float)
    v.add_argument("--lie", action="store_const", const=True, help="Lie-algebra normalisation zeta_g(s)")

    t = sub.add_parser("table1", parents=[common], help="recompute every headline-table cell")
    t.add_argument("--cell", help="single cell id such as residue:G")
    t.add_argument("--depth", type=int, help="depth of the pole-pattern check")

    c = sub.add_parser("claims", parents=[common], help="evaluate claims from the manifest")
    c.add_argument("--id", action="append", help="claim id (repeatable); default all")

    po = sub.add_parser("poles", parents=[common, poly], help="candidate poles and their status")
    po.add_argument("--depth", type=int)

    sub.add_parser("dzero", parents=[common, poly], help="exact zeta_f'(0)")

    e = sub.add_parser("eisenstein-check", parents=[common], help="lifted vanishing identities")
    e.add_argument("--case", choices=["A", "B", "G"])
    e.add_argument("--n", type=int)
    e.add_argument("--q-order", dest="Q", type=int)

    r = sub.add_parser("repcount", parents=[common], help="representation counts")
    r.add_argument("--system", choices=["A2", "B2", "G2"])
    r.add_argument("--n", type=int, help="largest dimension")
    r.add_argument("--compare", action="store_const", const=True, help="G2 asymptotic trend report")

    ce = sub.add_parser("certify", parents=[common], help="exact certificate and recurrence checks")
    ce.add_argument("--which", choices=["b", "appendix", "b-recurrence", "g-recurrence", "all"])
    return p


def _load_toml(path: str) -> dict:
    try:
        import tomllib
    except ModuleNotFoundError:  # Python < 3.11
        import tomli as tomllib
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def make_config(ns: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(ns).items() if k != "config"}
    if getattr(ns, "config", None):
        try:
            conf = _load_toml(ns.config)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {ns.config}: {exc}") from exc
        merged = {k: v for k, v in conf.items() if not isinstance(v, dict)}
        merged.update(conf.get(ns.command, {}))
        for k, v in merged.items():
            key = k.replace("-", "_")
            if key == "q_order":
                key = "Q"
            if key not in DEFAULTS:
                raise UsageError(f"unknown config key {k!r}")
            if values.get(key) is None:
                values[key] = v
    for k, v in DEFAULTS.items():
        if values.get(k) is None:
            values[k] = v
    fields = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in values.items() if k in fields})


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.data, indent=2, default=str)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if report.rows:
            w.writerow(["n", "r_n"])
            w.writerows(report.rows)
        else:
            w.writerow(["key", "value"])
            items = report.data.items() if isinstance(report.data, dict) else enumerate(report.data)
            for k, v in items:
                w.writerow([k, json.dumps(v, default=str) if isinstance(v, (dict, list)) else v])
        return buf.getvalue().rstrip("\n")
    return report.text


def main(argv: list[str] | None = None) -> int:
    from .kernel import KernelDomainError
    from .quadrature import QuadratureError
    from .continuation import ContinuationDomainError

    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = make_config(ns)
        report = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QuadratureError, ContinuationDomainError, KernelDomainError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    out = render(report, cfg.format)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return EXIT_OK if report.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
