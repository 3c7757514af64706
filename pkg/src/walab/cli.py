"""Command-line interface: info, levels, tables, verify, linkage."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .affine import AffineRoot, AffineWeight, format_finite_root
from .growth import DELIGNE_DE, contradiction_check, deligne_ledger, reduced_inequality
from .integral import (
    TABLE_ROWS,
    Check,
    all_cases,
    condition2_bruteforce,
    condition3,
    lemma_case,
    verify_lemma,
)
from .levels import (
    CriticalLevelError,
    ff_dual,
    is_admissible,
    k_of_m,
    principal_cc,
    table1,
    vir25_levels,
)
from .linkage import affinize, central_char_rep, h_principal, kk_precedes, wprec_certificate
from .rootsys import DELIGNE_SERIES, RootSystem, UnsupportedAlgebraError, build

TARGET_CC = Fraction(-22, 5)

# --- serialization ---------------------------------------------------------------

_RATIONAL = re.compile(r"^-?\d+/\d+$")


def fmt_q(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return fmt_q(obj)
    if isinstance(obj, AffineWeight):
        return {"finite": to_jsonable(obj.finite), "level": fmt_q(obj.level), "degree": fmt_q(obj.degree)}
    if isinstance(obj, AffineRoot):
        return {"finite": to_jsonable(obj.finite), "n": obj.n}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return str(obj)


def from_jsonable(obj: Any) -> Any:
    """Inverse of :func:`to_jsonable` on its image: "num/den" strings become Fractions."""
    if isinstance(obj, str) and _RATIONAL.match(obj):
        return Fraction(obj)
    if isinstance(obj, dict):
        return {k: from_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [from_jsonable(v) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), ensure_ascii=False, indent=2, sort_keys=True)


def loads(text: str) -> Any:
    return from_jsonable(json.loads(text))


def show(x: Any) -> str:
    """Compact human-readable rendering of exact values."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(show(v) for v in x) + ")"
    if isinstance(x, AffineWeight):
        return f"{show(x.finite)} + {x.level}Λ0 + {x.degree}δ"
    if isinstance(x, AffineRoot):
        return f"{show(x.finite)} + {x.n}δ"
    return str(x)


# --- reports -----------------------------------------------------------------------

@dataclass
class CaseReport:
    algebra: str
    m: int | None
    p: int | None
    checks: list[Check] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "m": self.m,
            "p": self.p,
            "checks": [{"name": c.name, "pass": c.passed, "lhs": c.lhs, "rhs": c.rhs} for c in self.checks],
            "caveats": list(self.caveats),
        }


@dataclass
class RunReport:
    command: str
    cases: list[CaseReport] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)
    tool_version: str = __version__

    @property
    def summary(self) -> dict:
        checks = [c for case in self.cases for c in case.checks]
        passed = sum(c.passed for c in checks)
        return {"passed": passed, "failed": len(checks) - passed, "skipped": 0}

    def sort(self) -> None:
        self.cases.sort(key=lambda c: (c.algebra, -2 if c.m is None else c.m))
        for c in self.cases:
            c.checks.sort(key=lambda ch: ch.name)

    def as_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "command": self.command,
            "cases": [c.as_dict() for c in self.cases],
            "summary": self.summary,
            "caveats": list(self.caveats),
        }


def lemma_report(algebra: str, m: int, n_bound: int | None = None) -> CaseReport:
    r = verify_lemma(lemma_case(algebra, m), n_bound)
    return CaseReport(algebra, m, r.case.p, r.checks, r.caveats)


def cc_report(algebra: str) -> CaseReport:
    rs = build(algebra)
    checks = []
    for lv in vir25_levels(algebra):
        checks.append(Check(f"central_charge@{fmt_q(lv + rs.h_check)}", principal_cc(rs, lv) == TARGET_CC,
                            principal_cc(rs, lv), TARGET_CC))
    return CaseReport(algebra, None, None, checks)


def growth_report(algebra: str) -> CaseReport:
    rs = build(algebra)
    led = deligne_ledger(rs)
    diff = led[-1].value
    checks = [
        Check("growth_difference", diff == Fraction(2, 5), diff, Fraction(2, 5)),
        Check("growth_contradiction", contradiction_check(rs), reduced_inequality(rs), "1 ≤ 2/5 : false"),
    ]
    caveats = [f"{g.name} = {g.value} [{g.provenance}]" for g in led]
    return CaseReport(algebra, None, None, checks, caveats)


def condition2_report(algebra: str, m: int, height_bound: int, depth: int) -> CaseReport:
    check, found = condition2_bruteforce(build(algebra), m, height_bound, depth)
    return CaseReport(algebra, m, None, [check], [check.note + "; a negative is not a proof of incomparability"])


def run_verify(target: str, m: int | None = None, n_bound: int | None = None, depth: int = 2,
               height_bound: int = 6) -> RunReport:
    report = RunReport(f"verify {target}" + ("" if m is None else f" --m {m}"))
    if target == "all":
        for case in all_cases():
            report.cases.append(lemma_report(case.algebra, case.m, n_bound))
        for name in DELIGNE_SERIES:
            report.cases.append(cc_report(name))
        for name in DELIGNE_DE:
            report.cases.append(growth_report(name))
        report.cases.append(condition2_report("d4", 0, height_bound, depth))
    else:
        rs = build(target)
        rows = [mm for (a, mm) in TABLE_ROWS if a == target]
        if m is not None:
            if rows and m not in rows:
                raise ValueError(f"{target} has no tabulated row m={m} (rows: {rows})")
            rows = [m] if rows else []
        for mm in rows:
            report.cases.append(lemma_report(target, mm, n_bound))
        if not rows and m is not None:
            report.cases.append(CaseReport(target, m, None, [condition3(rs, k_of_m(rs, m))]))
        report.cases.append(cc_report(target))
        if target in DELIGNE_DE:
            report.cases.append(growth_report(target))
    report.caveats = [
        "bounded searches report 'not found within bounds', never incomparability",
        "the antidominant representative is the unique element of the closed antidominant shifted chamber",
    ]
    report.sort()
    return report


# --- commands ----------------------------------------------------------------------

def _expansion(rs: RootSystem, v) -> str:
    return rs.format_root(v)


def info_dict(rs: RootSystem) -> dict:
    return {
        "algebra": rs.name,
        "rank": rs.rank,
        "h": rs.h,
        "h_check": rs.h_check,
        "lacing": rs.lacing,
        "positive_roots": len(rs.positive_roots),
        "two_rho": _expansion(rs, tuple(2 * c for c in rs.rho)),
        "rho_check": _expansion(rs, rs.rho_check),
        "theta": _expansion(rs, rs.theta),
    }


def levels_dict(rs: RootSystem, m: int) -> dict:
    k = k_of_m(rs, m)
    out: dict[str, Any] = {"algebra": rs.name, "m": m, "k": k, "k_plus_h_check": k + rs.h_check,
                           "k_admissible": is_admissible(rs, k)}
    try:
        out["principal_cc_k"] = principal_cc(rs, k)
    except CriticalLevelError:
        out["principal_cc_k"] = None
    try:
        lv = ff_dual(rs, k)
    except ValueError:
        out.update(l=None, l_plus_h_check=None, l_admissible=None, principal_cc_l=None)
        return out
    out.update(l=lv, l_plus_h_check=lv + rs.h_check, l_admissible=is_admissible(rs, lv),
               principal_cc_l=principal_cc(rs, lv))
    return out


def tables_data() -> dict:
    t1 = [{"algebra": a, "m": m, "l_plus_h_check": v} for a, m, v in table1()]
    lemma: dict[str, Any] = {}
    for case in all_cases():
        rs = case.rs
        entry = lemma.setdefault(case.algebra, {
            "two_rho": _expansion(rs, tuple(2 * c for c in rs.rho)),
            "theta": _expansion(rs, rs.theta),
            "rows": [],
        })
        entry["rows"].append({
            "m": case.m,
            "p": case.p,
            "y": case.y.format(rs),
            "beta": f"y(α{case.beta_index})={format_finite_root(rs, case.beta.finite)}",
        })
    return {"table1": t1, "lemma": lemma}


def tables_markdown(data: dict) -> str:
    lines = ["## Principal levels l(m) + h^vee", ""]
    algs = list(dict.fromkeys(r["algebra"] for r in data["table1"]))
    lines.append("| | " + " | ".join(algs) + " |")
    lines.append("|---" * (len(algs) + 1) + "|")
    ms = sorted({r["m"] for r in data["table1"]})
    cell = {(r["algebra"], r["m"]): str(r["l_plus_h_check"]) for r in data["table1"]}
    for m in ms:
        lines.append(f"| l({m}) + h^vee | " + " | ".join(cell.get((a, m), "") for a in algs) + " |")
    for alg, entry in data["lemma"].items():
        lines += ["", f"## {alg}", "", "| m | p | y | β |", "|---|---|---|---|"]
        for r in entry["rows"]:
            lines.append(f"| {r['m']} | {r['p']} | {r['y']} | {r['beta']} |")
        lines += ["", f"2ρ = {entry['two_rho']}", f"θ = {entry['theta']}"]
    return "\n".join(lines) + "\n"


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}; expected num/den") from None


def _parse_labels(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(t) for t in text.replace(" ", "").split(",") if t)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed label list {text!r}") from None


def linkage_result(rs: RootSystem, k: Fraction, lam_labels, mu_labels, depth: int, bound: int) -> dict:
    """Search for chains placing mu below lam, both weight-wise and character-wise."""
    if len(lam_labels) != rs.rank or len(mu_labels) != rs.rank:
        raise ValueError(f"{rs.name} needs {rs.rank} Dynkin labels")
    lam, mu = rs.from_labels(lam_labels), rs.from_labels(mu_labels)
    direct = kk_precedes(rs, affinize(rs, k, lam), affinize(rs, k, mu), depth, bound)
    chi_l, chi_m = central_char_rep(rs, k, lam), central_char_rep(rs, k, mu)
    cert = wprec_certificate(rs, k, chi_m, chi_l, depth, bound)
    bounds = f"depth <= {depth}, delta-coefficient <= {bound}"
    out: dict[str, Any] = {
        "algebra": rs.name,
        "k": k,
        "lambda": lam,
        "mu": mu,
        "h_lambda": h_principal(rs, k, lam),
        "h_mu": h_principal(rs, k, mu),
        "same_character": chi_l == chi_m,
        "weight_chain": None if direct is None else direct.describe(rs),
        "character_chain": None if cert is None else cert.chain.describe(rs),
        "caveats": [],
    }
    if direct is None:
        out["caveats"].append(f"no weight chain found within {bounds}")
    if cert is None:
        out["caveats"].append(f"no character-order certificate found within {bounds}")
    return out


def _print_steps(title: str, steps) -> None:
    if steps is None:
        print(f"{title}: not found within bounds")
        return
    print(f"{title}: {len(steps)} step(s)")
    for s in steps:
        print(f"  β = {s['beta']}, n = {s['n']}: 2(β|λ+ρ̂) = {s['lhs']}, n(β|β) = {s['rhs']}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="walab", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="Coxeter data, rho, rho-check, theta")
    p.add_argument("algebra")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("levels", help="k(m), l(m), admissibility and central charges")
    p.add_argument("algebra")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tables", help="level table and the integral-base tables")
    p.add_argument("--format", choices=("md", "json"), default="md")

    p = sub.add_parser("verify", help="run the certificate suite")
    p.add_argument("target", nargs="?", default="all")
    p.add_argument("--m", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--bound", type=int, default=None, help="delta-coefficient bound for base checks (default 2p)")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--height-bound", type=int, default=6)

    p = sub.add_parser("linkage", help="Kac-Kazhdan chain search between two weights")
    p.add_argument("algebra")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=_parse_rational, help="level as num/den")
    g.add_argument("--m", type=int, help="use the principal level l(m)")
    p.add_argument("--lambda", dest="lam", type=_parse_labels, required=True, help="Dynkin labels, comma separated")
    p.add_argument("--mu", type=_parse_labels, required=True)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--bound", type=int, default=64)
    p.add_argument("--json", action="store_true")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except (UnsupportedAlgebraError, CriticalLevelError, ValueError) as exc:
        ap.error(str(exc))
    return 2


def _dispatch(args) -> int:
    if args.command == "info":
        d = info_dict(build(args.algebra))
        if args.json:
            print(dumps(d))
        else:
            for key, val in d.items():
                print(f"{key}: {val}")
        return 0

    if args.command == "levels":
        d = levels_dict(build(args.algebra), args.m)
        if args.json:
            print(dumps(d))
        else:
            for key, val in d.items():
                print(f"{key}: {'-' if val is None else val}")
        return 0

    if args.command == "tables":
        data = tables_data()
        if args.format == "json":
            print(dumps(data))
        else:
            sys.stdout.write(tables_markdown(data))
        return 0

    if args.command == "verify":
        rep = run_verify(args.target, args.m, args.bound, args.depth, args.height_bound)
        if args.json:
            print(dumps(rep.as_dict()))
        else:
            for case in rep.cases:
                tag = case.algebra + ("" if case.m is None else f" m={case.m}")
                for c in case.checks:
                    print(f"{'PASS' if c.passed else 'FAIL'} {tag} {c.name}: {show(c.lhs)} vs {show(c.rhs)}")
                for note in case.caveats:
                    print(f"  note: {note}")
            s = rep.summary
            print(f"passed {s['passed']}, failed {s['failed']}, skipped {s['skipped']}")
        return 0 if rep.summary["failed"] == 0 else 1

    if args.command == "linkage":
        rs = build(args.algebra)
        k = args.k if args.k is not None else ff_dual(rs, k_of_m(rs, args.m))
        res = linkage_result(rs, k, args.lam, args.mu, args.depth, args.bound)
        if args.json:
            print(dumps(res))
        else:
            print(f"{rs.name} at k = {k}: h_lambda = {res['h_lambda']}, h_mu = {res['h_mu']}, "
                  f"same character: {res['same_character']}")
            _print_steps("weight chain", res["weight_chain"])
            _print_steps("character chain", res["character_chain"])
            for c in res["caveats"]:
                print(f"note: {c}")
        return 0
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
