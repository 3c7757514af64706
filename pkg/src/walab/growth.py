"""Asymptotic-growth bookkeeping for the level-1 conformal embedding argument.

Each entry of the ledger records its value together with the identity that
produced it, so a report can replay the derivation line by line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .rootsys import RootSystem

DELIGNE_DE = ("d4", "e6", "e7", "e8")


@dataclass(frozen=True)
class GrowthConstant:
    name: str
    value: Fraction
    provenance: str = ""


def growth_vir_minimal(p: int, q: int) -> Fraction:
    """Growth of the (p, q) Virasoro minimal model: 1 - 6/(pq)."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError(f"(p, q) = ({p}, {q}) is not a minimal-model pair")
    return 1 - Fraction(6, p * q)


def growth_vir_universal() -> Fraction:
    return Fraction(1)


def _require_de(rs: RootSystem) -> None:
    if rs.name not in DELIGNE_DE:
        raise ValueError(f"the growth ledger is defined for {', '.join(DELIGNE_DE)}, not {rs.name}")


def deligne_ledger(rs: RootSystem) -> list[GrowthConstant]:
    """Ordered derivation of every growth constant in the argument."""
    _require_de(rs)
    g25 = growth_vir_minimal(2, 5)
    g35 = growth_vir_minimal(3, 5)
    lg = Fraction(rs.rank)
    ls = g25 + g35
    coset = lg - ls
    wk = g35 + coset
    return [
        GrowthConstant("vir_minimal(2,5)", g25, "1 - 6/(2*5)"),
        GrowthConstant("vir_minimal(3,5)", g35, "1 - 6/(3*5)"),
        GrowthConstant(f"wzw_level1({rs.name})", lg, "external standard: rank of a simply-laced level-1 model"),
        GrowthConstant("wzw_level1(sl2)", ls, "conformal extension of vir(2,5) x vir(3,5)"),
        GrowthConstant(f"coset({rs.name})", coset, f"wzw_level1({rs.name}) - wzw_level1(sl2)"),
        GrowthConstant(f"minimal_w({rs.name},k)", wk, f"vir_minimal(3,5) + coset({rs.name})"),
        GrowthConstant("difference", lg - wk, f"wzw_level1({rs.name}) - minimal_w({rs.name},k)"),
    ]


def ledger_value(ledger: list[GrowthConstant], prefix: str) -> Fraction:
    for g in ledger:
        if g.name.startswith(prefix):
            return g.value
    raise KeyError(prefix)


def contradiction_check(rs: RootSystem) -> bool:
    """True iff the hypothetical bound g_L1 >= g_W + g_universal_vir fails."""
    led = deligne_ledger(rs)
    lg = ledger_value(led, f"wzw_level1({rs.name})")
    wk = ledger_value(led, "minimal_w")
    return not (lg >= wk + growth_vir_universal())


def reduced_inequality(rs: RootSystem) -> str:
    """Normal form of the hypothetical bound after cancelling g_W on both sides."""
    led = deligne_ledger(rs)
    diff = ledger_value(led, "difference")
    lhs = growth_vir_universal()
    return f"{lhs} ≤ {diff} : {'true' if lhs <= diff else 'false'}"
