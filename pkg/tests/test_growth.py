from __future__ import annotations

from fractions import Fraction

import pytest

from walab.growth import (
    contradiction_check,
    deligne_ledger,
    growth_vir_minimal,
    growth_vir_universal,
    ledger_value,
    reduced_inequality,
)
from walab.levels import virasoro_c
from walab.rootsys import build

DE = ["d4", "e6", "e7", "e8"]


def test_minimal_model_growth():
    assert growth_vir_minimal(2, 5) == Fraction(2, 5)
    assert growth_vir_minimal(3, 5) == Fraction(3, 5)
    assert growth_vir_minimal(2, 3) == 0
    with pytest.raises(ValueError):
        growth_vir_minimal(4, 6)


@pytest.mark.parametrize("p, q", [(2, 5), (3, 5), (3, 4), (2, 7), (5, 6)])
def test_growth_is_effective_central_charge(p, q):
    # 1 - 24 h_min + c with h_min = (1 - (p-q)^2)/(4pq)
    h_min = Fraction(1 - (p - q) ** 2, 4 * p * q)
    assert growth_vir_minimal(p, q) == virasoro_c(p, q) - 24 * h_min


def test_universal_growth():
    assert growth_vir_universal() == 1


def test_sl2_identity():
    assert growth_vir_minimal(2, 5) + growth_vir_minimal(3, 5) == 1


@pytest.mark.parametrize("name", DE)
def test_ledger(name):
    rs = build(name)
    led = deligne_ledger(rs)
    assert ledger_value(led, f"wzw_level1({name})") - ledger_value(led, "minimal_w") == Fraction(2, 5)
    assert ledger_value(led, "coset") == rs.rank - 1
    assert all(g.provenance for g in led)


def test_ledger_values():
    assert ledger_value(deligne_ledger(build("d4")), "minimal_w") == Fraction(18, 5)
    assert ledger_value(deligne_ledger(build("e8")), "coset") == 7


@pytest.mark.parametrize("name", DE)
def test_contradiction(name):
    rs = build(name)
    assert contradiction_check(rs)
    assert reduced_inequality(rs) == "1 ≤ 2/5 : false"
    led = deligne_ledger(rs)
    gap = ledger_value(led, "minimal_w") + 1 - ledger_value(led, f"wzw_level1({name})")
    assert gap == Fraction(3, 5)


def test_ledger_rejects_other_algebras():
    with pytest.raises(ValueError):
        deligne_ledger(build("g2"))
