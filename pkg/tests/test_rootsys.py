from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from walab.rootsys import (
    AlgebraId,
    UnsupportedAlgebraError,
    build,
    enum_pplus_cap_q,
    reflect,
    shifted_extreme,
    vec,
)

from .conftest import random_weight

# Standard Lie-theoretic constants, independent of the construction.
KNOWN = {
    # name: (|positive roots|, h, h_check, lacing)
    "a1": (1, 2, 2, 1),
    "a2": (3, 3, 3, 1),
    "g2": (6, 6, 4, 3),
    "d4": (12, 6, 6, 1),
    "f4": (24, 12, 9, 2),
    "e6": (36, 12, 12, 1),
    "e7": (63, 18, 18, 1),
    "e8": (120, 30, 30, 1),
}


def test_known_constants(rs):
    npos, h, hv, lacing = KNOWN[rs.name]
    assert len(rs.positive_roots) == npos
    assert (rs.h, rs.h_check, rs.lacing) == (h, hv, lacing)


def test_positive_root_count_is_rank_times_h_over_two(rs):
    assert 2 * len(rs.positive_roots) == rs.rank * rs.h


def test_highest_root_is_long_and_dominant(rs):
    assert rs.norm2(rs.theta) == 2
    assert rs.is_dominant(rs.theta)
    assert sum(rs.theta) == rs.h - 1


@pytest.mark.parametrize(
    "name, two_rho, theta",
    [
        ("d4", (6, 10, 6, 6), (1, 2, 1, 1)),
        ("e6", (16, 22, 30, 42, 30, 16), (1, 2, 2, 3, 2, 1)),
        ("e7", (34, 49, 66, 96, 75, 52, 27), (2, 2, 3, 4, 3, 2, 1)),
        ("e8", (92, 136, 182, 270, 220, 168, 114, 58), (2, 3, 4, 6, 5, 4, 3, 2)),
    ],
)
def test_tabulated_expansions(name, two_rho, theta):
    rs = build(name)
    assert tuple(2 * c for c in rs.rho) == vec(two_rho)
    assert rs.theta == vec(theta)


def test_e8_highest_root_printed_with_two_alpha2_is_not_a_root():
    rs = build("e8")
    assert not rs.is_root((2, 2, 4, 6, 5, 4, 3, 2))


def test_rho_pairs_to_one_with_simple_coroots(rs):
    assert rs.labels(rs.rho) == (1,) * rs.rank
    for i in range(rs.rank):
        assert rs.inner(rs.simple_root(i), rs.rho_check) == 1


def test_dual_coxeter_from_rho(rs):
    assert rs.inner(rs.rho, rs.theta) + 1 == rs.h_check


def test_fundamental_weights_have_unit_labels(rs):
    for i in range(rs.rank):
        assert rs.labels(rs.fundamental_weight(i)) == tuple(Fraction(int(j == i)) for j in range(rs.rank))


def test_g2_and_f4_normalization():
    g2 = build("g2")
    assert g2.norm2(g2.simple_root(0)) == Fraction(2, 3)
    assert g2.theta == vec((3, 2))
    f4 = build("f4")
    assert f4.inner(f4.simple_root(2), f4.simple_root(3)) == Fraction(-1, 2)
    assert f4.theta == vec((2, 3, 4, 2))


def test_roots_closed_under_simple_reflections(rs):
    roots = {vec(r) for r in rs.roots}
    for r in roots:
        for i in range(rs.rank):
            assert rs.simple_reflect(i, r) in roots


def test_reflect_rejects_non_roots():
    rs = build("a2")
    with pytest.raises(ValueError):
        reflect(rs, (1, 2), (1, 0))


def test_reflection_is_involutive_isometry(rs, rng):
    for _ in range(20):
        lam = random_weight(rng, rs.rank)
        mu = random_weight(rng, rs.rank)
        alpha = rng.choice(rs.roots)
        once = reflect(rs, alpha, lam)
        assert reflect(rs, alpha, once) == lam
        assert rs.inner(once, reflect(rs, alpha, mu)) == rs.inner(lam, mu)


@given(st.lists(st.fractions(max_denominator=7, min_value=-9, max_value=9), min_size=4, max_size=4))
def test_shifted_extreme_lands_in_closed_chamber(coords):
    rs = build("d4")
    shift = vec((Fraction(1, 3),) * 4)
    for mode, sign in (("antidominant", 1), ("dominant", -1)):
        rep, word = shifted_extreme(rs, coords, shift, mode)
        x = tuple(a + b for a, b in zip(rep, shift))
        assert all(sign * c <= 0 for c in rs.labels(x))
        y = tuple(a + b for a, b in zip(vec(coords), shift))
        for i in reversed(word):
            y = rs.simple_reflect(i - 1, y)
        assert y == x


def test_algebra_ids():
    assert str(AlgebraId.parse("E_8")) == "e8"
    assert build("D4") is build("d4")
    with pytest.raises(UnsupportedAlgebraError):
        build("b3")
    with pytest.raises(UnsupportedAlgebraError):
        AlgebraId.parse("nonsense")


def test_pplus_cap_q_d4_matches_bruteforce():
    rs = build("d4")
    got = enum_pplus_cap_q(rs, 6)
    brute = sorted(
        (vec(c) for c in product(range(7), repeat=4) if sum(c) <= 6 and rs.is_dominant(c)),
        key=lambda v: (sum(v), v),
    )
    assert got == brute
    assert got[0] == vec((0, 0, 0, 0)) and got[1] == rs.theta


def test_lattice_membership():
    g2 = build("g2")
    # the short coroot of g2 is 3 alpha_1
    assert g2.in_coroot_lattice((3, 0)) and not g2.in_coroot_lattice((1, 0))
    d4 = build("d4")
    assert d4.in_coweight_lattice(d4.fundamental_weight(0))
    assert not d4.in_root_lattice(d4.fundamental_weight(0))
