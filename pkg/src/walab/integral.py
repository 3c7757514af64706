"""Integral root systems of the principal-level weight and the certificates
attached to them.

Throughout, ``Lambda = -(l + h^vee) rho^vee + l Lambda_0`` for the principal
level ``l = l(m)``, and ``l + h^vee = p/(p-1)``.  A :class:`LemmaCase` holds the
tabulated Weyl-group element ``y`` and the distinguished base element ``beta``;
the functions below re-derive everything that is claimed about them.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from fractions import Fraction
from typing import Any, Sequence

from .affine import (
    AffineRoot,
    AffineWeight,
    AffineWeylWord,
    RealRootReflect,
    SimpleReflect,
    Translate,
    act,
    format_finite_root,
    pair_coroot,
    rho_hat,
)
from .levels import NEGATIVE_RANGE, ff_dual, k_of_m
from .linkage import (
    central_char_rep,
    h_principal,
    pplus_in_dot_orbit,
    wprec_certificate,
)
from .rootsys import RootSystem, build, enum_pplus_cap_q, vadd, vec, vscale, vsub, zero


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: Any
    rhs: Any
    note: str = ""


# (algebra, m) -> (p, simple-reflection tail of y, index i with beta = y(alpha_i),
# simple roots subtracted from theta in the tabulated beta)
TABLE_ROWS: dict[tuple[str, int], tuple[int, tuple[int, ...], int, tuple[int, ...]]] = {
    ("d4", 0): (5, (2,), 2, (2,)),
    ("e6", 0): (10, (2, 4), 4, (2, 4)),
    ("e6", 1): (11, (2,), 2, (2,)),
    ("e7", 0): (15, (1, 3, 4), 4, (1, 2, 3)),
    ("e7", 1): (16, (1, 3), 3, (1, 2)),
    ("e7", 2): (17, (1,), 1, (1,)),
    ("e8", 0): (25, (8, 7, 6, 5, 4), 4, (4, 5, 6, 7, 8)),
    ("e8", 1): (26, (8, 7, 6, 5), 5, (5, 6, 7, 8)),
    ("e8", 2): (27, (8, 7, 6), 6, (6, 7, 8)),
    ("e8", 3): (28, (8, 7), 7, (7, 8)),
    ("e8", 4): (29, (8,), 8, (8,)),
}

EXCLUSION_CAVEAT = "the unsubscripted dot action in the exclusion statement is read as the level-l action"


@dataclass(frozen=True)
class LemmaCase:
    algebra: str
    m: int
    p: int
    y: AffineWeylWord
    beta: AffineRoot
    beta_index: int
    printed_beta: tuple[int, ...] = ()

    @property
    def rs(self) -> RootSystem:
        return build(self.algebra)

    @property
    def level(self) -> Fraction:
        rs = self.rs
        return ff_dual(rs, k_of_m(rs, self.m))

    def printed_beta_root(self) -> AffineRoot:
        rs = self.rs
        v = list(rs.theta)
        for i in self.printed_beta:
            v[i - 1] -= 1
        return AffineRoot(vec(v), 0)


def _y_word(rs: RootSystem, p: int, tail: Sequence[int]) -> AffineWeylWord:
    atoms = [Translate(vscale(-1, rs.rho_check)), RealRootReflect(AffineRoot(vscale(-1, rs.theta), p - 1))]
    atoms += [SimpleReflect(i) for i in tail]
    return AffineWeylWord(tuple(atoms))


def lemma_case(algebra: str, m: int) -> LemmaCase:
    """The tabulated case for (algebra, m); ``beta`` is computed as y(alpha_i)."""
    try:
        p, tail, bi, printed = TABLE_ROWS[(algebra, m)]
    except KeyError:
        raise ValueError(f"no tabulated case for {algebra}, m={m}") from None
    rs = build(algebra)
    shifted = ff_dual(rs, k_of_m(rs, m)) + rs.h_check
    if shifted != Fraction(p, p - 1):
        raise ArithmeticError(f"{algebra}, m={m}: l + h^vee = {shifted}, expected {p}/{p - 1}")
    y = _y_word(rs, p, tail)
    beta = act(rs, y, AffineRoot(rs.simple_root(bi - 1), 0))
    return LemmaCase(algebra, m, p, y, beta, bi, printed)


def all_cases() -> list[LemmaCase]:
    return [lemma_case(a, m) for (a, m) in TABLE_ROWS]


@lru_cache(maxsize=64)
def lambda_hat(case: LemmaCase) -> AffineWeight:
    """Lambda + rho_hat, checked against ``-rho/(p-1) + p/(p-1) Lambda_0``."""
    rs = case.rs
    lv = case.level
    lam = AffineWeight(vscale(-(lv + rs.h_check), rs.rho_check), lv, 0)
    built = lam + rho_hat(rs)
    q = case.p - 1
    closed = AffineWeight(vscale(Fraction(-1, q), rs.rho), Fraction(case.p, q), 0)
    if built != closed:
        raise ArithmeticError(f"{case.algebra}, m={case.m}: Lambda + rho_hat mismatch {built} != {closed}")
    return built


def integral_pairing(case: LemmaCase, beta: AffineRoot) -> Fraction:
    return pair_coroot(case.rs, lambda_hat(case), beta)


def is_integral_root(case: LemmaCase, beta: AffineRoot) -> bool:
    return integral_pairing(case, beta).denominator == 1


def s_set(rs: RootSystem, q: int) -> list[AffineRoot]:
    """alpha_1, ..., alpha_rank, -theta + q delta."""
    if q < 1:
        raise ValueError("q must be >= 1")
    out = [AffineRoot(rs.simple_root(i), 0) for i in range(rs.rank)]
    out.append(AffineRoot(vscale(-1, rs.theta), q))
    return out


def candidate_base(case: LemmaCase) -> list[AffineRoot]:
    rs = case.rs
    out = []
    for s in s_set(rs, case.p - 1):
        img = act(rs, case.y, s)
        if not img.is_real or not rs.is_root(img.finite):
            raise ArithmeticError(f"y({s.format(rs)}) = {img} is not a real root")
        out.append(img)
    return out


# --- Cartan matrices -------------------------------------------------------------

def _cartan_of(rs: RootSystem, roots: Sequence[AffineRoot]) -> list[list[Fraction]]:
    return [[rs.pairing(a.finite, b.finite) for b in roots] for a in roots]


def affine_cartan(rs: RootSystem) -> list[list[Fraction]]:
    """Untwisted affine Cartan matrix, node 0 last."""
    n = rs.rank
    ext = [rs.simple_root(i) for i in range(n)] + [vscale(-1, rs.theta)]
    return [[rs.pairing(a, b) for b in ext] for a in ext]


def match_up_to_permutation(mat: Sequence[Sequence], target: Sequence[Sequence]) -> list[int] | None:
    """A permutation pi with mat[pi[i]][pi[j]] == target[i][j], or None."""
    n = len(target)
    if len(mat) != n:
        return None
    perm: list[int] = []
    used = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        for c in range(n):
            if used[c] or mat[c][c] != target[i][i]:
                continue
            if all(mat[c][perm[j]] == target[i][j] and mat[perm[j]][c] == target[j][i] for j in range(i)):
                used[c] = True
                perm.append(c)
                if rec(i + 1):
                    return True
                perm.pop()
                used[c] = False
        return False

    return list(perm) if rec(0) else None


def _solve_coords(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """Solve sum_i c_i rows[i] = rhs exactly; None when singular."""
    n = len(rows)
    a = [[Fraction(rows[j][i]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def _affine_vec(r: AffineRoot) -> list[Fraction]:
    return list(r.finite) + [Fraction(r.n)]


def integral_positive_roots(case: LemmaCase, n_bound: int) -> list[AffineRoot]:
    """Positive real roots with delta-coefficient <= n_bound that are integral for Lambda."""
    rs = case.rs
    lh = lambda_hat(case)
    out = []
    for a in rs.roots:
        alpha = vec(a)
        base_pair = rs.pairing(lh.finite, alpha)
        step = 2 / rs.norm2(alpha) * lh.level
        start = 0 if sum(alpha) > 0 else 1
        for n in range(start, n_bound + 1):
            if (base_pair + n * step).denominator == 1:
                out.append(AffineRoot(alpha, n))
    return out


def verify_base(case: LemmaCase, n_bound: int | None = None) -> list[Check]:
    """Integrality, affine Cartan type and bounded positivity of y(S_(p-1))."""
    rs = case.rs
    if n_bound is None:
        n_bound = 2 * case.p
    if n_bound < 2 * case.p:
        raise ValueError(f"n_bound must be >= 2p = {2 * case.p}")
    base = candidate_base(case)
    checks = []

    pairings = [integral_pairing(case, g) for g in base]
    bad = [g.format(rs) for g, v in zip(base, pairings) if v.denominator != 1]
    checks.append(Check("base_integral", not bad, pairings, "integers", f"non-integral: {bad}" if bad else ""))

    member = case.beta in base
    checks.append(Check("beta_in_base", member, case.beta.format(rs), [g.format(rs) for g in base],
                        "" if member else f"witness: {case.beta.format(rs)} is not y of any element of S"))

    perm = match_up_to_permutation(_cartan_of(rs, base), affine_cartan(rs))
    checks.append(Check("base_cartan_affine", perm is not None, _cartan_of(rs, base), affine_cartan(rs),
                        f"node order {perm}" if perm is not None else "no simultaneous permutation matches"))

    rows = [_affine_vec(g) for g in base]
    witness = None
    count = 0
    for r in integral_positive_roots(case, n_bound):
        count += 1
        coords = _solve_coords(rows, _affine_vec(r))
        if coords is None or any(c < 0 or c.denominator != 1 for c in coords):
            witness = (r.format(rs), coords)
            break
    checks.append(Check(
        "base_positive_decomposition", witness is None, 0 if witness is None else 1, 0,
        f"witness {witness[0]} has coordinates {witness[1]}" if witness else
        f"all {count} integral positive roots with delta-coefficient <= {n_bound} checked",
    ))
    return checks


def verify_findings(case: LemmaCase) -> list[Check]:
    """beta pairs to -1 and has degree 0; every other base element pairs to >= 1 with positive degree."""
    rs = case.rs
    base = candidate_base(case)
    others = [g for g in base if g != case.beta]
    bp = integral_pairing(case, case.beta)
    checks = [Check("beta_pairing", bp == -1, bp, -1)]
    op = {g.format(rs): integral_pairing(case, g) for g in others}
    low = [name for name, v in op.items() if v < 1]
    checks.append(Check("others_pairing", not low and len(others) == len(base) - 1,
                        min(op.values()), ">= 1", f"offending: {low}" if low else ""))
    checks.append(Check("beta_degree", case.beta.n == 0, case.beta.n, 0))
    od = {g.format(rs): g.n for g in others}
    low = [name for name, v in od.items() if v <= 0]
    checks.append(Check("others_degree", not low, min(od.values()), "> 0", f"offending: {low}" if low else ""))
    return checks


def condition3(rs: RootSystem, k) -> Check:
    """2 rho - (k + h^vee) theta has nonnegative simple-root coordinates."""
    coords = vsub(vscale(2, rs.rho), vscale(Fraction(k) + rs.h_check, rs.theta))
    return Check("condition3", all(c >= 0 for c in coords), coords, ">= 0")


def in_pplus_orbit(rs: RootSystem, level, lam: Sequence[Fraction]) -> bool:
    return bool(pplus_in_dot_orbit(rs, level, lam))


def verify_exclusion(case: LemmaCase) -> list[Check]:
    """The exclusion of the shifted beta weight from W o P_+, plus the checks
    that make the equality case of the conformal-weight bound visible."""
    rs = case.rs
    lv = case.level
    bbar = case.beta.finite
    literal = vadd(bbar, vscale(lv + rs.h_check, rs.rho_check))
    hits = pplus_in_dot_orbit(rs, lv, literal)
    checks = [Check("exclusion", not hits, len(hits), 0, EXCLUSION_CAVEAT)]
    hb = h_principal(rs, lv, bbar)
    checks.append(Check("dominant_partner_h_zero", hb == 0, hb, 0,
                        "weight beta-bar of s_beta o Lambda"))
    same = central_char_rep(rs, lv, bbar) == central_char_rep(rs, lv, zero(rs.rank))
    checks.append(Check("dominant_partner_trivial_character", same, same, True,
                        "beta is a finite root, so s_beta stays in the finite shifted orbit of 0"))
    zq = pplus_in_dot_orbit(rs, lv, zero(rs.rank), root_lattice=True)
    checks.append(Check("trivial_orbit_pplus_cap_q", zq == [zero(rs.rank)], zq, [zero(rs.rank)]))
    return checks


@dataclass
class LemmaReport:
    case: LemmaCase
    checks: list[Check] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_lemma(case: LemmaCase, n_bound: int | None = None) -> LemmaReport:
    rs = case.rs
    rep = LemmaReport(case)
    q = case.p - 1
    try:
        lh = lambda_hat(case)
        rep.checks.append(Check("lambda_hat", True, lh, (f"-rho/{q}", Fraction(case.p, q), 0)))
    except ArithmeticError as exc:
        rep.checks.append(Check("lambda_hat", False, str(exc), None))
        return rep
    rep.checks += verify_base(case, n_bound)
    rep.checks += verify_findings(case)
    rep.checks.append(condition3(rs, k_of_m(rs, case.m)))
    rep.checks += verify_exclusion(case)
    rep.caveats.append(f"base positivity checked only for delta-coefficient <= {n_bound or 2 * case.p}")
    rep.caveats.append(EXCLUSION_CAVEAT)
    printed = case.printed_beta_root()
    if printed != case.beta:
        note = "" if rs.is_root(printed.finite) else " (not a root)"
        rep.caveats.append(
            f"tabulated beta {format_finite_root(rs, printed.finite)}{note} differs from "
            f"y(alpha_{case.beta_index}) = {case.beta.format(rs)}; the computed value is used"
        )
    return rep


def condition2_bruteforce(
    rs: RootSystem,
    m: int,
    height_bound: int,
    depth: int,
    root_bound: int = 64,
) -> tuple[Check, list[dict]]:
    """Bounded search: every lambda in P_+ cap Q (height <= bound) comparable to
    chi_0 must have h_lambda > 0 unless lambda = 0."""
    if rs.name not in ("a1", "a2", "d4"):
        raise ValueError("brute-force condition (2) needs a full Weyl orbit; use a1, a2 or d4")
    lv = ff_dual(rs, k_of_m(rs, m))
    chi0 = central_char_rep(rs, lv, zero(rs.rank))
    found = []
    for lam in enum_pplus_cap_q(rs, height_bound):
        if not any(lam):
            continue
        chi = central_char_rep(rs, lv, lam)
        cert = wprec_certificate(rs, lv, chi0, chi, depth, root_bound)
        if cert is None:
            cert = wprec_certificate(rs, lv, chi, chi0, depth, root_bound)
        if cert is not None:
            found.append({"lambda": lam, "h": h_principal(rs, lv, lam), "steps": len(cert.chain.steps)})
    bad = [f for f in found if f["h"] <= 0]
    check = Check(
        "condition2_bruteforce", not bad, len(found), f"all h > 0 (violations: {len(bad)})",
        f"bounded search: height <= {height_bound}, depth <= {depth}, delta-coefficient <= {root_bound}",
    )
    return check, found


def condition3_ranges() -> list[tuple[str, int, Check]]:
    out = []
    for name, ms in NEGATIVE_RANGE.items():
        rs = build(name)
        for m in ms:
            out.append((name, m, condition3(rs, k_of_m(rs, m))))
    return out


def corrupt(case: LemmaCase, beta: AffineRoot) -> LemmaCase:
    """A copy of ``case`` with a different distinguished root (negative controls)."""
    return replace(case, beta=beta)
