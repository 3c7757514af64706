"""Shifted Weyl action, central characters, conformal weights and
Kac-Kazhdan chains for principal W-algebras.

All searches here are bounded.  A returned chain is a certificate that is
re-verified exactly; ``None``/``False`` only means "not found within the
stated bounds".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .affine import AffineRoot, AffineWeight, affine_inner, rho_hat
from .levels import CriticalLevelError, _nc
from .rootsys import RootSystem, Vec, shifted_extreme, vadd, vec, vscale, vsub

WEYL_ORDER = {
    "a1": 2,
    "a2": 6,
    "g2": 12,
    "d4": 192,
    "f4": 1152,
    "e6": 51840,
    "e7": 2903040,
    "e8": 696729600,
}
FULL_ORBIT_LIMIT = 51840


def dot_shift(rs: RootSystem, k) -> Vec:
    """rho - (k + h^vee) rho^vee."""
    return vsub(rs.rho, vscale(Fraction(k) + rs.h_check, rs.rho_check))


def shifted_dot(rs: RootSystem, k, word: Sequence[int], lam: Sequence[Fraction]) -> Vec:
    """w o_k lam for w = s_{word[0]} s_{word[1]} ... (1-based simple indices)."""
    s = dot_shift(rs, k)
    x = vadd(lam, s)
    for i in reversed(word):
        x = rs.simple_reflect(i - 1, x)
    return vsub(x, s)


@dataclass(frozen=True)
class CentralCharacter:
    algebra: str
    k: Fraction
    rep: Vec
    h: Fraction = field(compare=False)

    def __str__(self) -> str:
        return f"χ[{self.algebra}, k={self.k}, rep={tuple(str(c) for c in self.rep)}]"


def central_char_rep(rs: RootSystem, k, lam: Sequence[Fraction]) -> CentralCharacter:
    """Canonical antidominant representative of the W o_k orbit of ``lam``."""
    k = Fraction(k)
    _nc(rs, k)
    rep, _ = shifted_extreme(rs, vec(lam), dot_shift(rs, k), "antidominant")
    return CentralCharacter(rs.name, k, rep, h_principal(rs, k, rep))


def delta_conf(rs: RootSystem, k, lam: Sequence[Fraction]) -> Fraction:
    """Delta_lam = (lam | lam + 2 rho) / (2 (k + h^vee))."""
    s = _nc(rs, k)
    return rs.inner(lam, vadd(lam, vscale(2, rs.rho))) / (2 * s)


def h_principal(rs: RootSystem, k, lam: Sequence[Fraction]) -> Fraction:
    """h_lam = Delta_lam - (lam | rho^vee)."""
    return delta_conf(rs, k, lam) - rs.inner(lam, rs.rho_check)


def h_minimal(rs: RootSystem, k, lam: Sequence[Fraction]) -> Fraction:
    """Lowest conformal weight for the minimal reduction; both closed forms are
    evaluated and must agree."""
    s = _nc(rs, k)
    first = rs.inner(lam, vadd(lam, vscale(2, rs.rho))) / (2 * s) - rs.inner(lam, rs.theta) / 2
    second = (rs.norm2(lam) + rs.inner(lam, vsub(vscale(2, rs.rho), vscale(s, rs.theta)))) / (2 * s)
    if first != second:
        raise ArithmeticError(f"h_min closed forms disagree: {first} != {second}")
    return first


def conf_dim_identity(rs: RootSystem, k, lam: Sequence[Fraction]) -> bool:
    """h_lam == Delta_{lam - (k+h^vee) rho^vee} + (rho|rho^vee) - (k+h^vee)/2 |rho^vee|^2."""
    s = _nc(rs, k)
    shifted = vsub(lam, vscale(s, rs.rho_check))
    rhs = delta_conf(rs, k, shifted) + rs.inner(rs.rho, rs.rho_check) - s / 2 * rs.norm2(rs.rho_check)
    return h_principal(rs, k, lam) == rhs


def colored_partition_counts(colors: int, n_max: int) -> list[int]:
    """Coefficients of prod_{j>=1} (1 - q^j)^(-colors) up to q^n_max."""
    coeffs = [1] + [0] * n_max
    for _ in range(colors):
        for j in range(1, n_max + 1):
            for n in range(j, n_max + 1):
                coeffs[n] += coeffs[n - j]
    return coeffs


def verma_character(rs: RootSystem, k, lam: Sequence[Fraction], N: int) -> tuple[Fraction, list[int]]:
    """(h_lam, [c_0, ..., c_N]) with ch = sum_n c_n q^(h_lam + n)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return h_principal(rs, k, lam), colored_partition_counts(rs.rank, N)


# --- Kac-Kazhdan chains ---------------------------------------------------------

@dataclass(frozen=True)
class LinkageChain:
    source: AffineWeight
    target: AffineWeight
    steps: tuple[tuple[AffineRoot, int], ...] = ()

    def weights(self) -> list[AffineWeight]:
        out = [self.source]
        for beta, n in self.steps:
            out.append(out[-1] - AffineWeight(vscale(n, beta.finite), 0, n * beta.n))
        return out

    def verify(self, rs: RootSystem) -> bool:
        """Re-check 2(beta_i | lam_{i-1} + rho_hat) = n_i (beta_i|beta_i) for each step."""
        rh = rho_hat(rs)
        ws = self.weights()
        if ws[-1] != self.target:
            return False
        for (beta, n), lam in zip(self.steps, ws):
            if n <= 0 or not beta.is_real or not beta.is_positive():
                return False
            if 2 * affine_inner(rs, beta, lam + rh) != n * affine_inner(rs, beta, beta):
                return False
        return True

    def describe(self, rs: RootSystem) -> list[dict]:
        rh = rho_hat(rs)
        out = []
        for (beta, n), lam in zip(self.steps, self.weights()):
            out.append(
                {
                    "beta": beta.format(rs),
                    "n": n,
                    "lhs": 2 * affine_inner(rs, beta, lam + rh),
                    "rhs": n * affine_inner(rs, beta, beta),
                }
            )
        return out


def affinize(rs: RootSystem, k, lam: Sequence[Fraction]) -> AffineWeight:
    """lam - (k+h^vee) rho^vee + k Lambda_0 - Delta_{lam-(k+h^vee)rho^vee} delta."""
    s = _nc(rs, k)
    nu = vsub(vec(lam), vscale(s, rs.rho_check))
    return AffineWeight(nu, Fraction(k), -delta_conf(rs, k, nu))


def in_positive_cone(rs: RootSystem, diff: AffineWeight) -> bool:
    """Is a level-zero element a nonnegative integer combination of affine simple roots?"""
    if diff.level != 0:
        return False
    e = diff.degree
    if e < 0 or e.denominator != 1:
        return False
    for c, t in zip(diff.finite, rs.theta):
        m = c + e * t
        if m < 0 or m.denominator != 1:
            return False
    return True


def _step_candidates(rs: RootSystem, x: AffineWeight, budget: int, root_bound: int):
    """Positive real roots beta with <x, beta^vee> a positive integer, n*delta-coef <= budget."""
    level = x.level
    for j in range(0, min(budget, root_bound) + 1):
        roots = rs.positive_roots if j == 0 else rs.roots
        for a in roots:
            alpha = vec(a)
            n2 = rs.norm2(alpha)
            n = rs.pairing(x.finite, alpha) + j * (2 / n2) * level
            if n > 0 and n.denominator == 1 and n * j <= budget:
                yield AffineRoot(alpha, j), int(n)


def kk_precedes(
    rs: RootSystem,
    source: AffineWeight,
    target: AffineWeight,
    max_depth: int = 3,
    root_bound: int = 64,
) -> LinkageChain | None:
    """Search a Kac-Kazhdan chain from ``source`` down to ``target`` (so that
    target precedes source).  Breadth-first, so a returned chain is shortest."""
    if source.level != target.level:
        raise ValueError("source and target must have the same level")
    if source.level + rs.h_check == 0:
        raise CriticalLevelError("Kac-Kazhdan search at the critical level is not supported")
    if source == target:
        return LinkageChain(source, target, ())
    if not in_positive_cone(rs, source - target):
        return None
    rh = rho_hat(rs)
    frontier: deque = deque([(source, ())])
    seen = {source}
    for _ in range(max_depth):
        nxt: deque = deque()
        while frontier:
            lam, steps = frontier.popleft()
            budget = int((lam - target).degree)
            for beta, n in _step_candidates(rs, lam + rh, budget, root_bound):
                new = lam - AffineWeight(vscale(n, beta.finite), 0, n * beta.n)
                if new in seen or not in_positive_cone(rs, new - target):
                    continue
                chain_steps = steps + ((beta, n),)
                if new == target:
                    chain = LinkageChain(source, target, chain_steps)
                    if not chain.verify(rs):
                        raise AssertionError("internal error: chain failed re-verification")
                    return chain
                seen.add(new)
                nxt.append((new, chain_steps))
        frontier = nxt
        if not frontier:
            break
    return None


# --- the order on central characters -----------------------------------------

def dot_orbit(rs: RootSystem, k, lam: Sequence[Fraction], word_bound: int | None = None) -> list[Vec]:
    """Elements of W o_k lam.

    The full orbit when |W| <= 51840 (or ``word_bound`` is None and the group is
    small); otherwise the words of length <= ``word_bound`` applied to the
    dominant and antidominant representatives.
    """
    s = dot_shift(rs, k)
    lam = vec(lam)
    if word_bound is None:
        if WEYL_ORDER[rs.name] > FULL_ORBIT_LIMIT:
            word_bound = 6
    if word_bound is None:
        starts = [vadd(lam, s)]
        depth = None
    else:
        starts = [vadd(shifted_extreme(rs, lam, s, m)[0], s) for m in ("antidominant", "dominant")]
        depth = word_bound
    seen = set(starts)
    layer = list(starts)
    d = 0
    while layer and (depth is None or d < depth):
        nxt = []
        for x in layer:
            for i in range(rs.rank):
                y = rs.simple_reflect(i, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        layer = nxt
        d += 1
    return sorted(vsub(x, s) for x in seen)


@dataclass(frozen=True)
class OrderCertificate:
    lower: CentralCharacter
    upper: CentralCharacter
    upper_rep: Vec
    chain: LinkageChain


def wprec_certificate(
    rs: RootSystem,
    k,
    lower: CentralCharacter,
    upper: CentralCharacter,
    max_depth: int = 3,
    root_bound: int = 64,
    word_bound: int | None = None,
) -> OrderCertificate | None:
    """Certificate that ``lower`` precedes ``upper`` in the linkage order at level k."""
    k = Fraction(k)
    if lower.k != k or upper.k != k or lower.algebra != rs.name or upper.algebra != rs.name:
        raise ValueError("central characters must share the algebra and level")
    target = affinize(rs, k, lower.rep)
    for lam in dot_orbit(rs, k, upper.rep, word_bound):
        chain = kk_precedes(rs, affinize(rs, k, lam), target, max_depth, root_bound)
        if chain is not None:
            return OrderCertificate(lower, upper, lam, chain)
    return None


def wprec(rs: RootSystem, k, lower: CentralCharacter, upper: CentralCharacter, max_depth: int = 3,
          root_bound: int = 64, word_bound: int | None = None) -> bool:
    """Bounded decision of ``lower <=_k upper``; False means not found within bounds."""
    return wprec_certificate(rs, k, lower, upper, max_depth, root_bound, word_bound) is not None


def linkage_classes(
    rs: RootSystem,
    k,
    weights: Iterable[Sequence[Fraction]],
    max_depth: int = 3,
    root_bound: int = 64,
) -> list[list[Vec]]:
    """Classes of the transitive closure of one-step comparability among ``weights``."""
    chars = []
    for w in weights:
        c = central_char_rep(rs, k, w)
        if c not in chars:
            chars.append(c)
    parent = list(range(len(chars)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(chars)):
        for j in range(i + 1, len(chars)):
            if find(i) == find(j):
                continue
            if wprec(rs, k, chars[i], chars[j], max_depth, root_bound) or wprec(
                rs, k, chars[j], chars[i], max_depth, root_bound
            ):
                parent[find(i)] = find(j)
    groups: dict[int, list[Vec]] = {}
    for i, c in enumerate(chars):
        groups.setdefault(find(i), []).append(c.rep)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


# --- P_+ membership of shifted orbits -----------------------------------------

def _dominant_integral_with_norm(rs: RootSystem, shift: Vec, target_norm: Fraction):
    """Dominant integral mu with |mu + shift|^2 == target_norm."""
    n = rs.rank
    fund = [rs.fundamental_weight(i) for i in range(n)]
    G = [[rs.inner(fund[i], fund[j]) for j in range(n)] for i in range(n)]
    sn = rs.norm2(shift)
    # |mu| <= |mu + shift| + |shift|, so |mu|^2 <= 2(target + |shift|^2)
    bound = 2 * (target_norm + sn)
    lin = [rs.inner(fund[i], shift) for i in range(n)]

    def rec(i, labels, q):
        if i == n:
            val = q + 2 * sum(c * l for c, l in zip(labels, lin)) + sn
            if val == target_norm:
                yield tuple(labels)
            return
        c = 0
        while True:
            # G has positive entries, so the partial quadratic form only grows
            extra = c * c * G[i][i] + 2 * c * sum(labels[j] * G[j][i] for j in range(i))
            if q + extra > bound:
                break
            yield from rec(i + 1, labels + [c], q + extra)
            c += 1

    for labels in rec(0, [], Fraction(0)):
        yield rs.from_labels(labels)


def pplus_in_dot_orbit(
    rs: RootSystem, k, lam: Sequence[Fraction], root_lattice: bool = False, method: str = "auto"
) -> list[Vec]:
    """All dominant integral weights in W o_k lam (only those in Q if ``root_lattice``).

    Exact.  If lam + shift is integral then every orbit element differs from
    lam by an element of Q, so a non-integral shift rules out P_+ at once.
    Otherwise ``method="orbit"`` filters the full orbit, and ``method="norm"``
    uses |mu + shift| = |lam + shift| to list finitely many dominant integral
    candidates and compares canonical antidominant representatives.  "auto"
    takes the full orbit for groups of order <= 1152.
    """
    if method not in ("auto", "orbit", "norm"):
        raise ValueError(f"unknown method {method!r}")
    s = dot_shift(rs, k)
    lam = vec(lam)
    x = vadd(lam, s)
    if rs.is_integral(x) and not rs.is_integral(s):
        return []
    if method == "auto":
        method = "orbit" if WEYL_ORDER[rs.name] <= 1152 else "norm"
    if method == "orbit":
        cands = (mu for mu in dot_orbit(rs, k, lam, None) if rs.is_dominant(mu) and rs.is_integral(mu))
        found = list(cands)
    else:
        target = central_char_rep(rs, k, lam).rep
        found = [
            mu
            for mu in _dominant_integral_with_norm(rs, s, rs.norm2(x))
            if shifted_extreme(rs, mu, s, "antidominant")[0] == target
        ]
    if root_lattice:
        found = [mu for mu in found if rs.in_root_lattice(mu)]
    return sorted(found)


def dot_orbit_meets_pplus(rs: RootSystem, k, lam: Sequence[Fraction]) -> Vec | None:
    """A dominant integral weight in W o_k lam, or None if there is none."""
    found = pplus_in_dot_orbit(rs, k, lam)
    return found[0] if found else None
