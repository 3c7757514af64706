"""Untwisted affine weights, real affine roots and affine Weyl words.

An affine weight is ``finite + level*Lambda_0 + degree*delta``; an affine root is
``finite + n*delta``.  The invariant form is extended by ``(Lambda_0|delta) = 1``,
``(Lambda_0|Lambda_0) = (delta|delta) = 0`` and ``(h*|Lambda_0) = (h*|delta) = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .rootsys import RootSystem, Vec, vadd, vec, vscale, vsub, zero


@dataclass(frozen=True)
class AffineWeight:
    finite: Vec
    level: Fraction = Fraction(0)
    degree: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "finite", vec(self.finite))
        object.__setattr__(self, "level", Fraction(self.level))
        object.__setattr__(self, "degree", Fraction(self.degree))

    def __add__(self, other: "AffineWeight | AffineRoot") -> "AffineWeight":
        o = as_weight(other)
        return AffineWeight(vadd(self.finite, o.finite), self.level + o.level, self.degree + o.degree)

    def __sub__(self, other: "AffineWeight | AffineRoot") -> "AffineWeight":
        o = as_weight(other)
        return AffineWeight(vsub(self.finite, o.finite), self.level - o.level, self.degree - o.degree)

    def scaled(self, c) -> "AffineWeight":
        c = Fraction(c)
        return AffineWeight(vscale(c, self.finite), c * self.level, c * self.degree)


@dataclass(frozen=True)
class AffineRoot:
    finite: Vec
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "finite", vec(self.finite))
        if Fraction(self.n).denominator != 1:
            raise ValueError("delta-coefficient of an affine root must be an integer")
        object.__setattr__(self, "n", int(self.n))

    @property
    def is_real(self) -> bool:
        return any(self.finite)

    @property
    def is_imaginary(self) -> bool:
        return not self.is_real and self.n != 0

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(vscale(-1, self.finite), -self.n)

    def is_positive(self) -> bool:
        if self.n:
            return self.n > 0
        nz = [c for c in self.finite if c]
        return bool(nz) and nz[0] > 0

    def format(self, rs: RootSystem | None = None) -> str:
        if rs is not None and self.is_real:
            head = format_finite_root(rs, self.finite)
        else:
            head = "0" if not self.is_real else str(tuple(str(c) for c in self.finite))
        if not self.n:
            return head
        d = "δ" if abs(self.n) == 1 else f"{abs(self.n)}δ"
        if head == "0":
            return ("-" if self.n < 0 else "") + d
        return f"{head}{'+' if self.n > 0 else '-'}{d}"


def delta(rank: int) -> AffineRoot:
    return AffineRoot(zero(rank), 1)


def as_weight(x: "AffineWeight | AffineRoot") -> AffineWeight:
    if isinstance(x, AffineWeight):
        return x
    return AffineWeight(x.finite, 0, x.n)


def format_finite_root(rs: RootSystem, v: Sequence[Fraction]) -> str:
    """Write a root as ``θ-α_i-...`` when that is shorter, else in simple roots."""
    plain = rs.format_root(v)
    for sign, prefix in ((1, "θ"), (-1, "-θ")):
        rest = vsub(vscale(sign, rs.theta), v)  # v = sign*theta - rest
        if all(c >= 0 for c in rest) and all(Fraction(c).denominator == 1 for c in rest):
            terms = []
            for i, c in enumerate(rest):
                if c:
                    terms.append(f"-{'' if c == 1 else c}α{i + 1}")
            candidate = prefix + "".join(terms)
            if len(terms) < sum(1 for c in v if c):
                return candidate
    return plain


def affine_inner(rs: RootSystem, a: "AffineWeight | AffineRoot", b: "AffineWeight | AffineRoot") -> Fraction:
    a, b = as_weight(a), as_weight(b)
    return rs.inner(a.finite, b.finite) + a.level * b.degree + a.degree * b.level


def rho_hat(rs: RootSystem) -> AffineWeight:
    """rho + h^vee Lambda_0."""
    return AffineWeight(rs.rho, rs.h_check, 0)


def pair_coroot(rs: RootSystem, lam: AffineWeight, beta: AffineRoot) -> Fraction:
    """<lam, beta^vee> for a real affine root beta."""
    if not beta.is_real:
        raise ValueError("coroot pairing requires a real affine root")
    lam = as_weight(lam)
    n2 = rs.norm2(beta.finite)
    return rs.pairing(lam.finite, beta.finite) + beta.n * (2 / n2) * lam.level


def degree_pairing(beta: AffineRoot) -> int:
    """<beta, D>: the delta-coefficient."""
    return beta.n


# --- affine Weyl words ------------------------------------------------------

@dataclass(frozen=True)
class SimpleReflect:
    """s_i; index 0 is the affine simple root -theta + delta."""

    i: int

    def __str__(self) -> str:
        return f"s_{self.i}"


@dataclass(frozen=True)
class RealRootReflect:
    root: AffineRoot

    def __post_init__(self):
        if not self.root.is_real:
            raise ValueError("reflections need a real root")

    def label(self, rs: RootSystem) -> str:
        return f"s_{{{self.root.format(rs)}}}"


@dataclass(frozen=True)
class Translate:
    mu: Vec

    def __post_init__(self):
        object.__setattr__(self, "mu", vec(self.mu))

    def label(self, rs: RootSystem) -> str:
        v = self.mu
        if v == rs.rho_check:
            return "t_{ρ}"
        if v == vscale(-1, rs.rho_check):
            return "t_{-ρ}"
        return f"t_{{{rs.format_root(v)}}}"


Atom = Union[SimpleReflect, RealRootReflect, Translate]


@dataclass(frozen=True)
class AffineWeylWord:
    """Literal product of atoms; applied right to left, never reduced."""

    atoms: tuple[Atom, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))

    def __mul__(self, other: "AffineWeylWord") -> "AffineWeylWord":
        return AffineWeylWord(self.atoms + other.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def format(self, rs: RootSystem) -> str:
        out = []
        for a in self.atoms:
            out.append(str(a) if isinstance(a, SimpleReflect) else a.label(rs))
        return "".join(out) if out else "1"


def _simple_affine_root(rs: RootSystem, i: int) -> AffineRoot:
    if i == 0:
        return AffineRoot(vscale(-1, rs.theta), 1)
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple reflection index {i} out of range for {rs.name}")
    return AffineRoot(rs.simple_root(i - 1), 0)


def _check_translation(rs: RootSystem, mu: Vec) -> None:
    ok = rs.in_coweight_lattice(mu) if rs.simply_laced else rs.in_coroot_lattice(mu)
    if not ok:
        lattice = "coweight" if rs.simply_laced else "coroot"
        raise ValueError(f"translation vector {mu} is not in the {lattice} lattice of {rs.name}")


def _reflect(rs: RootSystem, beta: AffineRoot, x):
    if isinstance(x, AffineRoot):
        c = rs.pairing(x.finite, beta.finite) if x.is_real else Fraction(0)
        if not c:
            return x
        if c.denominator != 1:
            raise ArithmeticError("non-integral root pairing")
        return AffineRoot(vsub(x.finite, vscale(c, beta.finite)), x.n - int(c) * beta.n)
    c = pair_coroot(rs, x, beta)
    return AffineWeight(vsub(x.finite, vscale(c, beta.finite)), x.level, x.degree - c * beta.n)


def _translate(rs: RootSystem, mu: Vec, x):
    if isinstance(x, AffineRoot):
        return AffineRoot(x.finite, x.n - int(rs.inner(x.finite, mu)))
    lv = x.level
    return AffineWeight(
        vadd(x.finite, vscale(lv, mu)),
        lv,
        x.degree - (rs.inner(x.finite, mu) + Fraction(1, 2) * rs.norm2(mu) * lv),
    )


def act(rs: RootSystem, w: AffineWeylWord | Atom, x: AffineWeight | AffineRoot):
    """Apply ``w`` to an affine weight or root (rightmost atom first)."""
    atoms = w.atoms if isinstance(w, AffineWeylWord) else (w,)
    for a in reversed(atoms):
        if isinstance(a, SimpleReflect):
            x = _reflect(rs, _simple_affine_root(rs, a.i), x)
        elif isinstance(a, RealRootReflect):
            x = _reflect(rs, a.root, x)
        elif isinstance(a, Translate):
            _check_translation(rs, a.mu)
            x = _translate(rs, a.mu, x)
        else:
            raise TypeError(f"unknown atom {a!r}")
    return x
