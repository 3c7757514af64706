"""Exact root systems for the Deligne exceptional series.

Every vector (root, weight, coweight) is a tuple of :class:`fractions.Fraction`
in the basis of simple roots, Bourbaki numbering, 1-based in names and
0-based in tuples.  The invariant form is normalized so that long roots have
square length 2.  Dynkin labels (coordinates in the fundamental-weight basis)
are available through :meth:`RootSystem.labels` / :meth:`RootSystem.from_labels`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]

__all__ = [
    "AlgebraId",
    "RootSystem",
    "UnsupportedAlgebraError",
    "Vec",
    "build",
    "inner",
    "reflect",
    "shifted_extreme",
    "enum_pplus_cap_q",
    "vec",
    "vadd",
    "vsub",
    "vscale",
    "zero",
    "DELIGNE_SERIES",
]

DELIGNE_SERIES = ("a1", "a2", "g2", "d4", "f4", "e6", "e7", "e8")

# Langlands-dual dual Coxeter numbers; g2 and f4 are self-dual as types.
_DUAL_H_CHECK = {"a1": 2, "a2": 3, "g2": 4, "d4": 6, "f4": 9, "e6": 12, "e7": 18, "e8": 30}


class UnsupportedAlgebraError(ValueError):
    pass


# --- small exact vector helpers -------------------------------------------

def vec(values: Iterable) -> Vec:
    return tuple(Fraction(v) for v in values)


def zero(n: int) -> Vec:
    return (Fraction(0),) * n


def vadd(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a: Sequence[Fraction]) -> Vec:
    c = Fraction(c)
    return tuple(c * x for x in a)


# --- identifiers ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class AlgebraId:
    family: str
    rank: int

    def __post_init__(self):
        if str(self) not in DELIGNE_SERIES:
            raise UnsupportedAlgebraError(
                f"{self.family}{self.rank} is not a member of the Deligne series "
                f"({', '.join(DELIGNE_SERIES)})"
            )

    @classmethod
    def parse(cls, text: "str | AlgebraId") -> "AlgebraId":
        if isinstance(text, AlgebraId):
            return text
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", str(text))
        if not m:
            raise UnsupportedAlgebraError(f"cannot parse algebra id {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family.lower()}{self.rank}"


def _gram(name: str) -> list[list[Fraction]]:
    """Gram matrix (alpha_i|alpha_j) of the simple roots, Bourbaki order."""
    F = Fraction
    if name == "g2":
        # alpha_1 short, alpha_2 long
        return [[F(2, 3), F(-1)], [F(-1), F(2)]]
    if name == "f4":
        return [
            [F(2), F(-1), F(0), F(0)],
            [F(-1), F(2), F(-1), F(0)],
            [F(0), F(-1), F(1), F(-1, 2)],
            [F(0), F(0), F(-1, 2), F(1)],
        ]
    edges = {
        "a1": [],
        "a2": [(1, 2)],
        "d4": [(1, 2), (2, 3), (2, 4)],
        "e6": [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
        "e7": [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
        "e8": [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
    }[name]
    n = int(name[1:])
    g = [[F(2) if i == j else F(0) for j in range(n)] for i in range(n)]
    for i, j in edges:
        g[i - 1][j - 1] = g[j - 1][i - 1] = F(-1)
    return g


def _solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vec:
    """Gauss-Jordan over the rationals; matrix must be square and invertible."""
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


@dataclass(frozen=True, eq=False)
class RootSystem:
    id: AlgebraId
    gram: tuple[tuple[Fraction, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    rho: Vec
    rho_check: Vec
    theta: Vec
    h: int
    h_check: int
    lacing: int
    dual_h_check: int
    _root_set: frozenset = field(repr=False)

    @property
    def rank(self) -> int:
        return self.id.rank

    @property
    def name(self) -> str:
        return str(self.id)

    @property
    def simply_laced(self) -> bool:
        return self.lacing == 1

    @property
    def symmetrizers(self) -> Vec:
        """d_i = (alpha_i|alpha_i)/2."""
        return tuple(self.gram[i][i] / 2 for i in range(self.rank))

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    # -- geometry ----------------------------------------------------------
    def inner(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
        g = self.gram
        return sum(
            (a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j]),
            Fraction(0),
        )

    def norm2(self, a: Sequence[Fraction]) -> Fraction:
        return _cached_norm2(self, tuple(a))

    def labels(self, v: Sequence[Fraction]) -> Vec:
        """Dynkin labels <v, alpha_i^vee>."""
        return tuple(
            sum((c * v[j] for j, c in enumerate(row) if c), Fraction(0)) for row in self.cartan
        )

    def label(self, v: Sequence[Fraction], i: int) -> Fraction:
        row = self.cartan[i]
        return sum((c * v[j] for j, c in enumerate(row) if c), Fraction(0))

    def from_labels(self, labels: Sequence) -> Vec:
        return _solve(self.cartan, [Fraction(x) for x in labels])

    def fundamental_weight(self, i: int) -> Vec:
        return self.from_labels([1 if j == i else 0 for j in range(self.rank)])

    def pairing(self, v: Sequence[Fraction], alpha: Sequence[Fraction]) -> Fraction:
        """<v, alpha^vee> = 2(v|alpha)/(alpha|alpha)."""
        return _cached_pairing(self, tuple(v), tuple(alpha))

    def coroot(self, alpha: Sequence[Fraction]) -> Vec:
        return vscale(Fraction(2) / self.norm2(alpha), alpha)

    def simple_root(self, i: int) -> Vec:
        return tuple(Fraction(int(j == i)) for j in range(self.rank))

    def simple_reflect(self, i: int, v: Sequence[Fraction]) -> Vec:
        c = self.label(v, i)
        if not c:
            return tuple(v)
        out = list(v)
        out[i] -= c
        return tuple(out)

    def is_root(self, v: Sequence) -> bool:
        return tuple(Fraction(x) for x in v) in self._root_set

    @property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        return self.positive_roots + tuple(tuple(-c for c in r) for r in self.positive_roots)

    @staticmethod
    def height(v: Sequence[Fraction]) -> Fraction:
        return sum(v, Fraction(0))

    def is_dominant(self, v: Sequence[Fraction]) -> bool:
        return all(x >= 0 for x in self.labels(v))

    def is_integral(self, v: Sequence[Fraction]) -> bool:
        return all(x.denominator == 1 for x in self.labels(v))

    def in_root_lattice(self, v: Sequence[Fraction]) -> bool:
        return all(Fraction(x).denominator == 1 for x in v)

    def in_coweight_lattice(self, v: Sequence[Fraction]) -> bool:
        return all(self.inner(v, self.simple_root(i)).denominator == 1 for i in range(self.rank))

    def in_coroot_lattice(self, v: Sequence[Fraction]) -> bool:
        # v = sum c_i alpha_i^vee  with alpha_i^vee = alpha_i / d_i
        return all((Fraction(x) * d).denominator == 1 for x, d in zip(v, self.symmetrizers))

    def format_root(self, v: Sequence, symbol: str = "α") -> str:
        parts = []
        for i, c in enumerate(v):
            c = Fraction(c)
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else str(mag)
            parts.append(f"{sign}{coef}{symbol}{i + 1}")
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


@lru_cache(maxsize=1 << 16)
def _cached_norm2(rs: "RootSystem", a: tuple) -> Fraction:
    return rs.inner(a, a)


@lru_cache(maxsize=1 << 16)
def _cached_pairing(rs: "RootSystem", v: tuple, alpha: tuple) -> Fraction:
    return 2 * rs.inner(v, alpha) / _cached_norm2(rs, alpha)


def _positive_roots(gram: list[list[Fraction]], cartan: list[list[int]]) -> list[tuple[int, ...]]:
    n = len(gram)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # alpha_i-string through beta: beta - r alpha_i ... beta + q alpha_i, r - q = <beta, alpha_i^vee>
                if beta == simple[i]:
                    continue
                r = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in found:
                        r += 1
                    else:
                        break
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                q = r - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
                        out.append(up)
        layer = sorted(nxt)
    return sorted(out, key=lambda r: (sum(r), tuple(-x for x in r)))


@lru_cache(maxsize=None)
def _build(name: str) -> RootSystem:
    aid = AlgebraId.parse(name)
    gram = _gram(name)
    n = aid.rank
    cartan = [[int(2 * gram[i][j] / gram[i][i]) for j in range(n)] for i in range(n)]
    pos = _positive_roots(gram, cartan)
    theta = vec(max(pos, key=sum))
    rho = _solve(cartan, [Fraction(1)] * n)
    # rho_check is the vector with (alpha_i | rho_check) = 1 for every simple root
    rho_check = _solve(gram, [Fraction(1)] * n)
    h = int(sum(theta)) + 1
    long_norm = max(gram[i][i] for i in range(n))
    short_norm = min(gram[i][i] for i in range(n))
    lacing = int(long_norm / short_norm)
    rs_roots = frozenset(vec(r) for r in pos) | frozenset(vec(-c for c in r) for r in pos)
    partial = RootSystem(
        id=aid,
        gram=tuple(tuple(r) for r in gram),
        cartan=tuple(tuple(r) for r in cartan),
        positive_roots=tuple(pos),
        rho=rho,
        rho_check=rho_check,
        theta=theta,
        h=h,
        h_check=0,
        lacing=lacing,
        dual_h_check=_DUAL_H_CHECK[name],
        _root_set=rs_roots,
    )
    h_check = int(partial.inner(rho, theta)) + 1
    object.__setattr__(partial, "h_check", h_check)
    return partial


def build(algebra: "str | AlgebraId") -> RootSystem:
    """Return the (cached, immutable) root system of a Deligne-series algebra."""
    return _build(str(AlgebraId.parse(algebra)))


def inner(rs: RootSystem, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return rs.inner(a, b)


def reflect(rs: RootSystem, alpha: Sequence, lam: Sequence[Fraction]) -> Vec:
    """s_alpha(lam) = lam - <lam, alpha^vee> alpha."""
    alpha = vec(alpha)
    if not rs.is_root(alpha):
        raise ValueError(f"{alpha} is not a root of {rs.name}")
    return vsub(lam, vscale(rs.pairing(lam, alpha), alpha))


def shifted_extreme(
    rs: RootSystem, lam: Sequence[Fraction], shift: Sequence[Fraction], mode: str = "antidominant"
) -> tuple[Vec, list[int]]:
    """Move ``lam + shift`` into the closed (anti)dominant chamber.

    Returns ``(rep, word)`` with ``rep = w(lam + shift) - shift`` where ``w`` is
    the product of simple reflections ``s_{word[0]} s_{word[1]} ...`` (1-based
    indices, applied right to left).  Walls (zero pairings) are never crossed,
    and the lowest violating index is reflected first, so the result is
    deterministic; the closed chamber meets each orbit exactly once, so ``rep``
    is canonical.
    """
    if mode not in ("dominant", "antidominant"):
        raise ValueError(f"unknown mode {mode!r}")
    sign = 1 if mode == "antidominant" else -1
    x = vadd(lam, shift)
    word: list[int] = []
    while True:
        for i in range(rs.rank):
            if sign * rs.label(x, i) > 0:
                x = rs.simple_reflect(i, x)
                word.insert(0, i + 1)
                break
        else:
            return vsub(x, shift), word


def enum_pplus_cap_q(rs: RootSystem, height_bound: int) -> list[Vec]:
    """Dominant weights in the root lattice with height <= ``height_bound``."""
    if height_bound < 0:
        raise ValueError("height_bound must be >= 0")
    out = []
    # dominant weights have nonnegative simple-root coordinates
    for coords in _compositions(rs.rank, height_bound):
        v = vec(coords)
        if rs.is_dominant(v):
            out.append(v)
    return sorted(out, key=lambda v: (sum(v), v))


def _compositions(parts: int, bound: int):
    if parts == 0:
        yield ()
        return
    for first in range(bound + 1):
        for rest in _compositions(parts - 1, bound - first):
            yield (first,) + rest
