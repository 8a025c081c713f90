"""Root systems in orthogonal coordinates and Weyl-group reductions.

Everything here is exact: coordinates are :class:`fractions.Fraction` and the
Weyl-group loops run on integer-scaled copies through :mod:`lieindex.kernels`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cached_property, lru_cache, reduce
from math import lcm as _lcm
from typing import Iterable, Sequence

from . import kernels


class LieError(ValueError):
    """Invalid root-system request or weight."""



def lcm_denominators(values: Iterable[Q]) -> int:
    return reduce(_lcm, (Q(v).denominator for v in values), 1)


class Weight(tuple):
    """Immutable vector of exact rationals.

    ``+``, ``-`` and scalar ``*`` act coordinatewise (not as tuple concatenation
    or repetition).
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable = ()):
        return super().__new__(cls, (c if type(c) is Q else Q(c) for c in coords))

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls([0] * n)

    @classmethod
    def unit(cls, n: int, i: int, scale=1) -> "Weight":
        v = [0] * n
        v[i] = scale
        return cls(v)

    def _check(self, other):
        if len(self) != len(other):
            raise LieError(f"length mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other):
        self._check(other)
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, k):
        k = Q(k)
        return Weight(k * a for a in self)

    __rmul__ = __mul__

    def __str__(self) -> str:
        d = lcm_denominators(self)
        body = ",".join(str(int(c * d)) for c in self)
        return f"({body})" if d == 1 else f"1/{d}*({body})"

    def __repr__(self) -> str:
        return f"Weight({self})"

    def scaled_ok(self, scale: int) -> bool:
        return all((c * scale).denominator == 1 for c in self)

    def scaled_ints(self, scale: int) -> tuple[int, ...]:
        out = []
        for c in self:
            x = c * scale
            if x.denominator != 1:
                raise LieError(f"scale {scale} does not clear {self}")
            out.append(x.numerator)
        return tuple(out)


def inner(a: Sequence, b: Sequence) -> Q:
    """Euclidean product of two equal-length coordinate vectors."""
    if len(a) != len(b):
        raise LieError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum((Q(x) * y for x, y in zip(a, b)), Q(0))


def root_product_ratio(x: Sequence, y: Sequence, roots: Sequence[Sequence]) -> Q:
    """prod <x,a> / prod <y,a> over ``roots``, in integer arithmetic after clearing denominators."""
    s = lcm_denominators(itertools.chain(x, y, *roots))
    xi = [int(c * s) for c in x]
    yi = [int(c * s) for c in y]
    num = den = 1
    for a in roots:
        ai = [int(c * s) for c in a]
        num *= sum(p * q for p, q in zip(xi, ai))
        den *= sum(p * q for p, q in zip(yi, ai))
    return Q(num, den)


def coroot_pairing(w: Sequence, alpha: Sequence) -> Q:
    return 2 * inner(w, alpha) / inner(alpha, alpha)


@dataclass(frozen=True)
class Lattice:
    """Integer-scaled root data for the kernels (all vectors multiplied by ``scale``)."""

    scale: int
    simple: tuple
    norms: tuple
    positive: tuple
    rho: tuple


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    ambient_rank: int
    positive_roots: tuple[Weight, ...]
    simple_roots: tuple[Weight, ...]
    _lattices: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def rho(self) -> Weight:
        return half_sum_positive_roots(self)

    @cached_property
    def root_denominator(self) -> int:
        return lcm_denominators(c for a in self.positive_roots for c in a)

    def lattice(self, scale: int) -> Lattice:
        lat = self._lattices.get(scale)
        if lat is None:
            simple = tuple(a.scaled_ints(scale) for a in self.simple_roots)
            lat = Lattice(
                scale=scale,
                simple=simple,
                norms=tuple(sum(x * x for x in a) for a in simple),
                positive=tuple(a.scaled_ints(scale) for a in self.positive_roots),
                rho=self.rho.scaled_ints(scale) if self.rho.scaled_ok(scale) else None,
            )
            self._lattices[scale] = lat
        return lat

    def is_dominant(self, w: Sequence) -> bool:
        return all(inner(w, a) >= 0 for a in self.simple_roots)

    def is_integral(self, w: Sequence) -> bool:
        """Whether every coroot pairing of ``w`` is an integer."""
        return all(coroot_pairing(w, a).denominator == 1 for a in self.simple_roots)

    def components(self) -> list[tuple[str, tuple[int, ...], "RootSystem"]]:
        """Connected pieces of the root data by coordinate support.

        Returns ``(kind, coords, local_system)`` where kind is ``"roots"`` or
        ``"torus"``; a torus piece has no roots.
        """
        parent = list(range(self.ambient_rank))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a in self.positive_roots:
            support = [i for i, c in enumerate(a) if c]
            for i in support[1:]:
                parent[find(i)] = find(support[0])
        groups: dict[int, list[int]] = {}
        for i in range(self.ambient_rank):
            groups.setdefault(find(i), []).append(i)
        out = []
        for coords in sorted(groups.values()):
            pos = tuple(Weight(a[i] for i in coords) for a in self.positive_roots
                        if any(a[i] for i in coords))
            simple = tuple(Weight(a[i] for i in coords) for a in self.simple_roots
                           if any(a[i] for i in coords))
            kind = "roots" if pos else "torus"
            out.append((kind, tuple(coords), RootSystem(kind, len(coords), pos, simple)))
        return out


@dataclass(frozen=True)
class DominantResult:
    dominant: Weight
    sign: int
    singular: bool


# --- root generation -------------------------------------------------------

def _pm_pairs(n: int):
    for i, j in itertools.combinations(range(n), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [0] * n
                v[i], v[j] = si, sj
                yield v


def _all_roots(kind: str, r: int) -> tuple[int, list[list]]:
    """All roots (both signs) of a simple type in its standard ambient space."""
    h = Q(1, 2)
    if kind == "A":
        n = r + 1
        roots = []
        for i, j in itertools.permutations(range(n), 2):
            v = [0] * n
            v[i], v[j] = 1, -1
            roots.append(v)
        return n, roots
    if kind in "BCD":
        roots = list(_pm_pairs(r))
        if kind != "D":
            for i in range(r):
                for s in (1, -1):
                    v = [0] * r
                    v[i] = s if kind == "B" else 2 * s
                    roots.append(v)
        return r, roots
    if kind == "E8":
        roots = list(_pm_pairs(8))
        for eps in itertools.product((1, -1), repeat=8):
            if eps.count(-1) % 2 == 0:
                roots.append([e * h for e in eps])
        return 8, roots
    if kind == "E7":
        # A7 model inside the hyperplane sum(x) = 0 of R^8
        _, roots = _all_roots("A", 7)
        for plus in itertools.combinations(range(8), 4):
            roots.append([h if i in plus else -h for i in range(8)])
        return 8, roots
    if kind == "E6":
        _, e8 = _all_roots("E8", 8)
        return 8, [a for a in e8 if a[5] == a[6] == -a[7]]
    if kind == "F4":
        roots = list(_pm_pairs(4))
        for i in range(4):
            for s in (1, -1):
                v = [0] * 4
                v[i] = s
                roots.append(v)
        for eps in itertools.product((1, -1), repeat=4):
            roots.append([e * h for e in eps])
        return 4, roots
    if kind == "G2":
        roots = []
        for i, j in itertools.permutations(range(3), 2):
            v = [0] * 3
            v[i], v[j] = 1, -1
            roots.append(v)
        for i in range(3):
            for s in (1, -1):
                roots.append([s * (2 if k == i else -1) for k in range(3)])
        return 3, roots
    raise LieError(f"unsupported root system type {kind!r}")


_DEFAULT_CHAMBER = {
    "E8": (23, 6, 5, 4, 3, 2, 1, 0),
    "E7": (Q(47, 2), 6, 5, 4, 3, 2, 1, 0),
    "E6": (0, 1, 2, 3, 4, -4, -4, 4),
    "F4": (11, 5, 3, 1),
    "G2": (2, 1, -3),
}

_EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
# factors of a product may use the small cases B1, C1, D2
_MIN_FACTOR_RANK = {"A": 1, "B": 1, "C": 1, "D": 2}


def default_chamber(kind: str, r: int) -> tuple:
    if kind in _DEFAULT_CHAMBER:
        return _DEFAULT_CHAMBER[kind]
    if kind == "A":
        return tuple(range(r, -1, -1))
    if kind in "BC":
        return tuple(range(r, 0, -1))
    if kind == "D":
        return tuple(range(r - 1, -1, -1))
    raise LieError(f"unsupported root system type {kind!r}")


def _from_roots(label: str, n: int, roots: Iterable[Sequence], chamber: Sequence) -> RootSystem:
    chamber = Weight(chamber)
    if len(chamber) != n:
        raise LieError(f"chamber vector {chamber} has wrong length for ambient rank {n}")
    pos = []
    for a in roots:
        a = Weight(a)
        ip = inner(a, chamber)
        if ip == 0:
            raise LieError(f"chamber vector {chamber} is singular (orthogonal to {a})")
        if ip > 0:
            pos.append(a)
    pos.sort(key=lambda a: (-inner(a, chamber), a))
    pos_set = set(pos)
    decomposable = {a + b for a, b in itertools.combinations(pos, 2)}
    simple = tuple(a for a in pos if a not in decomposable)
    assert all(s in pos_set for s in simple)
    return RootSystem(label, n, tuple(pos), simple)


def _parse_label(label: str) -> list[tuple[str, int]]:
    factors = []
    for part in label.replace("×", "x").split("x"):
        part = part.strip()
        m = re.fullmatch(r"([A-GT])(\d+)", part)
        if not m:
            raise LieError(f"cannot parse root system label {label!r}")
        kind, r = m.group(1), int(m.group(2))
        if kind in "EFG":
            kind = part
            if kind not in _EXCEPTIONAL_RANK:
                raise LieError(f"unsupported exceptional type {part!r}")
        factors.append((kind, r))
    return factors


def _simple_factor(kind: str, r: int, chamber=None, min_rank=_MIN_RANK) -> RootSystem:
    if kind in _EXCEPTIONAL_RANK:
        if r != _EXCEPTIONAL_RANK[kind]:
            raise LieError(f"{kind} has rank {_EXCEPTIONAL_RANK[kind]}, got {r}")
        label = kind
    else:
        if kind not in min_rank:
            raise LieError(f"unsupported root system type {kind!r}")
        if r < min_rank[kind]:
            raise LieError(f"type {kind} requires rank >= {min_rank[kind]}, got {r}")
        label = f"{kind}{r}"
    chamber = tuple(Q(c) for c in (chamber if chamber is not None else default_chamber(kind, r)))
    return _cached_factor(kind, r, label, chamber)


@lru_cache(maxsize=None)
def _cached_factor(kind: str, r: int, label: str, chamber: tuple) -> RootSystem:
    n, roots = _all_roots(kind, r)
    return _from_roots(label, n, roots, chamber)


def build_root_system(type_label: str, rank_params: int | None = None, chamber=None) -> RootSystem:
    """Positive and simple roots of a classified type in orthogonal coordinates.

    ``type_label`` is ``"D"`` with ``rank_params=4``, or a full label such as
    ``"D4"``, ``"E8"`` or a product ``"D2xB1xT1"`` (factors laid out on
    consecutive coordinates; ``T1`` is a torus coordinate with no roots).
    ``chamber`` overrides the regular vector selecting the positive roots.
    """
    if rank_params is not None:
        factors = [(type_label, rank_params)]
    else:
        factors = _parse_label(type_label)
    if len(factors) == 1 and factors[0][0] != "T":
        kind, r = factors[0]
        return _simple_factor(kind, r, chamber)
    if chamber is not None:
        raise LieError("chamber override is only supported for simple types")
    return product_system(factors)


def product_system(factors: Sequence[tuple[str, int]], min_rank=_MIN_FACTOR_RANK) -> RootSystem:
    """Product of simple factors (and ``("T", k)`` torus blocks) on consecutive coordinates."""
    pieces = []
    for kind, r in factors:
        if kind == "T":
            pieces.append((f"T{r}", r, ()))
        else:
            sub = _simple_factor(kind, r, min_rank=min_rank)
            pieces.append((sub.type_label, sub.ambient_rank, sub))
    n = sum(width for _, width, _ in pieces)
    pos, simple, offset = [], [], 0
    for _, width, sub in pieces:
        if sub:
            def embed(a, off=offset, w=width):
                return Weight([0] * off + list(a) + [0] * (n - off - w))
            pos.extend(embed(a) for a in sub.positive_roots)
            simple.extend(embed(a) for a in sub.simple_roots)
        offset += width
    label = "x".join(name for name, _, _ in pieces)
    return RootSystem(label, n, tuple(pos), tuple(simple))


def half_sum_positive_roots(rs: RootSystem) -> Weight:
    """Half the sum of the positive roots."""
    total = Weight.zero(rs.ambient_rank)
    for a in rs.positive_roots:
        total = total + a
    return total * Q(1, 2)


# --- Weyl group ------------------------------------------------------------

def _check_len(rs: RootSystem, w: Sequence):
    if len(w) != rs.ambient_rank:
        raise LieError(f"weight {w} has length {len(w)}, expected {rs.ambient_rank}")


def make_dominant(rs: RootSystem, w: Sequence) -> DominantResult:
    """Move ``w`` into the closed fundamental chamber by simple reflections.

    ``sign`` is the parity of the reflections used (fixed to +1 when the result
    is singular).
    """
    w = Weight(w)
    _check_len(rs, w)
    if not rs.simple_roots:
        return DominantResult(w, 1, False)
    base = _lcm(rs.root_denominator, lcm_denominators(w))
    extra = lcm_denominators(coroot_pairing(w, a) for a in rs.simple_roots)
    lat = rs.lattice(base)
    u = w.scaled_ints(base * extra)
    d, nrefl, singular = kernels.reduce_dominant(u, lat.simple, lat.norms)
    dom = Weight(Q(x, base * extra) for x in d)
    return DominantResult(dom, 1 if singular or nrefl % 2 == 0 else -1, singular)


def weyl_orbit(rs: RootSystem, w: Sequence) -> list[Weight]:
    w = Weight(w)
    _check_len(rs, w)
    if not rs.simple_roots:
        return [w]
    base = _lcm(rs.root_denominator, lcm_denominators(w))
    extra = lcm_denominators(coroot_pairing(w, a) for a in rs.simple_roots)
    lat = rs.lattice(base)
    s = base * extra
    return [Weight(Q(x, s) for x in v) for v in kernels.orbit(w.scaled_ints(s), lat.simple, lat.norms)]


def dual_weight(rs: RootSystem, lam: Sequence) -> Weight:
    """Highest weight of the dual module, ``-w0(lam)``."""
    lam = Weight(lam)
    _check_len(rs, lam)
    if not rs.is_dominant(lam):
        raise LieError(f"{lam} is not dominant for {rs.type_label}")
    return make_dominant(rs, -lam).dominant
