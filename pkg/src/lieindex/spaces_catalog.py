"""Inner symmetric spaces G/K as shared-coordinate root data.

Each entry fixes a common maximal torus, the positive roots of G and K in the
same orthogonal coordinates, the irreducible summands of the complexified
isotropy module, and the twist used by the obstruction check.  Topological
facts (spin structure, Betti numbers, global definedness of the twisted spin
bundle) are stored with their citations rather than recomputed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction as Q

from .lie_core import LieError, RootSystem, Weight, build_root_system, product_system
from .reps import IrrepLabel, weyl_dim

_H = Q(1, 2)


class CatalogError(LieError):
    """Unknown case or parameters outside the allowed range."""


@dataclass(frozen=True)
class CaseMetadata:
    dimension: int
    b0: int
    b2: int
    is_spin: bool | None
    condition_b_global: bool
    locally_defined_twist: bool
    lattice: str  # character lattice of the maximal torus of G
    citations: tuple[str, ...] = ()


@dataclass(frozen=True)
class SymmetricSpaceCase:
    name: str
    params: tuple[tuple[str, int], ...]
    g: RootSystem
    k: RootSystem
    isotropy: tuple[IrrepLabel, ...]
    twist: IrrepLabel
    metadata: CaseMetadata

    @property
    def rho_g(self) -> Weight:
        return self.g.rho

    @property
    def rho_k(self) -> Weight:
        return self.k.rho

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return self.name + "(" + ",".join(f"{k}={v}" for k, v in self.params) + ")"

    @property
    def usable(self) -> bool:
        """Dimension divisible by 4; only then can the parity criterion apply."""
        return self.metadata.dimension % 4 == 0


def max_param() -> int:
    return int(os.environ.get("LIEINDEX_MAX_RANK", "12"))


def _bound(name: str, **params):
    top = max_param()
    for key, val in params.items():
        if not isinstance(val, int):
            raise CatalogError(f"{name}: parameter {key} must be an integer, got {val!r}")
        if val > top:
            raise CatalogError(
                f"{name}: parameter {key}={val} exceeds the bound {top} (set LIEINDEX_MAX_RANK to raise it)"
            )


def _vec(n: int, entries: dict[int, Q]) -> Weight:
    v = [Q(0)] * n
    for i, c in entries.items():
        v[i] = Q(c)
    return Weight(v)


def _with_sum(n: int, head: list, tail: dict[int, Q]) -> Weight:
    v = [Q(c) for c in head] + [Q(0)] * (n - len(head))
    for i, c in tail.items():
        v[i] += c
    return Weight(v)


# --- oriented real Grassmannians -------------------------------------------

_HS90 = "spin structure per [hs90]"


def gr_real_even(p: int, q_prime: int) -> SymmetricSpaceCase:
    """SO(2p+2q')/SO(2p)xSO(2q'), twist (q'-1)(e_1+..+e_p) + (p-2)e_{p+1}."""
    _bound("gr_real_even", p=p, q_prime=q_prime)
    if p < 2 or q_prime < 2:
        raise CatalogError("gr_real_even: needs p, q' >= 2 (p=1 or q'=1 is Hermitian symmetric)")
    n = p + q_prime
    g = build_root_system("D", n)
    k = product_system([("D", p), ("D", q_prime)])
    mu = _with_sum(n, [q_prime - 1] * p, {p: p - 2})
    iso = IrrepLabel(k, _vec(n, {0: 1, p: 1}))
    meta = CaseMetadata(
        dimension=4 * p * q_prime, b0=1, b2=0, is_spin=True, condition_b_global=True,
        locally_defined_twist=False, lattice="Z",
        citations=(_HS90, "tangent bundle is H (x) H' [besse, p.312]"),
    )
    return SymmetricSpaceCase("gr_real_even", (("p", p), ("q_prime", q_prime)), g, k, (iso,),
                              IrrepLabel(k, mu), meta)


def _gr_real_odd(name: str, p: int, q: int) -> SymmetricSpaceCase:
    m = (q - 1) // 2
    n = p + m
    g = build_root_system("B", n)
    k = product_system([("D", p), ("B", m)])
    mu = _with_sum(n, [Q(q, 2) - 1] * p, {p: p - 2})
    iso = IrrepLabel(k, _vec(n, {0: 1, p: 1}))
    meta = CaseMetadata(
        dimension=2 * p * q, b0=1, b2=0, is_spin=False, condition_b_global=True,
        locally_defined_twist=True, lattice="Z",
        citations=(_HS90 + " (not spin)",
                   "spin bundle of M times an odd tensor power of the spin bundle of H is global"),
    )
    return SymmetricSpaceCase(name, (("p", p), ("q", q)), g, k, (iso,), IrrepLabel(k, mu), meta)


def gr_real_oddq(p: int, q: int) -> SymmetricSpaceCase:
    """SO(2p+q)/SO(2p)xSO(q) with p even and q odd; twist (q/2-1)(e_1+..+e_p) + (p-2)e_{p+1}."""
    _bound("gr_real_oddq", p=p, q=q)
    if p < 2 or p % 2:
        raise CatalogError("gr_real_oddq: needs p even and >= 2")
    if q % 2 == 0 or q < 1:
        raise CatalogError("gr_real_oddq: needs q odd (even q is gr_real_even)")
    if q == 1:
        raise CatalogError("gr_real_oddq: q=1 rejected, the twist weight is no longer a highest weight")
    return _gr_real_odd("gr_real_oddq", p, q)


def gr_real_oddpq(p: int, q: int) -> SymmetricSpaceCase:
    """SO(2p+q)/SO(2p)xSO(q) with p and q both odd (dimension 4n+2); negative control."""
    _bound("gr_real_oddpq", p=p, q=q)
    if p < 3 or p % 2 == 0:
        raise CatalogError("gr_real_oddpq: needs p odd and >= 3")
    if q < 3 or q % 2 == 0:
        raise CatalogError("gr_real_oddpq: needs q odd and >= 3")
    return _gr_real_odd("gr_real_oddpq", p, q)


# --- exceptional spaces ----------------------------------------------------

def e8_spin16(k: int = 8) -> SymmetricSpaceCase:
    """E8/(Spin(16)/Z2); twist is the Cartan summand of Sym^{2k} of the vector bundle."""
    _bound("e8_spin16", k=k)
    if k < 0:
        raise CatalogError("e8_spin16: needs k >= 0")
    g = build_root_system("E8")
    kk = build_root_system("D8")
    iso = IrrepLabel(kk, [_H] * 8)
    meta = CaseMetadata(
        dimension=128, b0=1, b2=0, is_spin=True, condition_b_global=True,
        locally_defined_twist=False, lattice="E8",
        citations=(_HS90, "tangent bundle is the positive half-spin bundle of Spin(16)"),
    )
    return SymmetricSpaceCase("e8_spin16", (("k", k),), g, kk, (iso,),
                              IrrepLabel(kk, _vec(8, {0: 2 * k})), meta)


def f4_spin9() -> SymmetricSpaceCase:
    """Cayley plane F4/Spin(9); twist is the complexified vector bundle."""
    g = build_root_system("F4")
    kk = build_root_system("B4")
    iso = IrrepLabel(kk, [_H] * 4)
    meta = CaseMetadata(
        dimension=16, b0=1, b2=0, is_spin=True, condition_b_global=True,
        locally_defined_twist=False, lattice="F4",
        citations=(_HS90, "tangent bundle is the spin bundle of Spin(9) [besse, p.302]"),
    )
    return SymmetricSpaceCase("f4_spin9", (), g, kk, (iso,), IrrepLabel(kk, [1, 0, 0, 0]), meta)


def e7_su8() -> SymmetricSpaceCase:
    """E7/(SU(8)/Z2) in the A7 model (hyperplane sum(x)=0); twist 10 * standard weight.

    The isotropy module is the fourth exterior power of the standard module.
    """
    g = build_root_system("E7")
    kk = product_system([("A", 7)])
    std = Weight([1] + [0] * 7) - Weight([Q(1, 8)] * 8)
    iso = IrrepLabel(kk, [_H] * 4 + [-_H] * 4)
    meta = CaseMetadata(
        dimension=70, b0=1, b2=0, is_spin=None, condition_b_global=True,
        locally_defined_twist=True, lattice="E7adj",
        citations=("twist satisfies global definedness and odd index, but is not self-dual",),
    )
    return SymmetricSpaceCase("e7_su8", (), g, kk, (iso,), IrrepLabel(kk, std * 10), meta)


# --- Wolf spaces -----------------------------------------------------------

_LS94 = "b2 = 0 for positive quaternion-Kaehler manifolds other than Gr2(C^{n+2}) [ls94, Cor. 4.3]"


def _wolf_n(name: str, n: int):
    _bound(name, n=n)
    if n < 2:
        raise CatalogError(f"{name}: needs n >= 2 (the twist Sym^(n-2)H requires it)")


def hp_n(n: int) -> SymmetricSpaceCase:
    """HP^n = Sp(n+1)/Sp(n)xSp(1); coordinates 0..n-1 for Sp(n), n for Sp(1).

    The G-chamber puts the Sp(1) coordinate on top, so the Sp(1) root is the
    highest root of G.
    """
    _wolf_n("hp_n", n)
    g = build_root_system("C", n + 1, chamber=list(range(n, 0, -1)) + [n + 1])
    k = product_system([("C", n), ("C", 1)])
    iso = IrrepLabel(k, _vec(n + 1, {0: 1, n: 1}))
    meta = CaseMetadata(
        dimension=4 * n, b0=1, b2=0, is_spin=True, condition_b_global=True,
        locally_defined_twist=False, lattice="Z",
        citations=(_LS94, "HP^n is spin [s82, Prop. 2.3]", "E and H are global on HP^n [s82, Thm 6.3]"),
    )
    return SymmetricSpaceCase("hp_n", (("n", n),), g, k, (iso,),
                              IrrepLabel(k, _vec(n + 1, {n: n - 2})), meta)


def gr2_cn2(n: int) -> SymmetricSpaceCase:
    """Gr2(C^{n+2}) = U(n+2)/U(2)xU(n); coordinates 0,1 for U(2), 2..n+1 for U(n).

    The U(2) coordinates take the largest and smallest chamber values so that the
    quaternionic SU(2) is the highest-root SU(2) of G.
    """
    _wolf_n("gr2_cn2", n)
    size = n + 2
    g = build_root_system("A", n + 1, chamber=[n + 1, 0] + list(range(n, 0, -1)))
    k = product_system([("A", 1), ("A", n - 1)])
    isotropy = (
        IrrepLabel(k, _vec(size, {0: 1, size - 1: -1})),   # C^2 (x) (C^n)*
        IrrepLabel(k, _vec(size, {1: -1, 2: 1})),          # (C^2)* (x) C^n
    )
    meta = CaseMetadata(
        dimension=4 * n, b0=1, b2=1, is_spin=(n % 2 == 0), condition_b_global=True,
        locally_defined_twist=True, lattice="Z",
        citations=("b2 = 1 for Gr2(C^{n+2}) [ls94, Cor. 4.3]",
                   "quaternion-Kaehler spin iff n even [s82, Prop. 2.3]"),
    )
    return SymmetricSpaceCase("gr2_cn2", (("n", n),), g, k, isotropy,
                              IrrepLabel(k, _sym_h(size, n - 2)), meta)


def _sym_h(size: int, m: int) -> Weight:
    """Highest weight of Sym^m H for the quaternionic SU(2) inside U(2)."""
    return _vec(size, {0: Q(m, 2), 1: Q(-m, 2)})


# --- lookup ----------------------------------------------------------------

_FACTORIES = {
    "gr_real_even": (gr_real_even, ("p", "q_prime")),
    "gr_real_oddq": (gr_real_oddq, ("p", "q")),
    "gr_real_oddpq": (gr_real_oddpq, ("p", "q")),
    "e8_spin16": (e8_spin16, ("k",)),
    "f4_spin9": (f4_spin9, ()),
    "e7_su8": (e7_su8, ()),
    "hp_n": (hp_n, ("n",)),
    "gr2_cn2": (gr2_cn2, ("n",)),
}

_ALIASES = {
    "hp": "hp_n",
    "gr2": "gr2_cn2",
    "e8": "e8_spin16",
    "f4": "f4_spin9",
    "e7": "e7_su8",
}

DEFAULT_PARAMS = {
    "gr_real_even": {"p": 2, "q_prime": 2},
    "gr_real_oddq": {"p": 2, "q": 3},
    "gr_real_oddpq": {"p": 3, "q": 3},
    "e8_spin16": {"k": 8},
    "f4_spin9": {},
    "e7_su8": {},
    "hp_n": {"n": 2},
    "gr2_cn2": {"n": 2},
}


def canonical_name(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    key = _ALIASES.get(key, key)
    if key not in _FACTORIES:
        raise CatalogError(f"unknown case {name!r}; known: {', '.join(sorted(_FACTORIES))}")
    return key


def param_names(name: str) -> tuple[str, ...]:
    return _FACTORIES[canonical_name(name)][1]


def catalog_get(name: str, **params) -> SymmetricSpaceCase:
    """Build a catalog entry; missing parameters take their defaults."""
    key = canonical_name(name)
    factory, names = _FACTORIES[key]
    unknown = set(params) - set(names)
    if unknown:
        raise CatalogError(f"{key}: unknown parameter(s) {sorted(unknown)}; expected {list(names)}")
    merged = {**DEFAULT_PARAMS[key], **params}
    return factory(**merged)


def default_cases() -> list[SymmetricSpaceCase]:
    return [catalog_get(name) for name in _FACTORIES]


def twist_weight(case: SymmetricSpaceCase) -> IrrepLabel:
    return case.twist


def isotropy_dimension(case: SymmetricSpaceCase) -> int:
    return sum(weyl_dim(r) for r in case.isotropy)


def wolf_space_twist_summands(family: str, n: int) -> list[IrrepLabel]:
    """K-irreducible pieces of Sym^(n-2)H (x) TM on a Wolf space, via Clebsch-Gordan.

    The pieces are Sym^(n-1)H (x) E and Sym^(n-3)H (x) E, the latter dropped for n=2.
    On Gr2(C^{n+2}) the bundle E splits into two K-summands, so each piece
    contributes two labels.
    """
    key = canonical_name(family)
    if key not in ("hp_n", "gr2_cn2"):
        raise CatalogError(f"{family!r} is not a Wolf space family (hp_n, gr2_cn2)")
    if n < 2:
        raise CatalogError(f"{key}: needs n >= 2 (the twist Sym^(n-2)H requires it)")
    case = catalog_get(key, n=n)
    k = case.k
    size = k.ambient_rank
    out = []
    for m in (n - 1, n - 3):
        if m < 0:
            continue
        if key == "hp_n":
            out.append(IrrepLabel(k, _vec(size, {0: 1, n: m})))
        else:
            h = _sym_h(size, m)
            out.append(IrrepLabel(k, h + _vec(size, {0: _H, 1: _H, size - 1: -1})))
            out.append(IrrepLabel(k, h + _vec(size, {0: -_H, 1: -_H, 2: 1})))
    return out


def primitive_twist(n: int, p: int, q: int) -> IrrepLabel:
    """Sym^p H (x) Lambda^q_0 E on HP^n: highest weight e_1+..+e_q + p e_{n+1}."""
    case = catalog_get("hp_n", n=n)
    return IrrepLabel(case.k, _vec(n + 1, {**{i: 1 for i in range(q)}, n: p}))


def hp_betti(n: int, i: int) -> int:
    """Betti numbers of HP^n (b_i with negative i taken as 0)."""
    return 1 if 0 <= i <= 4 * n and i % 4 == 0 else 0


def in_torus_lattice(case: SymmetricSpaceCase, w: Weight) -> bool:
    """Membership of ``w`` in the character lattice of the maximal torus of G."""
    kind = case.metadata.lattice
    ints = all(c.denominator == 1 for c in w)
    halves = all((c - _H).denominator == 1 for c in w)
    if kind == "Z":
        return ints
    if kind == "F4":
        return ints or halves
    if kind == "E8":
        return (ints or halves) and sum(w).denominator == 1 and int(sum(w)) % 2 == 0
    if kind == "E7adj":
        return (ints or halves) and sum(w) == 0
    raise CatalogError(f"unknown lattice kind {kind!r}")


def lattice_diagnostic(case: SymmetricSpaceCase, mu: Weight | None = None) -> bool:
    """Whether mu + (rho_g - rho_k) lies in G's torus lattice.

    rho_g - rho_k is the highest weight of the positive spin module of the
    isotropy representation; every other spinor weight differs from it by roots.
    """
    mu = case.twist.highest_weight if mu is None else Weight(mu)
    return in_torus_lattice(case, mu + case.rho_g - case.rho_k)


def manifest_record(case: SymmetricSpaceCase) -> dict:
    m = case.metadata
    return {
        "name": case.name,
        "params": dict(case.params),
        "g": case.g.type_label,
        "k": case.k.type_label,
        "rho_g": case.rho_g,
        "rho_k": case.rho_k,
        "twist": case.twist.highest_weight,
        "isotropy": [r.highest_weight for r in case.isotropy],
        "metadata": {
            "dimension": m.dimension,
            "b0": m.b0,
            "b2": m.b2,
            "is_spin": m.is_spin,
            "condition_b_global": m.condition_b_global,
            "locally_defined_twist": m.locally_defined_twist,
            "lattice": m.lattice,
            "citations": list(m.citations),
        },
    }
