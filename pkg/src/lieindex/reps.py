"""Characters and tensor products of irreducible modules.

Dimensions come from the Weyl product, characters from Freudenthal's
recursion (computed per connected factor and multiplied out), and tensor
products from Klimyk's signed-shift formula.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction as Q

from . import kernels
from .lie_core import (
    LieError,
    RootSystem,
    Weight,
    _lcm,
    dual_weight,
    lcm_denominators,
    root_product_ratio,
)

WeightMultiset = Counter  # Weight -> positive multiplicity


class KlimykError(RuntimeError):
    """Klimyk accumulation produced a negative multiplicity or wrong dimension."""


@dataclass(frozen=True)
class IrrepLabel:
    system: RootSystem
    highest_weight: Weight

    def __post_init__(self):
        w = Weight(self.highest_weight)
        object.__setattr__(self, "highest_weight", w)
        if len(w) != self.system.ambient_rank:
            raise LieError(f"weight {w} has wrong length for {self.system.type_label}")
        if not self.system.is_dominant(w):
            raise LieError(f"{w} is not dominant for {self.system.type_label}")

    def __str__(self):
        return f"V[{self.system.type_label}]{self.highest_weight}"


def weyl_dim(rep: IrrepLabel) -> int:
    """Dimension by the Weyl product over positive roots."""
    rs, lam = rep.system, rep.highest_weight
    d = root_product_ratio(lam + rs.rho, rs.rho, rs.positive_roots)
    if d.denominator != 1:
        raise LieError(f"Weyl product {d} for {rep} is not an integer")
    return int(d)


def _require_integral(rep: IrrepLabel):
    if not rep.system.is_integral(rep.highest_weight):
        raise LieError(f"{rep} is not an integral weight")


def _local_character(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    scale = _lcm(_lcm(rs.root_denominator, lcm_denominators(lam)), lcm_denominators(rs.rho))
    lat = rs.lattice(scale)
    dom = kernels.freudenthal(lam.scaled_ints(scale), lat.rho, lat.positive, lat.simple, lat.norms)
    out = {}
    for mu, m in dom.items():
        for nu in kernels.orbit(mu, lat.simple, lat.norms):
            out[Weight(Q(x, scale) for x in nu)] = m
    return out


def weight_multiplicities(rep: IrrepLabel) -> WeightMultiset:
    """Full character of the module: every weight with its multiplicity."""
    _require_integral(rep)
    rs, lam = rep.system, rep.highest_weight
    n = rs.ambient_rank
    pieces = []
    for kind, coords, local in rs.components():
        local_lam = Weight(lam[i] for i in coords)
        if kind == "torus":
            pieces.append((coords, {local_lam: 1}))
        else:
            pieces.append((coords, _local_character(local, local_lam)))
    result = Counter()
    for combo in itertools.product(*(list(ch.items()) for _, ch in pieces)):
        v = [Q(0)] * n
        m = 1
        for (coords, _), (w, mult) in zip(pieces, combo):
            for i, c in zip(coords, w):
                v[i] = c
            m *= mult
        result[Weight(v)] += m
    return result


def tensor_decompose(a: IrrepLabel, b: IrrepLabel) -> WeightMultiset:
    """Highest weights (with multiplicity) of the irreducible summands of a (x) b."""
    if a.system != b.system:
        raise LieError("tensor_decompose needs both factors over the same root system")
    _require_integral(a)
    _require_integral(b)
    rs = a.system
    da, db = weyl_dim(a), weyl_dim(b)
    # iterate over the character of the smaller factor
    big, small = (b, a) if da < db else (a, b)
    char = weight_multiplicities(small)
    shift = big.highest_weight + rs.rho
    scale = _lcm(_lcm(rs.root_denominator, lcm_denominators(shift)), lcm_denominators(rs.rho))
    scale = _lcm(scale, lcm_denominators(c for w in char for c in w))
    lat = rs.lattice(scale)
    items = [(w.scaled_ints(scale), m) for w, m in char.items()]
    acc = kernels.klimyk(shift.scaled_ints(scale), items, lat.rho, lat.simple, lat.norms)
    out = Counter()
    for key, m in acc.items():
        if m < 0:
            raise KlimykError(f"negative multiplicity {m} at {key} in {a} (x) {b}")
        if m:
            out[Weight(Q(x, scale) for x in key)] = m
    total = sum(m * weyl_dim(IrrepLabel(rs, w)) for w, m in out.items())
    if total != da * db:
        raise KlimykError(f"dimension mismatch {total} != {da}*{db} for {a} (x) {b}")
    return out


def self_dual(rep: IrrepLabel) -> bool:
    return dual_weight(rep.system, rep.highest_weight) == rep.highest_weight


def cartan_sym_power(rep: IrrepLabel, k: int) -> IrrepLabel:
    """Cartan component of the k-th symmetric power: highest weight k*lambda."""
    if k < 0:
        raise LieError(f"symmetric power index must be >= 0, got {k}")
    return IrrepLabel(rep.system, rep.highest_weight * k)
