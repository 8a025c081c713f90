"""Weakly-complex obstruction check and the Wolf-space index recomputations.

A twist E excludes a weakly complex tangent bundle when E is self-dual,
E (x) spinors is globally defined, and the index of the Dirac operator twisted
by E (x) TM is odd.  The index is summed over the K-irreducible summands of
E (x) TM.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as Q

from .dirac_index import IndexInput, index_product, zero_witness
from .lie_core import Weight
from .reps import IrrepLabel, self_dual, tensor_decompose
from .spaces_catalog import (
    SymmetricSpaceCase,
    catalog_get,
    hp_betti,
    lattice_diagnostic,
    primitive_twist,
    wolf_space_twist_summands,
)

log = logging.getLogger(__name__)

EXCLUDED = "excluded"
NOT_EXCLUDED = "not_excluded"


class DescentError(ArithmeticError):
    """A summand index is not an integer: the twist does not descend to K."""


class IndexMismatch(AssertionError):
    """A recomputed index disagrees with the value fixed by the Betti numbers."""


@dataclass(frozen=True)
class SummandIndex:
    weight: Weight
    multiplicity: int
    index: int
    witness: Weight | None = None  # positive root of G orthogonal to weight + rho_k


@dataclass(frozen=True)
class ObstructionReport:
    case_name: str
    params: tuple
    summands: tuple[SummandIndex, ...]
    total_index: int | None
    condition_a_self_dual: bool
    condition_b_global: bool
    condition_c_odd: bool
    verdict: str
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.total_index is not None:
            assert self.total_index == sum(s.multiplicity * s.index for s in self.summands)
        flags = self.condition_a_self_dual and self.condition_b_global and self.condition_c_odd
        assert (self.verdict == EXCLUDED) == flags


def decompose_twisted_tangent(case: SymmetricSpaceCase) -> list[tuple[Weight, int]]:
    """K-highest weights (with multiplicity) of twist (x) isotropy."""
    total = Counter()
    for iso in case.isotropy:
        total.update(tensor_decompose(case.twist, iso))
    return sorted(total.items(), key=lambda kv: tuple(-c for c in kv[0]))


def _integral_index(case: SymmetricSpaceCase, mu: Weight) -> int:
    val = index_product(IndexInput.build(case.g, case.k, mu))
    if val.denominator != 1:
        raise DescentError(
            f"{case.label}: index {val} at {mu} is not an integer; "
            "the twisted spin module does not descend to K"
        )
    return int(val)


def summand_indices(case: SymmetricSpaceCase) -> list[SummandIndex]:
    out = []
    for mu, mult in decompose_twisted_tangent(case):
        idx = _integral_index(case, mu)
        witness = zero_witness(IndexInput.build(case.g, case.k, mu)) if idx == 0 else None
        out.append(SummandIndex(mu, mult, idx, witness))
    return out


def total_index(case: SymmetricSpaceCase) -> int:
    """Index of the Dirac operator twisted by E (x) TM, summed over summands."""
    return sum(s.multiplicity * s.index for s in summand_indices(case))


def check_obstruction(case: SymmetricSpaceCase) -> ObstructionReport:
    notes = list(case.metadata.citations)
    cond_a = self_dual(case.twist)
    cond_b = case.metadata.condition_b_global
    lattice_ok = lattice_diagnostic(case)
    notes.append(f"lattice diagnostic: twist + spinor weights {'in' if lattice_ok else 'NOT in'} torus lattice")
    if lattice_ok != cond_b:
        log.warning("%s: lattice diagnostic (%s) disagrees with cited global definedness (%s)",
                    case.label, lattice_ok, cond_b)
        notes.append("warning: lattice diagnostic disagrees with cited global definedness")
    try:
        summands = summand_indices(case)
    except DescentError as exc:
        notes.append(str(exc))
        return ObstructionReport(case.name, case.params, (), None, cond_a, cond_b, False,
                                 NOT_EXCLUDED, tuple(notes))
    for s in summands:
        if s.witness is not None:
            notes.append(f"i({s.weight}) = 0: weight + rho_k orthogonal to root {s.witness}")
    total = sum(s.multiplicity * s.index for s in summands)
    cond_c = total % 2 == 1
    if not case.usable:
        notes.append(f"dimension {case.metadata.dimension} = 2 mod 4: parity criterion cannot apply")
    if not cond_a:
        notes.append("twist is not self-dual")
    verdict = EXCLUDED if (cond_a and cond_b and cond_c) else NOT_EXCLUDED
    return ObstructionReport(case.name, case.params, tuple(summands), total, cond_a, cond_b, cond_c,
                             verdict, tuple(notes))


def wolf_space_index(family: str, n: int) -> int:
    """Index twisted by Sym^(n-2)H (x) TM; must equal -(b2 + b0)."""
    summands = wolf_space_twist_summands(family, n)
    case = catalog_get(family, n=n)
    total = sum(_integral_index(case, rep.highest_weight) for rep in summands)
    expected = -(case.metadata.b2 + case.metadata.b0)
    if total != expected:
        raise IndexMismatch(f"{case.label}: index {total} != -(b2+b0) = {expected}")
    return total


def vanishing_low_twist(n: int, p: int, q: int) -> int:
    """Index on HP^n twisted by Sym^p H (x) Lambda^q_0 E.

    Zero when p+q < n and (-1)^q (b_2q + b_{2q-2}) when p+q = n; any other
    value raises :class:`IndexMismatch`.
    """
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    if p + q > n:
        raise ValueError(f"needs p+q <= n, got p+q={p + q}, n={n}")
    if q > n:
        raise ValueError("q cannot exceed n")
    if (p + q + n) % 2:
        raise ValueError("needs p+q+n even for a globally defined twist")
    case = catalog_get("hp_n", n=n)
    twist: IrrepLabel = primitive_twist(n, p, q)
    idx = _integral_index(case, twist.highest_weight)
    if p + q < n:
        expected = 0
    else:
        expected = (-1) ** q * (hp_betti(n, 2 * q) + hp_betti(n, 2 * q - 2))
    if idx != expected:
        raise IndexMismatch(f"HP^{n}, (p,q)=({p},{q}): index {idx} != {expected}")
    return idx


def closed_form_weights(p: int, q_prime: int) -> list[Weight]:
    """The six weights mu_1..mu_6 for gr_real_even, written out from their closed form.

    For small p some of them are not dominant; they are still valid inputs to
    the product formula.
    """
    def w(first, rest, last, tail):
        v = [Q(first)] + [Q(rest)] * (p - 2) + [Q(last)] + [Q(0)] * q_prime
        for i, c in tail.items():
            v[p + i] += c
        return Weight(v)

    a = (q_prime, q_prime - 1, q_prime - 1)   # mu_1, mu_3, mu_5 prefix
    b = (q_prime - 1, q_prime - 1, q_prime - 2)  # mu_2, mu_4, mu_6 prefix
    return [
        w(*a, {0: p - 1}),
        w(*b, {0: p - 1}),
        w(*a, {0: p - 2, 1: 1}),
        w(*b, {0: p - 2, 1: 1}),
        w(*a, {0: p - 3}),
        w(*b, {0: p - 3}),
    ]
