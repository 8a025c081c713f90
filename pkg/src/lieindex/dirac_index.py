"""Index of homogeneous twisted Dirac operators on equal-rank quotients G/K.

Two independent evaluations are provided: the closed product over the positive
roots of G, and the Bott-Borel-Weil route (reflect ``mu + rho_k`` to the
dominant chamber of G, subtract ``rho_g`` and take a signed Weyl dimension).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction as Q

from .lie_core import LieError, RootSystem, Weight, inner, make_dominant, root_product_ratio
from .reps import IrrepLabel, weyl_dim

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexInput:
    g_roots: RootSystem
    rho_g: Weight
    rho_k: Weight
    mu: Weight

    def __post_init__(self):
        for name in ("rho_g", "rho_k", "mu"):
            w = Weight(getattr(self, name))
            if len(w) != self.g_roots.ambient_rank:
                raise LieError(f"{name}={w} does not match ambient rank {self.g_roots.ambient_rank}")
            object.__setattr__(self, name, w)

    @classmethod
    def build(cls, g: RootSystem, k: RootSystem, mu) -> "IndexInput":
        return cls(g, g.rho, k.rho, Weight(mu))

    @property
    def shifted(self) -> Weight:
        return self.mu + self.rho_k


def index_product(inp: IndexInput) -> Q:
    """prod over positive roots a of G of <mu + rho_k, a> / <rho_g, a>."""
    return root_product_ratio(inp.shifted, inp.rho_g, inp.g_roots.positive_roots)


def zero_witness(inp: IndexInput) -> Weight | None:
    """A positive root of G orthogonal to ``mu + rho_k``, if any."""
    x = inp.shifted
    for a in inp.g_roots.positive_roots:
        if inner(x, a) == 0:
            return a
    return None


def index_bbw(inp: IndexInput) -> int:
    """Signed dimension of the G-module picked out by Bott-Borel-Weil (0 if none)."""
    g = inp.g_roots
    res = make_dominant(g, inp.shifted)
    if res.singular:
        return 0
    lam = res.dominant - inp.rho_g
    if not g.is_dominant(lam):
        return 0
    if not g.is_integral(lam):
        log.warning("non-integral Bott-Borel-Weil weight %s for mu=%s", lam, inp.mu)
    return res.sign * weyl_dim(IrrepLabel(g, lam))
