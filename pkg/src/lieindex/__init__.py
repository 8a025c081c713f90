"""Exact computational Lie theory for twisted Dirac indices on inner symmetric spaces."""

from .kernels import BACKEND
from .lie_core import (
    DominantResult,
    LieError,
    RootSystem,
    Weight,
    build_root_system,
    dual_weight,
    half_sum_positive_roots,
    inner,
    make_dominant,
)
from .reps import IrrepLabel, cartan_sym_power, self_dual, tensor_decompose, weight_multiplicities, weyl_dim
from .dirac_index import IndexInput, index_bbw, index_product

__all__ = [
    "BACKEND",
    "DominantResult",
    "IndexInput",
    "IrrepLabel",
    "LieError",
    "RootSystem",
    "Weight",
    "build_root_system",
    "cartan_sym_power",
    "dual_weight",
    "half_sum_positive_roots",
    "index_bbw",
    "index_product",
    "inner",
    "make_dominant",
    "self_dual",
    "tensor_decompose",
    "weight_multiplicities",
    "weyl_dim",
]
