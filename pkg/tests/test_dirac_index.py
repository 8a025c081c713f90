import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieindex.dirac_index import IndexInput, index_bbw, index_product, zero_witness
from lieindex.lie_core import LieError, RootSystem, Weight, build_root_system, inner
from lieindex.reps import IrrepLabel, weyl_dim
from lieindex.spaces_catalog import catalog_get, default_cases, lattice_diagnostic
from oracles import half, random_twists


def e8_input(mu):
    case = catalog_get("e8_spin16")
    return IndexInput.build(case.g, case.k, mu)


def test_e8_reference_values():
    mu1, mu2 = half(33, 1, 1, 1, 1, 1, 1, 1), half(31, 1, 1, 1, 1, 1, 1, -1)
    assert index_product(e8_input(mu2)) == -1
    assert index_product(e8_input(mu1)) == 0
    assert index_bbw(e8_input(mu2)) == -1
    assert index_bbw(e8_input(mu1)) == 0


def test_e8_zero_witness_is_orthogonal_root():
    inp = e8_input(half(33, 1, 1, 1, 1, 1, 1, 1))
    a = zero_witness(inp)
    assert a in inp.g_roots.positive_roots
    assert inner(inp.shifted, a) == 0
    assert zero_witness(e8_input(half(31, 1, 1, 1, 1, 1, 1, -1))) is None


def test_f4_reference_value():
    case = catalog_get("f4_spin9")
    inp = IndexInput.build(case.g, case.k, half(3, 1, 1, 1))
    assert inp.rho_k == half(7, 5, 3, 1)
    assert index_product(inp) == index_bbw(inp) == -1


def test_grassmannian_mu1_is_unit():
    case = catalog_get("gr_real_even", p=2, q_prime=2)
    assert abs(index_product(IndexInput.build(case.g, case.k, [2, 1, 1, 0]))) == 1


@pytest.mark.parametrize("label", ["A2", "B3", "D4", "G2", "F4", "E8"])
def test_k_equal_g_gives_dimension(label):
    g = build_root_system(label)
    assert index_product(IndexInput.build(g, g, Weight.zero(g.ambient_rank))) == 1
    lam = g.rho  # dominant and integral
    inp = IndexInput.build(g, g, lam)
    assert index_product(inp) == index_bbw(inp) == weyl_dim(IrrepLabel(g, lam))


def test_length_mismatch_rejected():
    g = build_root_system("D4")
    with pytest.raises(LieError):
        IndexInput(g, g.rho, Weight([1, 0, 0]), Weight.zero(4))


@pytest.mark.parametrize("case", default_cases(), ids=lambda c: c.label)
def test_routes_agree_on_random_twists(case):
    rng = random.Random(case.label)
    for mu in random_twists(case, 60, rng):
        assert lattice_diagnostic(case, mu)
        inp = IndexInput.build(case.g, case.k, mu)
        prod = index_product(inp)
        assert prod.denominator == 1
        assert prod == index_bbw(inp), mu


@given(st.integers(1, 6), st.integers(0, 2 ** 31))
def test_product_formula_scale_invariant(c, seed):
    """Rescaling every vector by c multiplies numerator and denominator by the same power."""
    case = catalog_get("f4_spin9")
    mu = random_twists(case, 1, random.Random(seed))[0]
    base = index_product(IndexInput.build(case.g, case.k, mu))
    g = case.g
    gs = RootSystem(g.type_label, g.ambient_rank, tuple(a * c for a in g.positive_roots),
                    tuple(a * c for a in g.simple_roots))
    inp = IndexInput(gs, g.rho * c, case.rho_k * c, mu * c)
    assert index_product(inp) == base
