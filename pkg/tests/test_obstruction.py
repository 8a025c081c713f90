import dataclasses
import random

import pytest

from lieindex import obstruction
from lieindex.dirac_index import IndexInput, index_product
from lieindex.lie_core import Weight, inner
from lieindex.obstruction import (
    EXCLUDED,
    NOT_EXCLUDED,
    check_obstruction,
    decompose_twisted_tangent,
    closed_form_weights,
    summand_indices,
    total_index,
    vanishing_low_twist,
    wolf_space_index,
)
from lieindex.reps import IrrepLabel
from lieindex.spaces_catalog import CatalogError, catalog_get, default_cases
from oracles import half, random_twists


def test_e8_summands():
    s = summand_indices(catalog_get("e8_spin16"))
    assert [(x.weight, x.index) for x in s] == [
        (half(33, 1, 1, 1, 1, 1, 1, 1), 0),
        (half(31, 1, 1, 1, 1, 1, 1, -1), -1),
    ]
    assert check_obstruction(catalog_get("e8_spin16")).verdict == EXCLUDED


def test_f4_summands():
    s = summand_indices(catalog_get("f4_spin9"))
    assert {x.weight: x.index for x in s} == {half(1, 1, 1, 1): 0, half(3, 1, 1, 1): -1}
    r = check_obstruction(catalog_get("f4_spin9"))
    assert (r.total_index, r.verdict) == (-1, EXCLUDED)


@pytest.mark.parametrize("k", [k for k in range(0, 10) if k != 8])
def test_e8_other_k_not_odd_by_accident(k):
    # only k=8 makes mu2 + rho_k a permutation-with-signs of rho_g
    t = total_index(catalog_get("e8_spin16", k=k))
    assert t == 0 or abs(t) > 1


@pytest.mark.parametrize("p", range(2, 6))
@pytest.mark.parametrize("q", range(2, 6))
def test_case_one_six_weights(p, q):
    case = catalog_get("gr_real_even", p=p, q_prime=q)
    vals = [index_product(IndexInput.build(case.g, case.k, mu)) for mu in closed_form_weights(p, q)]
    assert abs(vals[0]) == 1
    assert vals[1:] == [0] * 5
    assert abs(total_index(case)) == 1


@pytest.mark.parametrize("p", range(3, 6))
@pytest.mark.parametrize("q", range(3, 6))
def test_case_one_decomposition_is_the_six_weights(p, q):
    dec = decompose_twisted_tangent(catalog_get("gr_real_even", p=p, q_prime=q))
    assert dict(dec) == {w: 1 for w in closed_form_weights(p, q)}


@pytest.mark.parametrize("p", [2, 4])
@pytest.mark.parametrize("q", [3, 5, 7])
def test_case_two_odd_total(p, q):
    r = check_obstruction(catalog_get("gr_real_oddq", p=p, q=q))
    assert r.total_index % 2 == 1
    assert r.verdict == EXCLUDED


@pytest.mark.parametrize("n", range(2, 9))
def test_wolf_hp(n):
    assert wolf_space_index("hp_n", n) == -1


@pytest.mark.parametrize("n", range(2, 7))
def test_wolf_gr2(n):
    assert wolf_space_index("gr2_cn2", n) == -2


@pytest.mark.parametrize("n", [3, 4, 5])
def test_vanishing_battery(n):
    ran = 0
    for p in range(n):
        for q in range(n - p):
            if (p + q + n) % 2 == 0:
                assert vanishing_low_twist(n, p, q) == 0
                ran += 1
    assert ran > 0


@pytest.mark.parametrize("n,p,q,expect", [(4, 4, 0, 1), (4, 2, 2, 1), (4, 0, 4, 1), (3, 1, 2, 1), (3, 2, 1, -1)])
def test_boundary_values(n, p, q, expect):
    assert vanishing_low_twist(n, p, q) == expect


def test_vanishing_rejects_bad_input():
    with pytest.raises(ValueError):
        vanishing_low_twist(4, 3, 2)
    with pytest.raises(ValueError):
        vanishing_low_twist(4, 1, 0)


def test_negative_controls():
    for name, params in [("e7_su8", {}), ("gr_real_oddpq", {"p": 3, "q": 3})]:
        r = check_obstruction(catalog_get(name, **params))
        assert (r.verdict, r.condition_a_self_dual, r.condition_c_odd) == (NOT_EXCLUDED, False, True)


@pytest.mark.parametrize("p,q", [(3, 3), (3, 5), (5, 3)])
def test_dimension_4n_plus_2_has_no_odd_self_dual_twist(p, q):
    case = catalog_get("gr_real_oddpq", p=p, q=q)
    assert case.metadata.dimension % 4 == 2
    rng = random.Random(p * 10 + q)
    for mu in random_twists(case, 12, rng, spread=2):
        variant = dataclasses.replace(case, twist=IrrepLabel(case.k, mu))
        r = check_obstruction(variant)
        assert not (r.condition_a_self_dual and r.condition_c_odd), mu


def test_every_zero_summand_has_a_witness():
    for case in default_cases():
        for s in summand_indices(case):
            if s.index == 0:
                assert s.witness is not None
                x = s.weight + case.rho_k
                assert inner(x, s.witness) == 0
            else:
                assert s.witness is None


def test_parity_theorem_on_catalog():
    for case in default_cases():
        r = check_obstruction(case)
        if r.condition_a_self_dual and r.condition_b_global and r.condition_c_odd:
            assert r.total_index % 2 == 1 and r.verdict == EXCLUDED


def test_flipping_b_flips_verdict_not_arithmetic():
    case = catalog_get("f4_spin9")
    base = check_obstruction(case)
    meta = dataclasses.replace(case.metadata, condition_b_global=False)
    flipped = check_obstruction(dataclasses.replace(case, metadata=meta))
    assert base.verdict == EXCLUDED and flipped.verdict == NOT_EXCLUDED
    assert flipped.total_index == base.total_index
    assert any("disagrees" in n for n in flipped.notes)


def test_flipping_a_flips_verdict_not_arithmetic(monkeypatch):
    case = catalog_get("e8_spin16")
    base = check_obstruction(case)
    monkeypatch.setattr(obstruction, "self_dual", lambda rep: False)
    flipped = check_obstruction(case)
    assert (base.verdict, flipped.verdict) == (EXCLUDED, NOT_EXCLUDED)
    assert flipped.summands == base.summands


def test_even_total_is_not_excluded():
    r = check_obstruction(catalog_get("gr2_cn2", n=2))
    assert r.total_index == -2 and not r.condition_c_odd and r.verdict == NOT_EXCLUDED


def test_twist_that_does_not_descend():
    case = catalog_get("e8_spin16")
    variant = dataclasses.replace(case, twist=IrrepLabel(case.k, Weight.unit(8, 0)))
    r = check_obstruction(variant)
    assert r.total_index is None and r.verdict == NOT_EXCLUDED
    assert any("does not descend" in n for n in r.notes)


def test_report_invariant_is_enforced():
    with pytest.raises(AssertionError):
        obstruction.ObstructionReport("x", (), (), 1, True, True, True, NOT_EXCLUDED)


def test_unknown_wolf_family():
    with pytest.raises(CatalogError):
        wolf_space_index("e8", 2)
