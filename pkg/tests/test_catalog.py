import pytest

from lieindex.lie_core import Weight
from lieindex.reps import weyl_dim
from lieindex.spaces_catalog import (
    CatalogError,
    canonical_name,
    catalog_get,
    default_cases,
    hp_betti,
    isotropy_dimension,
    lattice_diagnostic,
    manifest_record,
    primitive_twist,
    wolf_space_twist_summands,
)
from oracles import half

PARAM_GRID = (
    [("gr_real_even", {"p": p, "q_prime": q}) for p in range(2, 6) for q in range(2, 6)]
    + [("gr_real_oddq", {"p": p, "q": q}) for p in (2, 4) for q in (3, 5, 7)]
    + [("gr_real_oddpq", {"p": p, "q": q}) for p in (3, 5) for q in (3, 5)]
    + [("e8_spin16", {"k": k}) for k in (1, 8)]
    + [("f4_spin9", {}), ("e7_su8", {})]
    + [("hp_n", {"n": n}) for n in range(2, 9)]
    + [("gr2_cn2", {"n": n}) for n in range(2, 7)]
)


def test_gr_real_even_2_2():
    c = catalog_get("gr_real_even", p=2, q_prime=2)
    assert c.g.type_label == "D4" and c.rho_g == Weight([3, 2, 1, 0])
    assert c.rho_k == Weight([1, 0, 1, 0])
    assert [r.highest_weight for r in c.isotropy] == [Weight([1, 0, 1, 0])]
    assert c.metadata.dimension == 16


def test_e8_spin16_data():
    c = catalog_get("e8_spin16")
    assert c.rho_k == Weight([7, 6, 5, 4, 3, 2, 1, 0])
    assert c.rho_g == Weight([23, 6, 5, 4, 3, 2, 1, 0])
    assert [r.highest_weight for r in c.isotropy] == [half(1, 1, 1, 1, 1, 1, 1, 1)]
    assert c.metadata.b0 == 1
    assert c.twist.highest_weight == Weight([16, 0, 0, 0, 0, 0, 0, 0])


def test_hp2_data():
    c = catalog_get("hp_n", n=2)
    assert (c.g.type_label, c.k.type_label) == ("C3", "C2xC1")
    assert [r.highest_weight for r in c.isotropy] == [Weight([1, 0, 1])]
    assert (c.metadata.b0, c.metadata.b2) == (1, 0)


@pytest.mark.parametrize("name,params,twist", [
    ("gr_real_even", {"p": 3, "q_prime": 2}, Weight([1, 1, 1, 1, 0])),
    ("f4_spin9", {}, Weight([1, 0, 0, 0])),
    ("gr_real_oddq", {"p": 2, "q": 3}, half(1, 1, 0)),
])
def test_twist_weights(name, params, twist):
    assert catalog_get(name, **params).twist.highest_weight == twist


def test_wolf_summands_hp3():
    got = {r.highest_weight for r in wolf_space_twist_summands("hp", 3)}
    assert got == {Weight([1, 0, 0, 2]), Weight([1, 0, 0, 0])}


def test_wolf_summands_drop_negative_sym_power():
    assert len(wolf_space_twist_summands("hp_n", 2)) == 1
    assert len(wolf_space_twist_summands("gr2", 2)) == 2


@pytest.mark.parametrize("name,params", PARAM_GRID, ids=lambda x: str(x))
def test_isotropy_dimension_matches_manifold(name, params):
    c = catalog_get(name, **params)
    assert isotropy_dimension(c) == c.metadata.dimension
    # dim G - dim K as well
    assert c.metadata.dimension == 2 * (len(c.g.positive_roots) - len(c.k.positive_roots))


@pytest.mark.parametrize("name,params", PARAM_GRID, ids=lambda x: str(x))
def test_lattice_diagnostic_agrees_with_metadata(name, params):
    c = catalog_get(name, **params)
    assert lattice_diagnostic(c) == c.metadata.condition_b_global


def test_dimension_mod_4_flags():
    assert not catalog_get("gr_real_oddpq", p=3, q=3).usable
    assert catalog_get("gr_real_oddq", p=2, q=3).usable


def test_names_and_aliases():
    assert canonical_name("f4-spin9") == "f4_spin9"
    assert canonical_name("HP") == "hp_n"
    with pytest.raises(CatalogError):
        canonical_name("cp_n")


@pytest.mark.parametrize("name,params", [
    ("gr_real_oddq", {"p": 2, "q": 1}),
    ("gr_real_oddq", {"p": 3, "q": 3}),
    ("gr_real_oddpq", {"p": 3, "q": 4}),
    ("gr_real_even", {"p": 1, "q_prime": 3}),
    ("hp_n", {"n": 1}),
    ("gr2_cn2", {"n": 1}),
    ("e8_spin16", {"k": -1}),
    ("f4_spin9", {"n": 2}),
])
def test_invalid_parameters(name, params):
    with pytest.raises(CatalogError):
        catalog_get(name, **params)


def test_q1_message_mentions_highest_weight():
    with pytest.raises(CatalogError, match="highest weight"):
        catalog_get("gr_real_oddq", p=2, q=1)


def test_rank_bound_and_override(monkeypatch):
    with pytest.raises(CatalogError, match="LIEINDEX_MAX_RANK"):
        catalog_get("hp_n", n=13)
    monkeypatch.setenv("LIEINDEX_MAX_RANK", "14")
    assert catalog_get("hp_n", n=13).metadata.dimension == 52


def test_default_cases_cover_every_family():
    names = [c.name for c in default_cases()]
    assert len(names) == len(set(names)) == 8


def test_manifest_record_shape():
    rec = manifest_record(catalog_get("f4_spin9"))
    assert rec["g"] == "F4" and rec["metadata"]["dimension"] == 16
    assert rec["twist"] == Weight([1, 0, 0, 0])


def test_primitive_twist_and_betti():
    assert primitive_twist(4, 1, 2).highest_weight == Weight([1, 1, 0, 0, 1])
    assert weyl_dim(primitive_twist(3, 0, 1)) == 6
    assert [hp_betti(2, i) for i in range(-2, 10)] == [0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0]
