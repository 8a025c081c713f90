import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieindex.lie_core import (
    LieError,
    Weight,
    build_root_system,
    dual_weight,
    half_sum_positive_roots,
    inner,
    make_dominant,
    weyl_orbit,
)
from oracles import brute_dominant, brute_orbit, half, weyl_group

# frozen counts |R+| per type
POSITIVE_COUNTS = {"A2": 3, "A4": 10, "B2": 4, "B4": 16, "C3": 9, "D4": 12, "D8": 56,
                   "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}
SMALL = ["A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"]


@pytest.mark.parametrize("label,count", sorted(POSITIVE_COUNTS.items()))
def test_positive_root_counts(label, count):
    rs = build_root_system(label)
    assert len(rs.positive_roots) == count
    assert len(set(rs.positive_roots)) == count


@pytest.mark.parametrize("label", sorted(POSITIVE_COUNTS))
def test_rho_pairs_to_one_with_simple_coroots(label):
    rs = build_root_system(label)
    for a in rs.simple_roots:
        assert 2 * inner(rs.rho, a) / inner(a, a) == 1


def test_d4_roots_are_e_i_pm_e_j():
    rs = build_root_system("D", 4)
    expect = set()
    for i in range(4):
        for j in range(i + 1, 4):
            for s in (1, -1):
                v = [0] * 4
                v[i], v[j] = 1, s
                expect.add(Weight(v))
    assert set(rs.positive_roots) == expect


@pytest.mark.parametrize("label,rho", [
    ("D4", Weight([3, 2, 1, 0])),
    ("E8", Weight([23, 6, 5, 4, 3, 2, 1, 0])),
    ("F4", half(11, 5, 3, 1)),
    ("B4", half(7, 5, 3, 1)),
    ("D8", Weight([7, 6, 5, 4, 3, 2, 1, 0])),
])
def test_rho_reference_values(label, rho):
    assert half_sum_positive_roots(build_root_system(label)) == rho


def test_f4_rho_pairing():
    assert inner(build_root_system("F4").rho, [1, -1, 0, 0]) == 3


def test_e8_singular_input():
    g = build_root_system("E8")
    x = half(33, 1, 1, 1, 1, 1, 1, 1) + Weight([7, 6, 5, 4, 3, 2, 1, 0])
    assert make_dominant(g, x).singular
    assert inner(x, half(1, -1, -1, -1, -1, -1, -1, 1)) == 0


def test_d3_dual_of_half_spin():
    assert dual_weight(build_root_system("D3"), half(1, 1, 1)) == half(1, 1, -1)


def test_product_system_layout():
    rs = build_root_system("D2xB1xT1")
    assert rs.ambient_rank == 4
    assert rs.type_label == "D2xB1xT1"
    # D2 roots e1+-e2 share support, so D2 stays one piece
    assert [(k, c) for k, c, _ in rs.components()] == [("roots", (0, 1)), ("roots", (2,)), ("torus", (3,))]


@pytest.mark.parametrize("bad", ["D1", "B1", "Q3", "E9", "A0"])
def test_bad_labels_rejected(bad):
    with pytest.raises(LieError):
        build_root_system(bad)


def test_singular_chamber_rejected():
    with pytest.raises(LieError):
        build_root_system("A2", chamber=[1, 1, 0])


def test_dual_requires_dominant():
    with pytest.raises(LieError):
        dual_weight(build_root_system("A2"), [0, 1, 0])


def _random_weight(rng, rs):
    den = rng.choice([1, 2, 3])
    return Weight(Q(rng.randint(-6, 6), den) for _ in range(rs.ambient_rank))


@pytest.mark.parametrize("label", SMALL)
def test_make_dominant_matches_brute_force(label):
    rs = build_root_system(label)
    rng = random.Random(hash(label) % 1000)
    for _ in range(100):
        v = _random_weight(rng, rs)
        got = make_dominant(rs, v)
        dom, sign, singular = brute_dominant(rs, v)
        assert (got.dominant, got.sign, got.singular) == (dom, sign, singular), v


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "C3", "D4"])
def test_orbit_matches_brute_force(label):
    rs = build_root_system(label)
    rng = random.Random(5)
    for _ in range(10):
        v = _random_weight(rng, rs)
        assert set(weyl_orbit(rs, v)) == brute_orbit(rs, v)


def test_orbit_size_divides_group_order():
    rs = build_root_system("D4")
    assert len(weyl_group(rs)) == 192
    assert len(weyl_orbit(rs, rs.rho)) == 192
    assert len(weyl_orbit(rs, [1, 0, 0, 0])) == 8


coords = st.integers(-8, 8)


@given(st.sampled_from(["A3", "B3", "C3", "D4", "G2"]), st.lists(coords, min_size=4, max_size=4),
       st.sampled_from([1, 2]))
def test_make_dominant_idempotent_and_sign(label, xs, den):
    rs = build_root_system(label)
    v = Weight(Q(x, den) for x in xs[:rs.ambient_rank])
    r = make_dominant(rs, v)
    assert rs.is_dominant(r.dominant)
    again = make_dominant(rs, r.dominant)
    assert again.dominant == r.dominant and again.sign == 1
    # singular iff orthogonal to some root
    assert r.singular == any(inner(v, a) == 0 for a in rs.positive_roots)
    # Weyl group preserves length
    assert inner(r.dominant, r.dominant) == inner(v, v)


@given(st.sampled_from(["A3", "B3", "C3", "D4", "D5", "G2", "F4"]), st.lists(st.integers(0, 4), min_size=5, max_size=5))
def test_dual_is_involution(label, xs):
    rs = build_root_system(label)
    v = make_dominant(rs, Weight(xs[:rs.ambient_rank])).dominant
    d = dual_weight(rs, v)
    assert rs.is_dominant(d)
    assert dual_weight(rs, d) == v


def test_weight_arithmetic_is_coordinatewise():
    a, b = Weight([1, 2]), Weight([Q(1, 2), -1])
    assert a + b == Weight([Q(3, 2), 1])
    assert a - b == Weight([Q(1, 2), 3])
    assert 2 * b == Weight([1, -2]) == b * 2
    assert str(b) == "1/2*(1,-2)"
    with pytest.raises(LieError):
        a + Weight([1, 2, 3])
