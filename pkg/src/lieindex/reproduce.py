"""Battery of reference values: every published number the obstruction argument uses.

Each check carries a short anchor key, the expected value and a thunk that
recomputes it.  ``run_battery`` evaluates them (optionally in worker
processes) and returns results in declaration order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Callable

from .dirac_index import IndexInput, index_bbw, index_product
from .lie_core import Weight, build_root_system, inner, make_dominant
from .obstruction import (
    check_obstruction,
    decompose_twisted_tangent,
    closed_form_weights,
    total_index,
    vanishing_low_twist,
    wolf_space_index,
)
from .reps import IrrepLabel, cartan_sym_power, self_dual, tensor_decompose, weyl_dim
from .spaces_catalog import catalog_get, wolf_space_twist_summands
from .weightexpr import parse_weight

H = Q(1, 2)


@dataclass(frozen=True)
class Check:
    anchor: str
    description: str
    expected: object
    compute: Callable[[], object]


@dataclass(frozen=True)
class CheckResult:
    anchor: str
    description: str
    expected: str
    got: str
    ok: bool


def W(*c) -> Weight:
    return Weight(c)


def _half(*c) -> Weight:
    return Weight(Q(x, 2) for x in c)


def _rho(label):
    return build_root_system(label).rho


def _decomp(label, a, b):
    rs = build_root_system(label)
    return dict(tensor_decompose(IrrepLabel(rs, a), IrrepLabel(rs, b)))


def _case_index(name, mu, **params):
    case = catalog_get(name, **params)
    return index_product(IndexInput.build(case.g, case.k, mu))


def _case_bbw(name, mu, **params):
    case = catalog_get(name, **params)
    return index_bbw(IndexInput.build(case.g, case.k, mu))


def _summand_set(name, **params):
    return {w: m for w, m in decompose_twisted_tangent(catalog_get(name, **params))}


def _flags(name, **params):
    r = check_obstruction(catalog_get(name, **params))
    return (r.verdict, r.condition_a_self_dual, r.condition_c_odd)


def _six_indices(p, q):
    case = catalog_get("gr_real_even", p=p, q_prime=q)
    vals = [index_product(IndexInput.build(case.g, case.k, mu)) for mu in closed_form_weights(p, q)]
    return (abs(vals[0]),) + tuple(vals[1:])


def _e8_mu1_singular():
    case = catalog_get("e8_spin16")
    x = _half(33, 1, 1, 1, 1, 1, 1, 1) + case.rho_k
    alpha = _half(1, -1, -1, -1, -1, -1, -1, 1)
    return (make_dominant(case.g, x).singular, inner(x, alpha))


def _catalog_shape(name, **params):
    case = catalog_get(name, **params)
    return (case.g.type_label, case.k.type_label, case.rho_g, case.rho_k,
            tuple(r.highest_weight for r in case.isotropy), case.metadata.dimension,
            case.metadata.b0, case.metadata.b2)


def _a7_std():
    return W(1, 0, 0, 0, 0, 0, 0, 0) - Weight([Q(1, 8)] * 8)


def _a7():
    return build_root_system("A7")


def checks() -> list[Check]:
    d4 = build_root_system("D4")
    c = []
    add = lambda anchor, desc, exp, fn: c.append(Check(anchor, desc, exp, fn))

    add("roots.D4.count", "positive roots of D4", 12, lambda: len(d4.positive_roots))
    add("rho.D4", "rho of D4", W(3, 2, 1, 0), lambda: _rho("D4"))
    add("rho.E8", "rho of E8", W(23, 6, 5, 4, 3, 2, 1, 0), lambda: _rho("E8"))
    add("rho.F4", "rho of F4", _half(11, 5, 3, 1), lambda: _rho("F4"))
    add("e8.mu1.singular", "mu1 + rho_k singular, orthogonal to 1/2(1,-1,..,-1,1)",
        (True, 0), _e8_mu1_singular)
    add("dim.D8.halfspin", "dim of 1/2(1,...,1) over D8", 128,
        lambda: weyl_dim(IrrepLabel(build_root_system("D8"), [H] * 8)))
    add("dim.B4.spin", "dim of 1/2(1,1,1,1) over B4", 16,
        lambda: weyl_dim(IrrepLabel(build_root_system("B4"), [H] * 4)))
    add("tensor.D4.vector_x_spinor_power", "e1 (x) 2(e1+..+e4) over D4",
        {W(3, 2, 2, 2): 1, W(2, 2, 2, 1): 1},
        lambda: _decomp("D4", W(1, 0, 0, 0), W(2, 2, 2, 2)))
    add("tensor.D8.sym16_x_halfspin", "(16,0,..,0) (x) 1/2(1,..,1) over D8",
        {_half(33, 1, 1, 1, 1, 1, 1, 1): 1, _half(31, 1, 1, 1, 1, 1, 1, -1): 1},
        lambda: _decomp("D8", W(16, 0, 0, 0, 0, 0, 0, 0), Weight([H] * 8)))
    add("f4.decomp", "spin (x) vector over B4",
        {_half(1, 1, 1, 1): 1, _half(3, 1, 1, 1): 1},
        lambda: _decomp("B4", Weight([H] * 4), W(1, 0, 0, 0)))
    add("selfdual.D3.spin", "half-spin of D_p, p odd, is self-dual", False,
        lambda: self_dual(IrrepLabel(build_root_system("D3"), [H] * 3)))
    add("selfdual.A7.sym10", "Sym^10 of the standard A7 module is self-dual", False,
        lambda: self_dual(IrrepLabel(_a7(), _a7_std() * 10)))
    add("sym.D8.e1.16", "Cartan component of Sym^16 of the D8 vector", W(16, 0, 0, 0, 0, 0, 0, 0),
        lambda: cartan_sym_power(IrrepLabel(build_root_system("D8"), W(1, 0, 0, 0, 0, 0, 0, 0)), 16)
        .highest_weight)
    add("sym.A7.std.10", "Cartan component of Sym^10 of the A7 standard module", _a7_std() * 10,
        lambda: cartan_sym_power(IrrepLabel(_a7(), _a7_std()), 10).highest_weight)

    mu1, mu2 = _half(33, 1, 1, 1, 1, 1, 1, 1), _half(31, 1, 1, 1, 1, 1, 1, -1)
    add("e8.index.mu2", "i(mu2) on E8/Spin(16), product formula", -1, lambda: _case_index("e8_spin16", mu2))
    add("e8.index.mu1", "i(mu1) on E8/Spin(16), product formula", 0, lambda: _case_index("e8_spin16", mu1))
    add("f4.index.mu", "i(1/2(3,1,1,1)) on F4/Spin(9)", -1, lambda: _case_index("f4_spin9", _half(3, 1, 1, 1)))
    add("e8.bbw.mu2", "i(mu2) on E8/Spin(16), dominant-shift route", -1, lambda: _case_bbw("e8_spin16", mu2))
    add("e8.bbw.mu1", "i(mu1) on E8/Spin(16), dominant-shift route", 0, lambda: _case_bbw("e8_spin16", mu1))
    add("gr_even.2_2.mu1", "|i(mu1)| on SO(8)/SO(4)xSO(4)", 1,
        lambda: abs(_case_index("gr_real_even", W(2, 1, 1, 0), p=2, q_prime=2)))

    add("catalog.gr_even.2_2", "G, K, rho_g, rho_k, isotropy, dim, b0, b2 for gr_real_even(2,2)",
        ("D4", "D2xD2", W(3, 2, 1, 0), W(1, 0, 1, 0), (W(1, 0, 1, 0),), 16, 1, 0),
        lambda: _catalog_shape("gr_real_even", p=2, q_prime=2))
    add("catalog.e8", "G, K, rho_g, rho_k, isotropy, dim, b0, b2 for e8_spin16",
        ("E8", "D8", W(23, 6, 5, 4, 3, 2, 1, 0), W(7, 6, 5, 4, 3, 2, 1, 0), (Weight([H] * 8),), 128, 1, 0),
        lambda: _catalog_shape("e8_spin16"))
    add("catalog.hp.2", "G, K and isotropy for HP^2",
        ("C3", "C2xC1", (W(1, 0, 1),), 1, 0),
        lambda: (lambda s: (s[0], s[1], s[4], s[6], s[7]))(_catalog_shape("hp_n", n=2)))
    add("twist.gr_even.3_2", "twist weight for gr_real_even(3,2)", W(1, 1, 1, 1, 0),
        lambda: catalog_get("gr_real_even", p=3, q_prime=2).twist.highest_weight)
    add("twist.e8.k8", "twist weight for e8_spin16", W(16, 0, 0, 0, 0, 0, 0, 0),
        lambda: catalog_get("e8_spin16").twist.highest_weight)
    add("twist.f4", "twist weight for f4_spin9", W(1, 0, 0, 0),
        lambda: catalog_get("f4_spin9").twist.highest_weight)
    add("wolf.hp.3.summands", "Sym^1 H (x) TM on HP^3", {W(1, 0, 0, 2), W(1, 0, 0, 0)},
        lambda: {r.highest_weight for r in wolf_space_twist_summands("hp_n", 3)})

    add("decomp.gr_even.3_3", "E (x) TM on gr_real_even(3,3) is the six closed-form weights",
        {w: 1 for w in closed_form_weights(3, 3)}, lambda: _summand_set("gr_real_even", p=3, q_prime=3))
    add("decomp.e8", "E (x) TM on e8_spin16", {mu1: 1, mu2: 1}, lambda: _summand_set("e8_spin16"))
    add("decomp.f4", "E (x) TM on f4_spin9", {_half(1, 1, 1, 1): 1, _half(3, 1, 1, 1): 1},
        lambda: _summand_set("f4_spin9"))
    add("total.gr_even.2_2", "|i(mu1)|, i(mu2..mu6) on gr_real_even(2,2)", (1, 0, 0, 0, 0, 0),
        lambda: _six_indices(2, 2))
    add("total.gr_even.2_2.abs", "|total index| on gr_real_even(2,2)", 1,
        lambda: abs(total_index(catalog_get("gr_real_even", p=2, q_prime=2))))
    add("total.e8", "total index on e8_spin16", -1, lambda: total_index(catalog_get("e8_spin16")))
    add("total.f4", "total index on f4_spin9", -1, lambda: total_index(catalog_get("f4_spin9")))
    add("verdict.f4", "f4_spin9 verdict", ("excluded", True, True), lambda: _flags("f4_spin9"))
    add("verdict.e7", "e7_su8 verdict, (a), (c)", ("not_excluded", False, True), lambda: _flags("e7_su8"))
    add("verdict.gr_oddpq.3_3", "gr_real_oddpq(3,3) verdict, (a), (c)", ("not_excluded", False, True),
        lambda: _flags("gr_real_oddpq", p=3, q=3))
    add("wolf.hp.2", "Sym^0 H (x) TM index on HP^2", -1, lambda: wolf_space_index("hp_n", 2))
    add("wolf.hp.4", "Sym^2 H (x) TM index on HP^4", -1, lambda: wolf_space_index("hp_n", 4))
    add("wolf.gr2.3", "Sym^1 H (x) TM index on Gr2(C^5)", -2, lambda: wolf_space_index("gr2_cn2", 3))
    add("vanish.hp4.2_0", "Sym^2 H on HP^4", 0, lambda: vanishing_low_twist(4, 2, 0))
    add("vanish.hp4.0_2", "Lambda^2_0 E on HP^4", 0, lambda: vanishing_low_twist(4, 0, 2))
    add("vanish.hp4.4_0", "Sym^4 H on HP^4 (b_-2 = 0)", 1, lambda: vanishing_low_twist(4, 4, 0))
    add("parse.f4.mu", "parse 1/2*(3,1,1,1)", _half(3, 1, 1, 1), lambda: parse_weight("1/2*(3,1,1,1)"))
    return c


def _fmt(v) -> str:
    if isinstance(v, Weight):
        return str(v)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}:{m}" for k, m in sorted(v.items(), key=lambda kv: str(kv[0]))) + "}"
    if isinstance(v, (set, frozenset)):
        return "{" + ", ".join(sorted(str(x) for x in v)) + "}"
    if isinstance(v, tuple):
        return "(" + ", ".join(_fmt(x) for x in v) + ")"
    return str(v)


def _evaluate(check: Check) -> CheckResult:
    try:
        got = check.compute()
        ok = got == check.expected
        text = _fmt(got)
    except Exception as exc:  # a crash is a mismatch, reported not raised
        ok, text = False, f"error: {type(exc).__name__}: {exc}"
    return CheckResult(check.anchor, check.description, _fmt(check.expected), text, ok)


def _evaluate_at(i: int) -> CheckResult:
    return _evaluate(checks()[i])


def run_battery(jobs: int = 1) -> list[CheckResult]:
    battery = checks()
    if jobs <= 1:
        return [_evaluate(ch) for ch in battery]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_evaluate_at, range(len(battery))))
