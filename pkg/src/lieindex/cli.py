"""Command-line front end.

    lieindex roots D4
    lieindex dim D8 "1/2*(1,1,1,1,1,1,1,1)"
    lieindex mult A2 "(1,0,-1)"
    lieindex tensor B4 "1/2*(1,1,1,1)" "(1,0,0,0)"
    lieindex index --g E8 --rho-k "(7,6,5,4,3,2,1,0)" --mu "1/2*(31,1,1,1,1,1,1,-1)"
    lieindex check f4-spin9 --json
    lieindex check gr_real_even 3 2          (or p=3 q_prime=2)
    lieindex wolf hp 2
    lieindex catalog --manifest cases.json
    lieindex reproduce

Exit codes: 0 success, 2 reproduce mismatch, 64 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field

from . import serialize
from .dirac_index import IndexInput, index_bbw, index_product
from .kernels import BACKEND
from .lie_core import LieError, Weight, build_root_system
from .obstruction import check_obstruction, wolf_space_index
from .reproduce import run_battery
from .reps import IrrepLabel, tensor_decompose, weight_multiplicities, weyl_dim
from .spaces_catalog import (
    DEFAULT_PARAMS,
    canonical_name,
    catalog_get,
    default_cases,
    manifest_record,
    param_names,
)
from .weightexpr import parse_weight

EX_OK, EX_MISMATCH, EX_USAGE = 0, 2, 64

log = logging.getLogger("lieindex")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_help(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    case: str | None = None
    params: dict = field(default_factory=dict)
    fmt: str = "text"
    verbosity: int = 0


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    p.add_argument("--json", action="store_const", const="json", dest="fmt", help="same as --format json")
    p.add_argument("-v", "--verbose", action="count", default=0)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="lieindex", description="Exact weights, characters and twisted Dirac indices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("roots", parents=[common], help="positive roots, simple roots and rho")
    p.add_argument("type")
    p = sub.add_parser("dim", parents=[common], help="Weyl dimension of an irreducible module")
    p.add_argument("type")
    p.add_argument("weight")
    p = sub.add_parser("mult", parents=[common], help="weight multiplicities of an irreducible module")
    p.add_argument("type")
    p.add_argument("weight")
    p = sub.add_parser("tensor", parents=[common], help="decompose a tensor product")
    p.add_argument("type")
    p.add_argument("w1")
    p.add_argument("w2")
    p = sub.add_parser("index", parents=[common], help="index of a twisted Dirac operator on G/K")
    p.add_argument("--g", required=True, help="root system label of G")
    p.add_argument("--rho-k", required=True, help="half sum of positive roots of K")
    p.add_argument("--mu", required=True, help="K-highest weight of the twist")
    p = sub.add_parser("check", parents=[common], help="run the obstruction check on a catalog case")
    p.add_argument("case")
    p.add_argument("params", nargs="*", help="integers in order, or name=value")
    p = sub.add_parser("wolf", parents=[common], help="index twisted by Sym^(n-2)H (x) TM on a Wolf space")
    p.add_argument("case", help="hp or gr2")
    p.add_argument("n", type=int)
    p = sub.add_parser("catalog", parents=[common], help="list catalog cases")
    p.add_argument("--manifest", metavar="FILE", help="write the case manifest as JSON")
    p = sub.add_parser("reproduce", parents=[common], help="recompute every reference value")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def _case_params(case: str, raw: list[str]) -> dict:
    try:
        names = param_names(case)
    except LieError as exc:
        raise UsageError(str(exc)) from None
    params = dict(DEFAULT_PARAMS[canonical_name(case)])
    positional = 0
    for item in raw:
        key, eq, val = item.partition("=")
        if not eq:
            if positional >= len(names):
                raise UsageError(f"{case} takes {len(names)} parameter(s): {', '.join(names) or 'none'}")
            key, val = names[positional], item
            positional += 1
        if key not in names:
            raise UsageError(f"unknown parameter {key!r} for {case}; expected {', '.join(names) or 'none'}")
        try:
            params[key] = int(val)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer, got {val!r}") from None
    return params


def _emit(cfg: RunConfig, payload, text: str):
    sys.stdout.write(serialize.dumps(payload) if cfg.fmt == "json" else text)


def _weight_in(rs, text) -> Weight:
    return parse_weight(text, arity=rs.ambient_rank)


def cmd_roots(cfg, args):
    rs = build_root_system(args.type)
    rows = [[str(a), "simple" if a in rs.simple_roots else ""] for a in rs.positive_roots]
    text = (f"{rs.type_label}: rank {rs.rank}, {len(rs.positive_roots)} positive roots\n"
            f"rho = {rs.rho}\n\n" + serialize.table(["root", ""], rows))
    _emit(cfg, rs, text)


def cmd_dim(cfg, args):
    rs = build_root_system(args.type)
    rep = IrrepLabel(rs, _weight_in(rs, args.weight))
    d = weyl_dim(rep)
    _emit(cfg, {"system": rs.type_label, "highest_weight": rep.highest_weight, "dimension": d}, f"{d}\n")


def cmd_mult(cfg, args):
    rs = build_root_system(args.type)
    rep = IrrepLabel(rs, _weight_in(rs, args.weight))
    char = weight_multiplicities(rep)
    items = sorted(char.items(), key=lambda kv: tuple(-c for c in kv[0]))
    payload = {"system": rs.type_label, "highest_weight": rep.highest_weight,
               "dimension": sum(char.values()),
               "weights": [{"weight": w, "multiplicity": m} for w, m in items]}
    text = serialize.table(["weight", "mult"], [[str(w), m] for w, m in items])
    _emit(cfg, payload, text + f"dimension {sum(char.values())}\n")


def cmd_tensor(cfg, args):
    rs = build_root_system(args.type)
    a = IrrepLabel(rs, _weight_in(rs, args.w1))
    b = IrrepLabel(rs, _weight_in(rs, args.w2))
    dec = tensor_decompose(a, b)
    items = sorted(dec.items(), key=lambda kv: tuple(-c for c in kv[0]))
    rows = [[str(w), m, weyl_dim(IrrepLabel(rs, w))] for w, m in items]
    payload = {"system": rs.type_label, "factors": [a.highest_weight, b.highest_weight],
               "summands": [{"highest_weight": w, "multiplicity": m, "dimension": d}
                            for (w, m), (_, _, d) in zip(items, rows)]}
    _emit(cfg, payload, serialize.table(["highest weight", "mult", "dim"], rows))


def cmd_index(cfg, args):
    g = build_root_system(args.g)
    rho_k = _weight_in(g, args.rho_k)
    mu = _weight_in(g, args.mu)
    inp = IndexInput(g, g.rho, rho_k, mu)
    prod = index_product(inp)
    bbw = index_bbw(inp)
    payload = {"g": g.type_label, "rho_g": g.rho, "rho_k": rho_k, "mu": mu,
               "index_product": prod, "index_bbw": bbw}
    _emit(cfg, payload, f"{prod}\n" if prod == bbw else f"{prod} (dominant-shift route: {bbw})\n")


def cmd_check(cfg, args):
    params = _case_params(args.case, args.params)
    report = check_obstruction(catalog_get(args.case, **params))
    _emit(cfg, report, serialize.report_text(report))


def cmd_wolf(cfg, args):
    val = wolf_space_index(args.case, args.n)
    _emit(cfg, {"case": canonical_name(args.case), "n": args.n, "index": val}, f"{val}\n")


def cmd_catalog(cfg, args):
    cases = default_cases()
    records = [manifest_record(c) for c in cases]
    if args.manifest:
        with open(args.manifest, "w", encoding="utf-8") as fh:
            fh.write(serialize.dumps(records))
        log.info("wrote %d cases to %s", len(records), args.manifest)
    rows = [[c.name, ",".join(f"{k}={v}" for k, v in c.params) or "-", c.g.type_label, c.k.type_label,
             c.metadata.dimension, str(c.twist.highest_weight)] for c in cases]
    _emit(cfg, records, serialize.table(["case", "params", "G", "K", "dim", "twist"], rows))


def cmd_reproduce(cfg, args):
    results = run_battery(jobs=args.jobs)
    bad = [r for r in results if not r.ok]
    payload = {"backend": BACKEND, "checks": [vars(r) for r in results],
               "passed": len(results) - len(bad), "failed": len(bad)}
    rows = [[r.anchor, "ok" if r.ok else "MISMATCH", r.expected, r.got] for r in results]
    text = serialize.table(["anchor", "status", "expected", "got"], rows)
    text += f"{len(results) - len(bad)}/{len(results)} checks agree (backend: {BACKEND})\n"
    _emit(cfg, payload, text)
    return EX_MISMATCH if bad else EX_OK


_COMMANDS = {
    "roots": cmd_roots, "dim": cmd_dim, "mult": cmd_mult, "tensor": cmd_tensor,
    "index": cmd_index, "check": cmd_check, "wolf": cmd_wolf, "catalog": cmd_catalog,
    "reproduce": cmd_reproduce,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.command, getattr(args, "case", None), fmt=args.fmt, verbosity=args.verbose)
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        code = _COMMANDS[cfg.command](cfg, args)
    except (UsageError, LieError) as exc:
        print(f"lieindex {cfg.command}: {exc}", file=sys.stderr)
        return EX_USAGE
    return EX_OK if code is None else code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
