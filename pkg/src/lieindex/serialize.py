"""Canonical JSON and aligned text rendering of results.

Rationals are written as strings (``"1/2"``, ``"-3"``), never as floats, and
JSON keys are sorted so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction as Q

from .lie_core import RootSystem, Weight
from .obstruction import ObstructionReport, SummandIndex
from .reps import IrrepLabel


def to_jsonable(obj):
    if isinstance(obj, Weight):
        return [str(c) for c in obj]
    if isinstance(obj, Q):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, IrrepLabel):
        return {"system": obj.system.type_label, "highest_weight": to_jsonable(obj.highest_weight)}
    if isinstance(obj, RootSystem):
        return {
            "type": obj.type_label,
            "rank": obj.rank,
            "ambient_rank": obj.ambient_rank,
            "positive_roots": [to_jsonable(a) for a in obj.positive_roots],
            "simple_roots": [to_jsonable(a) for a in obj.simple_roots],
            "rho": to_jsonable(obj.rho),
        }
    if isinstance(obj, SummandIndex):
        return {
            "weight": to_jsonable(obj.weight),
            "weight_text": str(obj.weight),
            "multiplicity": obj.multiplicity,
            "index": obj.index,
            "zero_witness_root": None if obj.witness is None else to_jsonable(obj.witness),
        }
    if isinstance(obj, ObstructionReport):
        return report_dict(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def report_dict(r: ObstructionReport) -> dict:
    return {
        "case": r.case_name,
        "params": dict(r.params),
        "summands": [to_jsonable(s) for s in r.summands],
        "total_index": r.total_index,
        "condition_a_self_dual": r.condition_a_self_dual,
        "condition_b_global": r.condition_b_global,
        "condition_c_odd": r.condition_c_odd,
        "verdict": r.verdict,
        "notes": list(r.notes),
    }


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def table(headers: list[str], rows: list[list]) -> str:
    """Plain text table; integers are right-aligned, everything else left."""
    cells = [[str(h) for h in headers]] + [[_cell(v) for v in row] for row in rows]
    numeric = [bool(rows) and all(isinstance(row[i], int) and not isinstance(row[i], bool) for row in rows)
               for i in range(len(headers))]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for n, row in enumerate(cells):
        parts = [c.rjust(w) if numeric[i] else c.ljust(w) for i, (c, w) in enumerate(zip(row, widths))]
        lines.append("  ".join(parts).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def report_text(r: ObstructionReport) -> str:
    rows = [[str(s.weight), s.multiplicity, s.index, "-" if s.witness is None else str(s.witness)]
            for s in r.summands]
    params = ",".join(f"{k}={v}" for k, v in r.params)
    out = [f"case: {r.case_name}" + (f" ({params})" if params else ""), ""]
    out.append(table(["summand", "mult", "index", "zero witness"], rows))
    out.append(f"total index        : {r.total_index}")
    out.append(f"(a) self-dual      : {_cell(r.condition_a_self_dual)}")
    out.append(f"(b) globally def.  : {_cell(r.condition_b_global)}")
    out.append(f"(c) odd index      : {_cell(r.condition_c_odd)}")
    out.append(f"verdict            : {r.verdict}")
    for note in r.notes:
        out.append(f"note: {note}")
    return "\n".join(out) + "\n"
