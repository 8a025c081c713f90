"""Compiled vs pure-Python integer kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends get identical integer inputs; results are compared before timing.
"""

import argparse
import random
import timeit
from fractions import Fraction as Q

from lieindex import _kernels_py
from lieindex.lie_core import Weight, build_root_system
from lieindex.reps import IrrepLabel, weight_multiplicities

try:
    from lieindex import _kernels
except ImportError:
    _kernels = None


def freudenthal_case():
    rs = build_root_system("D6")
    lat = rs.lattice(1)
    lam = (4, 3, 2, 2, 1, 0)
    return "freudenthal D6 (4,3,2,2,1,0)", "freudenthal", (lam, lat.rho, lat.positive, lat.simple, lat.norms)


def reduce_cases(n=2000, seed=7):
    rs = build_root_system("E8")
    lat = rs.lattice(2)
    rng = random.Random(seed)
    vs = [tuple(rng.randint(-40, 40) * 4 for _ in range(8)) for _ in range(n)]
    return vs, lat


def klimyk_case():
    rs = build_root_system("B5")
    small = IrrepLabel(rs, [Q(3, 2), Q(3, 2), Q(1, 2), Q(1, 2), Q(1, 2)])
    char = weight_multiplicities(small)
    lat = rs.lattice(2)
    shift = (Weight([4, 3, 2, 1, 0]) + rs.rho).scaled_ints(2)
    items = [(w.scaled_ints(2), m) for w, m in char.items()]
    return f"klimyk B5 ({len(items)} weights)", "klimyk", (shift, items, lat.rho, lat.simple, lat.norms)


def bench(call, repeat):
    return min(timeit.repeat(call, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; only the Python backend is available")
    cases = [freudenthal_case(), klimyk_case()]
    vs, lat = reduce_cases()
    print(f"{'kernel':<36}{'python [s]':>12}{'compiled [s]':>14}{'speedup':>10}")
    rows = []
    for label, fn, a in cases:
        rows.append((label, lambda m, fn=fn, a=a: getattr(m, fn)(*a)))
    rows.append((f"reduce_dominant E8 x{len(vs)}",
                 lambda m: [m.reduce_dominant(v, lat.simple, lat.norms) for v in vs]))
    for label, call in rows:
        ref = call(_kernels_py)
        tp = bench(lambda: call(_kernels_py), args.repeat)
        if _kernels is None:
            print(f"{label:<36}{tp:>12.4f}{'-':>14}{'-':>10}")
            continue
        assert call(_kernels) == ref, f"backends disagree on {label}"
        tc = bench(lambda: call(_kernels), args.repeat)
        print(f"{label:<36}{tp:>12.4f}{tc:>14.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
