"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json PATH]

Each workload runs once per available backend (best of ``--repeat``) and the
results are checked for equality before timings are reported.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from kcbg import kernels
from kcbg.constructions import bar_g, hat_g
from kcbg.criticality import is_k_extendable, is_kcb_bruteforce, is_kcb_fast, is_kcb_hall
from kcbg.bigraph import build_tilde
from kcbg.connectivity import kappa


def _verdict(report):
    return report.verdict, report.witness, report.work


WORKLOADS = [
    ("bruteforce bar(14,7)", lambda: _verdict(is_kcb_bruteforce(bar_g(14, 7)))),
    ("hall bar(24,20)", lambda: _verdict(is_kcb_hall(bar_g(24, 20)))),
    ("hall hat(18,14,a=2)", lambda: _verdict(is_kcb_hall(hat_g(18, 14, 2)))),
    ("extendable tilde(bar(10,5))", lambda: is_k_extendable(build_tilde(bar_g(10, 5)), 5)),
    ("kappa bar(24,16)", lambda: kappa(bar_g(24, 16))),
    ("fast bar(40,28)", lambda: _verdict(is_kcb_fast(bar_g(40, 28)))[:2]),
]


def bench(repeat: int) -> list[dict]:
    rows = []
    for name, fn in WORKLOADS:
        row = {"workload": name}
        results = {}
        for backend, mod in kernels.backends().items():
            kernels.impl = mod
            best = float("inf")
            for _ in range(repeat):
                start = time.perf_counter()
                results[backend] = fn()
                best = min(best, time.perf_counter() - start)
            row[backend] = best
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {name}: {results}")
        rows.append(row)
    return rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json")
    args = parser.parse_args(argv)
    original = kernels.impl
    try:
        rows = bench(args.repeat)
    finally:
        kernels.impl = original
    names = list(kernels.backends())
    print(f"{'workload':32}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for row in rows:
        line = f"{row['workload']:32}" + "".join(f"{row[n]:11.4f}s" for n in names)
        if "cython" in row:
            line += f"{row['python'] / row['cython']:9.1f}x"
        print(line)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
