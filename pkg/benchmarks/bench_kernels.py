"""Compare the compiled and pure-Python kernel backends.

Usage: ``python3 benchmarks/bench_kernels.py [--repeat N] [--json]``

Each workload runs on both backends, and the results are checked for
agreement before any timing is reported.
"""

from __future__ import annotations

import argparse
import importlib
import json
import sys
import timeit

from galois_param import _purepy
from galois_param.algebra import primes_up_to


def _workloads():
    primes = primes_up_to(5_000)
    # Phi_5 and (T^3 - 2)(T^2 + T + 1), integer coefficients lowest degree first
    polys = [[1, 1, 1, 1, 1], [-2, -2, -2, 1, 1, 1]]
    s7 = [(1, 0, 2, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6, 0)]
    a7 = [(1, 2, 0, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6, 0)]
    forms = [(a, b, c) for a in range(1, 30) for b in range(-30, 31) if b for c in (-97, -61, 43, 89)]

    def roots(mod):
        return [len(mod.roots_mod_p(P, p)) for P in polys for p in primes[1:]]

    def closure(mod):
        return [mod.closure_size(s7, 7), mod.closure_size(a7, 7)]

    def ternary(mod):
        out = []
        for a, b, c in forms:
            bound = int(max(abs(a * b), abs(b * c), abs(c * a)) ** 0.5) + 1
            out.append(mod.ternary_search(a, b, c, bound) is not None)
        return out

    return {"roots_mod_p (2 polys, primes < 5000)": roots,
            "closure (S7 and A7)": closure,
            "ternary_search (6960 forms)": ternary}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    try:
        fast = importlib.import_module("galois_param._speedups")
    except ImportError:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1
    rows = []
    for name, fn in _workloads().items():
        if fn(_purepy) != fn(fast):
            print(f"backends disagree on {name}", file=sys.stderr)
            return 2
        t_py = min(timeit.repeat(lambda: fn(_purepy), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: fn(fast), number=1, repeat=args.repeat))
        rows.append({"workload": name, "python_s": t_py, "cython_s": t_cy, "speedup": t_py / t_cy})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'workload':<40} {'python':>10} {'cython':>10} {'speedup':>8}")
        for r in rows:
            print(f"{r['workload']:<40} {r['python_s']:>9.3f}s {r['cython_s']:>9.3f}s {r['speedup']:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
