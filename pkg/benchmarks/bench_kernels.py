"""Compare the compiled and pure-Python polynomial kernels.

Micro: the kernel functions on random small-coefficient polynomials, the
regime that dominates homology runs.  Macro: a full cyclic homology
computation, run in a subprocess per kernel so the import-time selection
is exercised exactly as in normal use.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--macro-N 5]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from qpodles import _pypoly

try:
    from qpodles import _cpoly
except ImportError:
    _cpoly = None

MACRO = """
import time, qpodles
from qpodles.homology import HomologyEngine, TruncationSpec
t = time.perf_counter()
e = HomologyEngine()
for tw in ("id", "sigma"):
    e.hc_report(tw, 2, TruncationSpec({N}))
print(qpodles.KERNEL, time.perf_counter() - t)
"""


def _poly(rng, n, bits):
    c = [rng.randint(-(1 << bits), 1 << bits) for _ in range(n)]
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def micro(repeat):
    rng = random.Random(0)
    pairs = [(_poly(rng, rng.randint(2, 8), 12), _poly(rng, rng.randint(2, 8), 12))
             for _ in range(2000)]
    pairs = [(a, b) for a, b in pairs if a and b]
    rows = []
    for name in ("padd", "pmul", "pgcd", "canon"):
        row = {"op": name}
        for label, mod in (("python", _pypoly), ("compiled", _cpoly)):
            if mod is None:
                continue
            f = getattr(mod, name)
            t = min(timeit.repeat(lambda: [f(a, b) for a, b in pairs], number=1, repeat=repeat))
            row[label] = t
        rows.append(row)
    return rows


def macro(N):
    out = {}
    for label, env in (("python", "python"), ("compiled", "")):
        r = subprocess.run([sys.executable, "-c", MACRO.format(N=N)], capture_output=True,
                           text=True, env={**os.environ, "QPODLES_KERNEL": env}, check=True)
        kernel, secs = r.stdout.split()
        out[label] = {"kernel": kernel, "seconds": float(secs)}
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--macro-N", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    res = {"micro": micro(args.repeat), "macro": macro(args.macro_N)}
    if args.json:
        print(json.dumps(res, indent=2))
        return
    print(f"{'op':8} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for row in res["micro"]:
        py, cc = row.get("python"), row.get("compiled")
        sp = f"{py / cc:8.2f}" if cc else "     n/a"
        print(f"{row['op']:8} {py:10.4f} {cc or float('nan'):10.4f} {sp}")
    m = res["macro"]
    print(f"\nHC_2 (id, sigma) at N={args.macro_N}:")
    for label, v in m.items():
        print(f"  {label:9} kernel={v['kernel']:8} {v['seconds']:.2f} s")


if __name__ == "__main__":
    main()
