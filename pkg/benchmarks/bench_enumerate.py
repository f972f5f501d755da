"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_enumerate.py [--cases 6:1,7:3,8:2] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from apcubes.enumeration.kernel import KERNELS
from apcubes.enumeration.search import enumerate_vectors


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cases", default="6:1,7:3,8:2")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    cases = [tuple(map(int, c.split(":"))) for c in args.cases.split(",")]
    names = [n for n in ("python", "cython") if n in KERNELS]
    print(f"{'case':>8} {'vectors':>9} " + " ".join(f"{n + ' [s]':>12}" for n in names) + f" {'speedup':>9}")
    for k, i in cases:
        timings, outputs = {}, {}
        for name in names:
            def run(name=name):
                e = enumerate_vectors(k, i, kernel=name)
                return e, e.rank_zero_triples()

            timings[name], outputs[name] = best_of(run, args.repeat)
        if len(names) == 2:
            (ea, ra), (eb, rb) = outputs["python"], outputs["cython"]
            assert np.array_equal(ea.rows, eb.rows) and np.array_equal(ra, rb), "kernels disagree"
        speed = timings["python"] / timings["cython"] if "cython" in timings else float("nan")
        n_vec = len(outputs[names[0]][0])
        print(f"{k:>5},{i:<2} {n_vec:>9} " + " ".join(f"{timings[n]:>12.3f}" for n in names) + f" {speed:>8.1f}x")


if __name__ == "__main__":
    main()
