"""Time the numba and numpy RREF kernels on random and Macaulay matrices.

    python3 benchmarks/bench_rref.py [--repeat 3] [--sizes 100,200,400]
"""
import argparse
import time

import numpy as np

from lwe_groebner import linalg
from lwe_groebner.groebner import build_macaulay
from lwe_groebner.lwe_model import LweParams, build_arora_ge, sample_full_rank


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def compare(label, M, p, repeat):
    row = [label, f"{M.shape[0]}x{M.shape[1]}"]
    results = {}
    for backend in ("numpy", "numba"):
        if backend == "numba" and not linalg._accel.NUMBA_INSTALLED:
            row.append("n/a")
            continue
        if backend == "numba":
            linalg.rref(M[:2, :2], p, backend="numba")  # compile outside the timing
        t, out = best_of(lambda: linalg.rref(M, p, backend=backend), repeat)
        results[backend] = out
        row.append(f"{t * 1e3:9.2f} ms")
    if len(results) == 2:
        a, b = results["numpy"], results["numba"]
        assert a[1] == b[1] and np.array_equal(a[0], b[0]), "kernels disagree"
        row.append("match")
    return row


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sizes", default="100,200,400")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    p = 65521
    rows = [["matrix", "shape", "numpy", "numba", "check"]]
    for s in (int(x) for x in args.sizes.split(",")):
        M = rng.integers(0, p, size=(s, int(1.5 * s)), dtype=np.int64)
        rows.append(compare("random", M, p, args.repeat))

    inst = sample_full_rank(LweParams(13, 3, 10, error_domain=(-1, 0, 1), t=None), args.seed)
    F = build_arora_ge(inst).expanded
    for d in (4, 5, 6):
        M = build_macaulay(F, d).rows
        rows.append(compare(f"arora-ge d={d}", M, 13, args.repeat))

    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(c.rjust(w) for c, w in zip(r, widths)))


if __name__ == "__main__":
    main()
