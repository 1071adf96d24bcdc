"""Timing comparison of the compiled and pure-Python kernel backends.

Runs the same workloads through both implementations, checks the outputs are
identical, and prints a table with the speedup.  Usage:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from hadalab import numth, sring
from hadalab._kernels import _pykernels as pure

try:
    from hadalab._kernels import _cykernels as cy
except ImportError:
    cy = None


def coset_masks(n, a):
    part = numth.cyclotomic_cosets(a, n)
    words = sring.code(sring.invariant_family(n, a))
    return [words[s].mask for s in part.reps()]


def workloads():
    m24 = coset_masks(24, 13)
    m36 = coset_masks(36, 17)
    m18 = coset_masks(18, 1)
    yield ("invariant_scan 2^18 members (24,13)",
           lambda k: k.invariant_scan(24, m24, 0, 1 << 18, (6, 10)))
    yield ("difference_scan (36,17) size 15",
           lambda k: k.difference_scan(36, m36, 15, 6, ()))
    yield ("difference_scan (36,17) size 21",
           lambda k: k.difference_scan(36, m36, 21, 12, ()))
    yield ("hadamard_scan n=16 8008 candidates",
           lambda k: (k.hadamard_scan(16, 6, (1 << 6) - 1, 3003),
                      k.hadamard_scan(16, 10, (1 << 10) - 1, 5005)))
    yield ("barker_branch n=19 full tree",
           lambda k: k.barker_branch(19, ()))
    yield ("includes_exhaustive 2^18 members (18,1)",
           lambda k: k.includes_exhaustive(18, m18, 1))
    yield ("reversal_audit n=12 all sequences",
           lambda k: k.reversal_audit(12, [5, 7], 0))


def run_one(fn, backend, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(backend)
        best = min(best, time.perf_counter() - t0)
    return out, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if cy is None:
        print("compiled backend not available; nothing to compare")
        return

    rows = []
    for label, fn in workloads():
        out_p, t_p = run_one(fn, pure, args.repeat)
        out_c, t_c = run_one(fn, cy, args.repeat)
        assert out_p == out_c, "backend mismatch on %s" % label
        rows.append((label, t_p, t_c, t_p / t_c if t_c > 0 else float("inf")))

    w = max(len(r[0]) for r in rows)
    print("%-*s %10s %10s %9s" % (w, "workload", "pure [s]", "cython [s]", "speedup"))
    for label, t_p, t_c, sp in rows:
        print("%-*s %10.4f %10.4f %8.1fx" % (w, label, t_p, t_c, sp))


if __name__ == "__main__":
    main()
