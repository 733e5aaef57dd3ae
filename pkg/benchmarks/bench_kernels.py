"""Compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import sys
import timeit

from steinhaus import _kernels_py

try:
    from steinhaus import _kernels as compiled
except ImportError:
    sys.exit("compiled extension not built; run `pip install --no-build-isolation -e .`")

rng = random.Random(0)
ROWS = [rng.getrandbits(60) for _ in range(2000)]
VECS = [rng.getrandbits(64) for _ in range(64)]

CASES = [
    ("scan_members D n=16", lambda k: k.scan_members(16, 3)),
    ("scan_members R n=14", lambda k: k.scan_members(14, 2)),
    ("scan_graph_parity order=15", lambda k: k.scan_graph_parity(15)),
    ("derive_rows n=60 x2000", lambda k: [k.derive_rows(b, 60) for b in ROWS]),
    ("degree_parities order=61 x2000", lambda k: [k.degree_parities(b, 61) for b in ROWS]),
    ("gf2_rank 64x64 x200", lambda k: [k.gf2_rank(VECS) for _ in range(200)]),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':34} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in CASES:
        assert fn(compiled) == fn(_kernels_py), name
        py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:34} {py:10.4f} {cy:10.4f} {py / cy:8.1f}x")


if __name__ == "__main__":
    main()
