"""Compare the numba kernels with the numpy fallback.

Each backend runs in its own interpreter because the choice is fixed at import
time by ``HALLWRIGHT_NUMBA``.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from hallwright import _kernels as K
from hallwright import brute
from hallwright.brute import CyclicCategory, hall_table
from hallwright.cyclic import classes_of_dim
from hallwright.fields import field

repeat = int(sys.argv[1])
F = field(3)
rng = np.random.default_rng(0)
mats = rng.integers(0, 3, size=(4000, 6, 6))
K.batch_rank(mats[:2], F)  # compile outside the timing


def best(fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def hall():
    brute._TABLES.clear()
    cat = CyclicCategory(1)
    for X in classes_of_dim((2, 2)):
        hall_table(cat, X, 2)

hall()
out = {
    "backend": K.backend(),
    "batch_rank 4000 x 6x6 over F_3": best(lambda: K.batch_rank(mats, F)),
    "hall_table A~1 dim (2,2) over F_2": best(hall),
}
print(json.dumps(out))
"""


def run(flag, repeat):
    env = dict(os.environ, HALLWRIGHT_NUMBA=flag)
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run("1", args.repeat), run("0", args.repeat)
    print(f"{'task':40s} {fast['backend']:>10s} {slow['backend']:>10s} {'ratio':>7s}")
    for key in fast:
        if key == "backend":
            continue
        print(f"{key:40s} {fast[key]:10.4f} {slow[key]:10.4f} {slow[key] / fast[key]:7.1f}")


if __name__ == "__main__":
    main()
