"""Compare the compiled and pure-Python matrix kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times raw 4x4 / 7x7 products and inverses over GF(128) and GF(243), plus an
end-to-end factorization sweep with each backend forced in a subprocess.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from suzree._kernels import CKernel, PyKernel
from suzree.field import FieldSpec

SWEEP = """
import time
from suzree import Ree, Suzuki, BACKEND
for G in (Suzuki.from_q(128), Ree.from_q(27)):
    t0 = time.perf_counter()
    for i in range({n}):
        g = G.random_element(i)
        assert G.check_factorization(g, G.factor(g))
    print(f"  {{BACKEND:7s}} {{G!r:14s}} {n} factorizations: {{time.perf_counter() - t0:.2f}} s")
"""


def kernel_rows(repeat):
    for q, dim in ((128, 4), (243, 7)):
        field = FieldSpec.for_order(q)
        t = field.tables
        rng = random.Random(0)
        a = tuple(rng.randrange(q) for _ in range(dim * dim))
        b = tuple(rng.randrange(q) for _ in range(dim * dim))
        for kernel_cls in (PyKernel, CKernel):
            if kernel_cls is None:
                print(f"  compiled extension not built; skipping GF({q})")
                continue
            k = kernel_cls(q, t.add, t.mul, t.neg, t.inv)
            mul = min(timeit.repeat(lambda: k.mat_mul(a, b, dim), number=2000, repeat=repeat)) / 2000
            inv = min(timeit.repeat(lambda: k.mat_inv(a, dim), number=2000, repeat=repeat)) / 2000
            print(f"  {k.backend:7s} GF({q}) {dim}x{dim}: mul {mul * 1e6:7.2f} us  inv {inv * 1e6:7.2f} us")


def sweep(n):
    sys.stdout.flush()
    for pure in ("", "1"):
        env = dict(os.environ, SUZREE_PURE_PYTHON=pure)
        subprocess.run([sys.executable, "-c", SWEEP.format(n=n)], env=env, check=True)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--sweep", type=int, default=2000, help="factorizations per group")
    args = parser.parse_args()
    print("raw kernels (best of repeats, per call):")
    kernel_rows(args.repeat)
    print("end to end:")
    sweep(args.sweep)


if __name__ == "__main__":
    main()
