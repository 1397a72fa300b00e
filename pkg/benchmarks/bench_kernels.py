"""Compare the compiled and pure-Python polynomial kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Also times a small end-to-end workload (Q(q) arithmetic inside the O(SL_q(2))
Ore check) under each backend, in a subprocess so the backend choice is clean.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from hopfkit._kernels import _pykernels as py

try:
    from hopfkit._kernels import _ckernels as cy
except ImportError:
    cy = None


def workload(rng, n=200, deg=12, size=10**6):
    polys = [tuple(rng.randint(-size, size) for _ in range(rng.randint(1, deg))) for _ in range(n)]
    return [p for p in polys if p and p[-1]]


def run(mod, polys):
    acc = ()
    for a, b in zip(polys, polys[1:]):
        p = mod.pmul(a, b)
        acc = mod.padd(acc, p)
        g = mod.pgcd(p, mod.pmul(a, a))
        mod.pdivexact(p, g)
    return acc


END_TO_END = (
    "from hopfkit.fpalg import o_slq2; from hopfkit.ore import check_ore; "
    "check_ore(o_slq2(4), 'a', 4)"
)


def end_to_end(pure):
    env = dict(os.environ, HOPFKIT_PURE_PYTHON="1" if pure else "0")
    code = f"import time; t=time.perf_counter(); {END_TO_END}; print(time.perf_counter()-t)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    polys = workload(random.Random(0))
    t_py = min(timeit.repeat(lambda: run(py, polys), number=1, repeat=args.repeat))
    print(f"kernels, pure python : {t_py * 1e3:8.2f} ms")
    if cy is None:
        print("kernels, cython      :      not built")
    else:
        assert run(cy, polys) == run(py, polys)
        t_cy = min(timeit.repeat(lambda: run(cy, polys), number=1, repeat=args.repeat))
        print(f"kernels, cython      : {t_cy * 1e3:8.2f} ms  ({t_py / t_cy:.2f}x)")
    e_py = end_to_end(True)
    print(f"ore check, pure python: {e_py:6.2f} s")
    if cy is not None:
        e_cy = end_to_end(False)
        print(f"ore check, cython     : {e_cy:6.2f} s  ({e_py / e_cy:.2f}x)")


if __name__ == "__main__":
    main()
