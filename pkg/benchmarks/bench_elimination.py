"""Compare the compiled and pure-Python elimination kernels.

    python benchmarks/bench_elimination.py [--repeat 20]

Two workloads: random Gaussian-integer matrices of growing size, and the
kernel computations behind the faithfulness check of the largest grid
representations.
"""

import argparse
import random
import time

from superheis import elimination
from superheis.representation import build_pi_even_center, build_pi_odd_center, faithful_kernel


def _random_rows(rng, n, cols, bound=3):
    re = [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(n)]
    im = [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(n)]
    return re, im


def time_random(backend, size, repeat, seed=0):
    rng = random.Random(seed)
    mats = [_random_rows(rng, size, size) for _ in range(repeat)]
    start = time.perf_counter()
    for re, im in mats:
        elimination.ff_rref_ints([r[:] for r in re], [r[:] for r in im], size, backend)
    return (time.perf_counter() - start) / repeat


def time_kernels(backend, repeat):
    reps = [build_pi_even_center(4, 5), build_pi_odd_center(6, 3)]
    previous = elimination.set_backend(backend)
    try:
        start = time.perf_counter()
        for _ in range(repeat):
            for r in reps:
                faithful_kernel(r)
        return (time.perf_counter() - start) / repeat
    finally:
        elimination.set_backend(previous)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 12, 16])
    args = ap.parse_args(argv)

    backends = elimination.available_backends()
    print("backends: %s" % ", ".join(backends))
    if "cython" not in backends:
        print("compiled kernel not built; only the Python timings are shown")
    header = "%-22s" % "workload" + "".join("%14s" % b for b in backends)
    if len(backends) == 2:
        header += "%10s" % "speedup"
    print(header)
    rows = [("random %dx%d" % (s, s), lambda b, s=s: time_random(b, s, args.repeat)) for s in args.sizes]
    rows.append(("faithfulness kernels", lambda b: time_kernels(b, max(1, args.repeat // 4))))
    for name, fn in rows:
        times = [fn(b) for b in backends]
        line = "%-22s" % name + "".join("%12.3fms" % (t * 1e3) for t in times)
        if len(times) == 2:
            line += "%9.1fx" % (times[0] / times[1])
        print(line)


if __name__ == "__main__":
    main()
