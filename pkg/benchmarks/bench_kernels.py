"""Compiled vs pure-Python enumeration kernel on hexagonal rings.

    python benchmarks/bench_kernels.py --max-faces 11 --repeat 3

Prints CSV: n, count, seconds per backend, and the speedup.
"""
import argparse
import csv
import random
import sys
import time

from polyring import oracle, transfer
from polyring.notation import FaceSpec, RingSpec
from polyring.polygraph import build_ring


def best_time(graph, backend, repeat):
    prev = oracle.set_backend(backend)
    try:
        best, value = float("inf"), None
        for _ in range(repeat):
            t0 = time.perf_counter()
            value = oracle.count_maximal(graph)
            best = min(best, time.perf_counter() - t0)
        return best, value
    finally:
        oracle.set_backend(prev)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min-faces", type=int, default=3)
    p.add_argument("--max-faces", type=int, default=11)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    backends = oracle.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; timing the Python kernel only", file=sys.stderr)
    rng = random.Random(args.seed)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "count"] + [f"{b}_s" for b in backends] + ["speedup"])
    for n in range(args.min_faces, args.max_faces + 1):
        spec = RingSpec(tuple(FaceSpec(6, rng.choice((1, 2, 3))) for _ in range(n)))
        g = build_ring(spec)
        times = {}
        for b in backends:
            times[b], value = best_time(g, b, args.repeat)
            assert value == transfer.count_ring(spec)
        speedup = times["python"] / times["cython"] if "cython" in times and times["cython"] else ""
        w.writerow([n, value] + [f"{times[b]:.5f}" for b in backends]
                   + [f"{speedup:.1f}" if speedup else ""])
        sys.stdout.flush()


if __name__ == "__main__":
    main()
