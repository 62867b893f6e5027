"""Compare the compiled and numpy row-reduction backends.

Run with ``python3 benchmarks/bench_gfp.py [--repeat N]``. Two workloads:
random dense matrices over GF(p), and the end-to-end trace and resolution
computations that the verifier spends most of its time in.
"""

import argparse
import time

import numpy as np

from tracelab import artinian as art
from tracelab import gfp


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def random_rref(shape, p, seed=0):
    rng = np.random.default_rng(seed)
    mats = [rng.integers(0, p, size=shape, dtype=np.int64) for _ in range(5)]
    return lambda: [gfp.rref(m, p) for m in mats]


def resolution_workload():
    alg = art.monomial_quotient(101, ["x", "y", "z"], ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"])
    k = art.PresentedModule.residue_field(alg)
    return lambda: [art.trace(s) for s in art.minimal_resolution(k, 4).syzygies]


def trace_workload():
    alg = art.monomial_quotient(101, ["x", "y"], ["x^3", "x*y", "y^3"])
    rng = np.random.default_rng(1)
    mods = [art.random_module(alg, rng) for _ in range(30)]
    return lambda: [art.trace(m) for m in mods]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    workloads = [
        ("rref 60x60 p=101", random_rref((60, 60), 101)),
        ("rref 200x300 p=101", random_rref((200, 300), 101)),
        ("rref 200x300 p=2", random_rref((200, 300), 2)),
        ("resolve k, 3 vars, m^2=0", resolution_workload()),
        ("trace of 30 random modules", trace_workload()),
    ]
    backends = gfp.available_backends()
    print(f"{'workload':<30}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in workloads:
        row = []
        for b in backends:
            gfp.set_backend(b)
            row.append(best_of(fn, args.repeat))
        line = f"{name:<30}" + "".join(f"{t * 1e3:>10.1f}ms" for t in row)
        if len(row) == 2:
            line += f"{row[1] / row[0]:>11.1f}x"
        print(line)
    gfp.set_backend(backends[0])


if __name__ == "__main__":
    main()
