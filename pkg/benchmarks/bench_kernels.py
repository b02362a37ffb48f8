"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import time

from qcayley import kernels
from qcayley.cayley import quadratic_unitary_graph
from qcayley.modring import quadratic_units


def cases():
    for n in (1009, 4096, 20_000):
        steps = sorted(quadratic_unitary_graph(n).steps)
        yield f"bfs_distances n={n}", "bfs_distances", (n, steps)
    for n in (997, 2999):
        yield f"pair_counts n={n}", "pair_counts", (n, sorted(quadratic_units(n)))
    for n in (1001, 5005):
        mask = bytearray(n)
        mask[0] = 1
        yield f"sumset n={n}", "sumset", (n, mask, sorted(quadratic_units(n)))
    for n in (40, 60):
        # complement of a perfect graph: the search must exhaust every path
        yield f"hole search complement n={n}", "find_induced_odd_cycle", (
            n, quadratic_unitary_graph(n).complement().adjacency_mask(), 7)


def best_time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled kernels are not built; only the Python timings are shown")
    print(f"{'kernel':32} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for label, name, fargs in cases():
        py = best_time(getattr(backends["python"], name), fargs, args.repeat)
        if "compiled" in backends:
            cc = best_time(getattr(backends["compiled"], name), fargs, args.repeat)
            print(f"{label:32} {py:10.4f} {cc:11.5f} {py / cc:7.1f}x")
        else:
            print(f"{label:32} {py:10.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
