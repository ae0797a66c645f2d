"""Compare the compiled and pure-Python kernels on the hot paths.

    python3 benchmarks/bench_kernels.py [--genus 16] [--repeat 3]
"""
import argparse
import time

from nsg.kernels import available_backends
from nsg.regression import family_generators
from nsg.semigroup import NumericalSemigroup


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def workloads(genus):
    yield f"scan_subtree genus<={genus}", lambda k: len(k.scan_subtree(b"", 0, 0, genus))

    H = NumericalSemigroup.from_generators(family_generators(2))
    args = (H.membership_window, H.conductor, H.genus, 4, 200_000)
    yield "search_symmetric family(2), budget 4", lambda k: k.search_symmetric(*args)[2]

    group = [NumericalSemigroup.from_generators(g) for g in
             ([13, 14, 15, 16, 17, 18, 21, 23], [10, 11, 12, 13, 14, 17], family_generators(4))]

    def inv(k):
        for _ in range(200):
            for S in group:
                k.window_invariants(S.membership_window, S.conductor)
        return 600

    yield "window_invariants x600", inv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--genus", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available_backends()
    print(f"backends: {', '.join(sorted(backends))}")
    for name, work in workloads(args.genus):
        row = {}
        for bname, mod in sorted(backends.items()):
            row[bname], out = best_of(lambda: work(mod), args.repeat)
        cells = "  ".join(f"{b} {t * 1000:9.1f} ms" for b, t in row.items())
        speedup = ""
        if len(row) == 2:
            speedup = f"  x{row['python'] / row['cython']:.1f}"
        print(f"{name:<44} {cells}{speedup}  ({out})")


if __name__ == "__main__":
    main()
