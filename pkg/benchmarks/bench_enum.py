"""Time the compiled and pure-Python enumeration kernels on the same inputs.

    python benchmarks/bench_enum.py [TYPE ...] [--repeat N]
"""
import argparse
import time

from abelian_ideals import LieType, build_root_system, dimension_distribution
from abelian_ideals.ideal_enum import _tables
from abelian_ideals.kernel import BACKENDS

DEFAULT_TYPES = ["E8", "C12", "B14", "D14", "A16", "C16"]


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("types", nargs="*", default=DEFAULT_TYPES)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    names = sorted(BACKENDS)
    print(f"{'type':>6} {'ideals':>10} " + " ".join(f"{n:>10}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for text in args.types:
        rs = build_root_system(LieType.parse(text))
        _tables(rs)  # table construction is shared; time only the search
        times = {}
        for name in names:
            times[name] = best_time(lambda: dimension_distribution(rs, backend=name), args.repeat)
        cells = " ".join(f"{times[n]:>9.4f}s" for n in names)
        speedup = f"  {times['python'] / times['cython']:>9.1f}x" if "cython" in times else ""
        print(f"{text:>6} {2 ** rs.rank:>10} {cells}{speedup}")


if __name__ == "__main__":
    main()
