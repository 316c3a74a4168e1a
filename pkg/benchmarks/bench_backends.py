"""Benchmark the compiled core against the numpy fallback.

Times the hot loops on representative workloads and prints the median
per-call time for every backend that is importable.

Usage: python benchmarks/bench_backends.py [--repeats N] [--number N]
"""
import argparse
import statistics
import timeit

import numpy as np

from abharmonic import _purepy

try:
    from abharmonic import _accel
except ImportError:
    _accel = None


def build_cases():
    thetas = np.arange(4096) * (2.0 * np.pi / 4096)
    z = 0.9 * np.exp(0.3j)
    return [
        (
            "gauss series near x=1 (0.25,0.25;1;0.999)",
            lambda impl: impl.hyp2f1_sum(0.25, 0.25, 1.0, 0.999, 10_000_000),
        ),
        (
            "terminating series (order 40)",
            lambda impl: impl.hyp2f1_terminating(-40.0, 1.7, 2.2, 0.35, 40),
        ),
        (
            "kernel row, 4096 angles (2,-0.5)",
            lambda impl: impl.kernel_row(2.0, -0.5, z, thetas),
        ),
        (
            "radial integral, 65536 nodes (lam=2, r=0.99)",
            lambda impl: impl.i_lambda_quad(2.0, 0.99, 65536),
        ),
    ]


def median_time(fn, repeats, number):
    samples = timeit.repeat(fn, repeat=repeats, number=number)
    return statistics.median(samples) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=7, help="timing samples per case")
    parser.add_argument("--number", type=int, default=5, help="calls per sample")
    args = parser.parse_args()

    backends = [("fallback", _purepy)]
    if _accel is not None:
        backends.insert(0, ("compiled", _accel))
    else:
        print("compiled extension not built; timing the fallback only")

    header = f"{'case':<45}" + "".join(f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, call in build_cases():
        times = [median_time(lambda: call(impl), args.repeats, args.number) for _, impl in backends]
        row = f"{label:<45}" + "".join(f"{t * 1e3:>10.3f}ms" for t in times)
        if len(times) == 2 and times[0] > 0:
            row += f"{times[1] / times[0]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
