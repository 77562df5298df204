"""Benchmark: compiled kernel vs pure-Python kernel (vs brute force).

Usage:
    python benchmarks/bench_kernel.py [--repeats N]

Each workload computes a full period sequence; backends are swapped through
lgperiod.backends.set_backend, so both run the identical algorithm and the
results are asserted equal before timing is reported.
"""

import argparse
import random
import statistics
import time

from lgperiod import backends, classical_period, classical_period_bruteforce, parse_polynomial
from lgperiod.laurent import LaurentPoly


def _random_dense(rank, exp_bound, seed):
    rng = random.Random(seed)
    terms = []
    for _ in range(10):
        exponents = tuple(rng.randint(-exp_bound, exp_bound) for _ in range(rank))
        terms.append((exponents, rng.randint(1, 4)))
    return LaurentPoly(rank, terms)


WORKLOADS = [
    ("P2 mirror, degree 40", parse_polynomial("x + y + x^-1*y^-1"), 40),
    ("P2 mirror, degree 80", parse_polynomial("x + y + x^-1*y^-1"), 80),
    ("P3 mirror, degree 32", parse_polynomial("x + y + z + x^-1*y^-1*z^-1"), 32),
    ("dense rank 2, degree 24", _random_dense(2, 3, seed=2), 24),
    ("dense rank 3, degree 14", _random_dense(3, 2, seed=3), 14),
]


def _time(func, repeats):
    samples = []
    for _ in range(repeats):
        started = time.perf_counter()
        func()
        samples.append(time.perf_counter() - started)
    return statistics.median(samples)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--bruteforce", action="store_true",
                        help="also time the unpruned oracle (slow on big workloads)")
    args = parser.parse_args()

    names = backends.available_backends()
    if "c" not in names:
        print("compiled kernel not built; only the pure backend is available")

    header = f"{'workload':<28}" + "".join(f"{name:>12}" for name in names)
    if args.bruteforce:
        header += f"{'bruteforce':>12}"
    header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, poly, degree in WORKLOADS:
        results = {}
        timings = {}
        for name in names:
            previous = backends.set_backend(name)
            try:
                results[name] = list(classical_period(poly, degree))
                timings[name] = _time(lambda: classical_period(poly, degree), args.repeats)
            finally:
                backends.set_backend(previous)
        assert len({tuple(map(str, r)) for r in results.values()}) == 1, "backends disagree"
        row = f"{label:<28}" + "".join(f"{timings[name]:>11.4f}s" for name in names)
        if args.bruteforce:
            brute = _time(lambda: classical_period_bruteforce(poly, degree), args.repeats)
            row += f"{brute:>11.4f}s"
        if "c" in timings:
            row += f"{timings['python'] / timings['c']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
