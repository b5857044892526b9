"""Compare the compiled and pure-Python determinant kernels.

    python3 benchmarks/bench_det.py [--sizes 4 8 12] [--degree 3] [--repeat 3]

Times ``det_poly_mod`` (evaluation/interpolation over GF(p)) on random
polynomial matrices, checks that both backends agree, and also times the
full ``det_exact`` path on integer Laurent matrices with each backend.
"""

import argparse
import random
import time

from twistedtorsion import kernels
from twistedtorsion.algebra import ZZ, ExactMatrix, LaurentPolynomial, det_exact

P = 2_147_483_629


def random_poly_matrix(rng, n, degree):
    return [[rng.randrange(P) for _ in range(degree + 1)] for _ in range(n * n)]


def best_of(repeat, fn):
    times = []
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def bench_kernel(sizes, degree, repeat):
    rng = random.Random(0)
    print(f"det_poly_mod over GF({P}), entry degree {degree}")
    print(f"{'n':>4} {'python (s)':>12} {'cython (s)':>12} {'speedup':>9}")
    for n in sizes:
        entries = random_poly_matrix(rng, n, degree)
        npoints = n * degree + 1
        tp, want = best_of(repeat, lambda: kernels.det_poly_mod(entries, n, npoints, P, backend="python"))
        if kernels.compiled_kernels is None:
            print(f"{n:>4} {tp:>12.4f} {'n/a':>12} {'':>9}")
            continue
        tc, got = best_of(repeat, lambda: kernels.det_poly_mod(entries, n, npoints, P, backend="cython"))
        assert list(got) == list(want), "backends disagree"
        print(f"{n:>4} {tp:>12.4f} {tc:>12.4f} {tp / tc:>8.1f}x")


def bench_exact(sizes, repeat):
    rng = random.Random(1)
    print("\ndet_exact on integer Laurent matrices (entries of span 2, coefficients up to 50)")
    print(f"{'n':>4} {'python (s)':>12} {'cython (s)':>12} {'speedup':>9}")
    for n in sizes:
        rows = [[LaurentPolynomial.from_dict(ZZ, {e: rng.randint(-50, 50) for e in range(-1, 2)})
                 for _ in range(n)] for _ in range(n)]
        M = ExactMatrix(ZZ, rows)
        tp, want = best_of(repeat, lambda: det_exact(M, backend="python"))
        if kernels.compiled_kernels is None:
            print(f"{n:>4} {tp:>12.4f} {'n/a':>12} {'':>9}")
            continue
        tc, got = best_of(repeat, lambda: det_exact(M, backend="cython"))
        assert got == want, "backends disagree"
        print(f"{n:>4} {tp:>12.4f} {tc:>12.4f} {tp / tc:>8.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 12, 16])
    parser.add_argument("--degree", type=int, default=3)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"selected backend: {kernels.BACKEND}")
    bench_kernel(args.sizes, args.degree, args.repeat)
    bench_exact(args.sizes, args.repeat)


if __name__ == "__main__":
    main()
