"""Compare the numba and pure-numpy kernel backends on representative inputs.

    python benchmarks/bench_kernels.py [--repeat 5]

Both backends are imported directly, so the LCVERIFY_PURE_NUMPY flag does not
matter here. Each row checks that the two outputs agree before timing them.
"""
import argparse
import time

import numpy as np

from lcverify import graphs
from lcverify.codes import LinearCode
from lcverify.kernels import numba_impl, numpy_impl


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    for name, g in [("J(12,6) 924v", graphs.johnson(12, 6)), ("H(6,3) 729v", graphs.hamming(6, 3)),
                    ("Q_10 1024v", graphs.hypercube(10))]:
        indptr, indices = g.csr
        yield f"all_pairs_distances {name}", lambda m, a=indptr, b=indices: m.all_pairs_distances(a, b)
        dist = g.distances
        diam = int(dist.max())
        yield (f"intersection_counts {name}",
               lambda m, d=dist, a=indptr, b=indices, k=diam: m.intersection_counts(d, a, b, k))

    rng = np.random.default_rng(1)
    code = LinearCode.from_rows(2, rng.integers(0, 2, size=(16, 30)).tolist())
    f = code.field
    yield ("span_weight_histogram [30,16]_2",
           lambda m: m.span_weight_histogram(code.generator, f.add, f.sub, f.mul, 2))
    code3 = LinearCode.from_rows(3, rng.integers(0, 3, size=(4, 14)).tolist())
    f3 = code3.field
    yield ("coset_tables [14,4]_3",
           lambda m: m.coset_tables(code3.parity_check, f3.add, f3.sub, f3.mul, 3))


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if numba_impl is None:
        raise SystemExit("numba backend unavailable (not installed or disabled by LCVERIFY_PURE_NUMPY)")
    print(f"{'kernel':48s} {'numba s':>10s} {'numpy s':>10s} {'speedup':>8s}")
    for name, run in cases():
        assert _same(run(numba_impl), run(numpy_impl)), f"backends disagree on {name}"  # also warms the JIT
        t_nb = best_of(lambda: run(numba_impl), args.repeat)
        t_np = best_of(lambda: run(numpy_impl), args.repeat)
        print(f"{name:48s} {t_nb:10.4f} {t_np:10.4f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
