"""Benchmark: compiled speedup kernel vs the pure-Python twin.

Times the coefficient-dict primitives on representative workloads (dense-ish
Laurent products, Groebner-style vector reduction steps) and one end-to-end
syzygy computation.  Run:

    python3 benchmarks/bench_kernel.py
"""

import random
import time

from alexmod import _purekernel

try:
    from alexmod import _speedups
except ImportError:
    _speedups = None


def random_poly(rng, terms, span=40, coeff=10**6):
    out = {}
    for _ in range(terms):
        out[rng.randint(-span, span)] = rng.randint(1, coeff)
    return out


def random_vec(rng, positions, terms, span=30):
    out = {}
    for _ in range(terms):
        out[(rng.randrange(positions), rng.randint(0, span))] = rng.randint(-9, 9) or 1
    return out


def bench(label, fn, reps=5):
    best = min(_timed(fn) for _ in range(reps))
    print(f"  {label:<28s} {best * 1000:9.2f} ms")
    return best


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def poly_workload(kernel, polys):
    def run():
        for a in polys:
            for b in polys[:20]:
                kernel.pmul(a, b)
    return run


def vec_workload(kernel, vecs):
    def run():
        acc = {}
        for v in vecs:
            acc = kernel.vadd_scaled(acc, v, 3, 2)
            acc = kernel.vadd_scaled(acc, v, -3, 2)
            acc = kernel.vadd_scaled(acc, v, 1, 0)
    return run


def syzygy_workload():
    from alexmod.grobner import lambda_kernel
    from alexmod.laurent import LambdaMatrix, LaurentPoly, ZZ

    P = LaurentPoly.from_text
    A = LambdaMatrix(
        ZZ,
        [
            [P("t^2 - 2*t + 1"), P("2*t - 2"), P("3"), P("t + 1")],
            [P("t - 1"), P("0"), P("2*t - 1"), P("5")],
            [P("2"), P("t^3 - 1"), P("0"), P("t - 2")],
        ],
    )

    def run():
        lambda_kernel(A)

    return run


def main():
    rng = random.Random(0)
    polys = [random_poly(rng, 25) for _ in range(60)]
    vecs = [random_vec(rng, 12, 30) for _ in range(4000)]
    kernels = [("pure", _purekernel)]
    if _speedups is not None:
        kernels.append(("compiled", _speedups))
    else:
        print("compiled kernel unavailable; run `python3 setup.py build_ext --inplace`")

    results = {}
    for name, k in kernels:
        print(f"{name} kernel:")
        results[name, "pmul"] = bench("poly products", poly_workload(k, polys))
        results[name, "vec"] = bench("vector axpy steps", vec_workload(k, vecs))

    print("end-to-end syzygy (selected kernel):")
    bench("lambda_kernel 3x4", syzygy_workload())

    if _speedups is not None:
        for op in ("pmul", "vec"):
            speedup = results["pure", op] / results["compiled", op]
            print(f"speedup ({op}): {speedup:.2f}x")


if __name__ == "__main__":
    main()
