"""Compare the compiled kernels with the numpy fallback.

Run with ``python benchmarks/bench_kernels.py``.  Prints best-of-N timings
and the maximum output difference between the two backends.
"""

import argparse
import timeit

import numpy as np

from waelab import _pykernels as py

try:
    from waelab import _ckernels as cy
except ImportError:
    cy = None


def cases(rng):
    X = rng.normal(size=(100, 16))
    Y = rng.normal(size=(100, 16))
    K = py.gram(X, Y, py.KERNEL_IMQ, 32.0)
    W = np.full((100, 100), 1e-4)
    n = 2000
    shapes = rng.integers(0, 3, n).astype(np.int64)
    scales = rng.uniform(0.5, 1, n)
    rots = rng.uniform(0, 2 * np.pi, n)
    xs, ys = rng.uniform(0, 1, n), rng.uniform(0, 1, n)
    P = rng.normal(size=2_000_000)
    G = rng.normal(size=P.size)

    def adam(m):
        # fresh moments each call so repeats do the same work
        out = P.copy()
        m.adam_update(out, G, np.zeros_like(P), np.zeros_like(P), 1e-3, 0.9, 0.999, 1e-8, 0.1, 0.03)
        return out

    return {
        "gram imq 100x100x16": lambda m: m.gram(X, Y, py.KERNEL_IMQ, 32.0),
        "gram_grad_x 100x100x16": lambda m: m.gram_grad_x(X, Y, K, W, py.KERNEL_IMQ, 32.0),
        "adam update 2M params": adam,
        "rasterize 2000 sprites 64px": lambda m: m.rasterize(shapes, scales, rots, xs, ys, 64),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        print("compiled extension not built; only the fallback is available")
    for name, fn in cases(np.random.default_rng(0)).items():
        t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        line = f"{name:30s} python {t_py * 1e3:9.2f} ms"
        if cy is not None:
            t_cy = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
            diff = float(np.max(np.abs(np.asarray(fn(py), float) - np.asarray(fn(cy), float))))
            line += f"   cython {t_cy * 1e3:9.2f} ms   speedup {t_py / t_cy:5.1f}x   max diff {diff:.1e}"
        print(line)


if __name__ == "__main__":
    main()
