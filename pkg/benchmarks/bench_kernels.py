"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel is called once before timing so numba compilation is excluded.
Results are checked for agreement before anything is printed.
"""
import argparse
import timeit

import numpy as np

from journeybench import _kernels as k


def cases(rng):
    img = rng.uniform(0, 1, (64, 64))
    big = rng.uniform(0, 1, (128, 128))
    m = np.array([[0.98, 0.05], [-0.04, 1.02]])
    off = np.array([1.3, -0.7])
    pos, neg = rng.uniform(0, 1, (2, 3000))
    return {
        "warp 64x64": (k.warp_numba, k.warp_numpy, (img, m, off, 0.05)),
        "warp 128x128": (k.warp_numba, k.warp_numpy, (big, m, off, 0.05)),
        "ncc 128x128": (k.ncc_numba, k.ncc_numpy, (big, big[::-1].copy())),
        "pair_wins 3000x3000": (k.pair_wins_numba, k.pair_wins_numpy, (pos, neg)),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=50)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)
    print(f"{'kernel':<22}{'numba ms':>10}{'numpy ms':>10}{'speedup':>9}")
    for name, (fast, slow, a) in cases(rng).items():
        np.testing.assert_allclose(fast(*a), slow(*a), rtol=1e-9, atol=1e-9)
        t_fast = min(timeit.repeat(lambda: fast(*a), number=1, repeat=args.repeat)) * 1e3
        t_slow = min(timeit.repeat(lambda: slow(*a), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<22}{t_fast:>10.3f}{t_slow:>10.3f}{t_slow / t_fast:>8.1f}x")


if __name__ == "__main__":
    main()
