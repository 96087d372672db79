"""Compare the numba and numpy row-reduction and matmul kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both kernels are called directly, so one process measures both paths
regardless of SUBLCP_DISABLE_NUMBA.
"""

import argparse
import time

import numpy as np

from sublcp import GF, _kernels

CASES = [
    # (q, rows, cols)
    (2, 16, 32),
    (2, 64, 128),
    (5, 16, 32),
    (5, 64, 128),
    (31, 48, 96),
    (4, 16, 32),
    (9, 48, 96),
]


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(args.seed)
    _kernels.warm_up()
    print(f"{'kernel':<8}{'q':>4}{'shape':>12}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for q, r, c in CASES:
        F = GF(q)
        ext = F.tables if F.m > 1 else None
        A = rng.integers(0, q, size=(r, c)).astype(np.int64)
        B = rng.integers(0, q, size=(c, r)).astype(np.int64)
        # compile the exact signature before timing
        _kernels.rref_numba(A, F.p, ext)
        _kernels.matmul_numba(A, B, F.p, ext)
        assert np.array_equal(_kernels.rref_numba(A, F.p, ext)[0], _kernels.rref_numpy(A, F.p, ext)[0])
        for name, nb, npf in (
            ("rref", lambda: _kernels.rref_numba(A, F.p, ext), lambda: _kernels.rref_numpy(A, F.p, ext)),
            ("matmul", lambda: _kernels.matmul_numba(A, B, F.p, ext), lambda: _kernels.matmul_numpy(A, B, F.p, ext)),
        ):
            t_nb, t_np = best_of(nb, args.repeat), best_of(npf, args.repeat)
            print(f"{name:<8}{q:>4}{f'{r}x{c}':>12}{t_nb * 1e3:>12.3f}{t_np * 1e3:>12.3f}{t_np / t_nb:>10.1f}")


if __name__ == "__main__":
    main()
