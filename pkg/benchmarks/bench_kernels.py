"""Compare the compiled and pure-Python elimination kernels.

    python3 benchmarks/bench_kernels.py [--sizes 8,16,32] [--repeat 5]

Each kernel runs on the same seeded random matrices under both backends;
results are checked equal before timings are reported.
"""

from __future__ import annotations

import argparse
import random
import timeit

from dnlattice._kernels import _pure

try:
    from dnlattice._kernels import _ext
except ImportError:
    _ext = None


def random_rows(rng: random.Random, m: int, n: int, bound: int = 9) -> list[list[int]]:
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)]


def sparse_rows(rng: random.Random, m: int, n: int, density: float = 0.15) -> list[list[int]]:
    """Entries in {-1, 0, 1}, the shape of stacked group-action matrices."""
    return [[rng.choice((-1, 1)) if rng.random() < density else 0 for _ in range(n)]
            for _ in range(m)]


def cases(size: int, rng: random.Random) -> dict[str, tuple]:
    a = random_rows(rng, size, size)
    b = random_rows(rng, size, size)
    sq = sparse_rows(rng, size, size)
    tall = sparse_rows(rng, 2 * size, size)
    return {
        "matmul": (a, b, size),
        "bareiss_det": (sq,),
        "hnf_rows": (tall, size, True),
        "smith": (tall, size),
    }


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="8,16,32,64")
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    if _ext is None:
        print("compiled kernels not built; only the pure backend is available")
    rng = random.Random(args.seed)
    print(f"{'kernel':12} {'size':>5} {'pure ms':>10} {'cython ms':>10} {'speedup':>8}")
    for size in (int(s) for s in args.sizes.split(",")):
        for name, call_args in cases(size, rng).items():
            pure = getattr(_pure, name)
            t_pure = min(timeit.repeat(lambda: pure(*call_args), number=1, repeat=args.repeat))
            if _ext is None:
                print(f"{name:12} {size:>5} {t_pure * 1e3:>10.3f} {'-':>10} {'-':>8}")
                continue
            fast = getattr(_ext, name)
            try:
                same = fast(*call_args) == pure(*call_args)
            except OverflowError:
                print(f"{name:12} {size:>5} {t_pure * 1e3:>10.3f} {'overflow':>10} {'-':>8}")
                continue
            if not same:
                raise SystemExit(f"{name} at size {size}: backends disagree")
            t_fast = min(timeit.repeat(lambda: fast(*call_args), number=1, repeat=args.repeat))
            print(f"{name:12} {size:>5} {t_pure * 1e3:>10.3f} {t_fast * 1e3:>10.3f} "
                  f"{t_pure / t_fast:>7.1f}x")


if __name__ == "__main__":
    main()
