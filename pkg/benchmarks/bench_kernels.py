"""Compare the pure-Python and compiled enumeration kernels.

Times the two word-level counters on increasing sizes and prints one
table per counter.  Run from a checkout with the package installed:

    python3 benchmarks/bench_kernels.py --max-n 13
"""

import argparse
import time

from setpart._kernels import _pure

try:
    from setpart._kernels import _speed
except ImportError:
    _speed = None


def clock(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_counter(name, pure_fn, speed_fn, sizes):
    print(name)
    print("%4s %16s %12s %12s %9s" % ("n", "value", "pure (s)", "c (s)", "ratio"))
    for n in sizes:
        value, pure_t = clock(pure_fn, n)
        if speed_fn is None:
            print("%4d %16d %12.4f %12s %9s" % (n, value, pure_t, "-", "-"))
            continue
        check, speed_t = clock(speed_fn, n)
        if check != value:
            raise SystemExit(
                "backend disagreement at n=%d: %d vs %d" % (n, value, check)
            )
        ratio = pure_t / speed_t if speed_t > 0 else float("inf")
        print(
            "%4d %16d %12.4f %12.4f %8.1fx"
            % (n, value, pure_t, speed_t, ratio)
        )
    print()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=13)
    args = parser.parse_args(argv)
    sizes = range(8, args.max_n + 1)
    if _speed is None:
        print("compiled kernel unavailable; timing the pure backend only\n")
    bench_counter(
        "partition words",
        _pure.count_rgs,
        None if _speed is None else _speed.count_rgs,
        sizes,
    )
    bench_counter(
        "non-crossing words",
        _pure.count_noncrossing,
        None if _speed is None else _speed.count_noncrossing,
        sizes,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
