"""Compare the compiled and pure-Python enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from vertexlab import _pykernels
from vertexlab.conventions import dwbc_boundary_6v

try:
    from vertexlab import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ("count 6v n=6", "count_region_6v", lambda: dwbc_boundary_6v(6)),
    ("enum 6v n=5", "enum_region_6v", lambda: dwbc_boundary_6v(5)),
    ("count 20v n=3", "count_dwbc_20v", lambda: (3,)),
    ("enum 20v n=3", "enum_dwbc_20v", lambda: (3,)),
]


def bench(mod, fname, args, repeat):
    fn = getattr(mod, fname)
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()
    print(f"{'case':<16}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for label, fname, make in CASES:
        args = make()
        py = bench(_pykernels, fname, args, opts.repeat)
        if _ckernels is None:
            print(f"{label:<16}{py:>12.4f}{'n/a':>12}{'':>10}")
            continue
        cy = bench(_ckernels, fname, args, opts.repeat)
        assert getattr(_ckernels, fname)(*args) == getattr(_pykernels, fname)(*args)
        print(f"{label:<16}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
