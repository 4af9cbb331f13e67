"""Compiled kernels vs the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Times one displacement pass and one squeezed-coherent amplitude series at a
few truncations, checks the two backends agree, and prints the speedup.
"""
import argparse
import timeit

import numpy as np

from postsel import _pykernels
from postsel.states import coherent

try:
    from postsel import _kernels
except ImportError:  # extension not built
    _kernels = None

DIMS = (64, 128, 256, 512)


def _time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def cases(dim):
    v = np.ascontiguousarray(coherent(1.0, 0.4, dim).amps)
    beta = 0.5 + 0.3j
    return {
        "displace_step": lambda mod: mod.displace_step(beta, v),
        "squeezed_series": lambda mod: mod.squeezed_coherent_series(beta, 0.5, 1.0, dim),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args(argv)
    if _kernels is None:
        print("compiled extension not available; only the numpy fallback can run")
    print(f"{'kernel':<16} {'dim':>5} {'numpy [ms]':>11} {'cython [ms]':>12} {'speedup':>8} {'max diff':>9}")
    for dim in DIMS:
        for name, call in cases(dim).items():
            t_py = _time(lambda: call(_pykernels), args.repeat) * 1e3
            if _kernels is None:
                print(f"{name:<16} {dim:>5} {t_py:>11.3f} {'-':>12} {'-':>8} {'-':>9}")
                continue
            t_cy = _time(lambda: call(_kernels), args.repeat) * 1e3
            diff = float(np.max(np.abs(np.asarray(call(_pykernels)) - np.asarray(call(_kernels)))))
            print(f"{name:<16} {dim:>5} {t_py:>11.3f} {t_cy:>12.3f} {t_py / t_cy:>7.1f}x {diff:>9.1e}")


if __name__ == "__main__":
    main()
