"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best-of-N wall time of each backend and
the speedup. Exits with status 1 if the compiled module is not built.
"""
import argparse
import sys
import timeit

import numpy as np

from geoparam import _kernels_py as py
from geoparam import flowsim
from geoparam._backend import tune_allocator

try:
    from geoparam import _kernels as cy
except ImportError:
    cy = None


def cases():
    g = np.random.default_rng(0)
    x = g.standard_normal((64, 16, 25, 25))
    cols = g.standard_normal((16 * 9, 64 * 13 * 13))
    flat = g.standard_normal(64 * 32 * 13 * 13)
    gflat = g.standard_normal(flat.size)
    x3 = g.standard_normal((64, 32, 169))
    gamma, beta = g.normal(1.0, 0.1, 32), np.zeros(32)
    out, xhat, mean, var = py.bn_forward(x3, gamma, beta, 1e-5)

    perm = flowsim.PermField.from_log(2.0 * g.standard_normal((50, 50)))
    prob = flowsim.FlowProblem("quarter_five_spot")
    tx, ty = flowsim.transmissibilities(perm)
    rhs = flowsim._rhs(prob)
    p, vx, vy, _ = flowsim.solve_pressure(perm, prob)
    h = prob.h
    q_in, q_out = prob.sources()
    dt = flowsim.cfl_limit(vx, vy, prob)
    s0 = np.zeros((50, 50))

    return {
        "im2col 64x16x25x25 k3 s2": lambda k: k.im2col(x, 3, 2, 1, 13, 13),
        "col2im 64x16x25x25 k3 s2": lambda k: k.col2im(cols, 64, 16, 25, 25, 3, 2, 1, 13, 13),
        "leaky_relu forward": lambda k: k.leaky_forward(flat, 0.2),
        "leaky_relu backward": lambda k: k.leaky_backward(flat, gflat, 0.2),
        "batch_norm forward": lambda k: k.bn_forward(x3, gamma, beta, 1e-5),
        "batch_norm backward": lambda k: k.bn_backward(x3, xhat, gamma, var, 1e-5),
        "pcg 50x50 tol 1e-10": lambda k: k.pcg(tx, ty, (25, 25), rhs, 1e-10, 25000),
        "transport to 2 PVI": lambda k: k.transport(vx * h, vy * h, q_in, q_out, 0.2 * h * h, s0.copy(),
                                                    dt, 0.4, np.array([0.05])),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled kernels are not built; run `python setup.py build_ext --inplace`", file=sys.stderr)
        return 1
    tune_allocator()
    print(f"{'kernel':28s} {'numpy ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, fn in cases().items():
        times = []
        for mod in (py, cy):
            fn(mod)  # warm up
            n = 1 if name.startswith("transport") and mod is py else 3
            times.append(min(timeit.repeat(lambda: fn(mod), number=n, repeat=args.repeat)) / n)
        print(f"{name:28s} {1e3 * times[0]:10.3f} {1e3 * times[1]:10.3f} {times[0] / times[1]:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
