"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--batch B]

Each row reports the best-of-N mean time per call for both backends and the
speedup.  The last row is one full learner update (forward, backward and
RMSProp step of the two-head network) on a plain-variant batch.
"""
import argparse
import timeit

import numpy as np

from mulex import _fallback, kernels
from mulex.learner import Learner, RewardSpec


def cases(batch, rng):
    # the first plain-body layer after SAME padding: 15x15 input, 7x7 output
    x = rng.random((batch, 4, 15, 15)).astype(np.float32).transpose(0, 2, 3, 1)
    cols = np.empty((batch * 7 * 7, 3 * 3 * 4), np.float32)
    g = rng.standard_normal(cols.shape).astype(np.float32)
    dx = np.empty((batch, 15, 15, 4), np.float32)
    n = 60_000
    p, grad, avg = (rng.standard_normal(n).astype(np.float32) for _ in range(3))
    avg = np.abs(avg)
    bank = rng.random((5000, 14, 13)).astype(np.float32)
    ids = rng.integers(5000, size=(batch, 4))
    out = np.empty((batch, 4, 14, 13), np.float32)
    return {
        "im2col 3x3/2": lambda k: k.im2col(x, 3, 2, cols),
        "col2im 3x3/2": lambda k: k.col2im(g, 3, 2, dx),
        f"rmsprop ({n} params)": lambda k: k.rmsprop_update(p, grad, avg, 1e-9, 0.95, 1e-5),
        "gather_frames": lambda k: k.gather_frames(bank, ids, out),
    }


def learner_update(batch, rng, backend):
    learner = Learner((4, 14, 13), RewardSpec.mulex(), kernels=backend)
    obs = rng.random((batch, 4, 14, 13)).astype(np.float32)
    nobs = rng.random((batch, 4, 14, 13)).astype(np.float32)
    a = rng.integers(4, size=batch)
    r = rng.random(batch).astype(np.float32)
    b = rng.random((batch, 1)).astype(np.float32)
    term = np.zeros(batch, bool)
    return lambda: learner.update(obs, a, r, b, nobs, term)


def best(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--batch", type=int, default=32)
    args = parser.parse_args(argv)
    if kernels.BACKEND != "compiled":
        parser.exit(1, "compiled core not available; build it with pip install -e .\n")
    compiled = kernels.backend("compiled")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<28}{'python (us)':>14}{'compiled (us)':>16}{'speedup':>10}")
    rows = [(name, lambda fn=fn: fn(_fallback), lambda fn=fn: fn(compiled))
            for name, fn in cases(args.batch, rng).items()]
    rows.append(("learner update (2 heads)", learner_update(args.batch, rng, _fallback),
                 learner_update(args.batch, rng, compiled)))
    for name, slow, fast in rows:
        number = max(1, int(0.2 / max(timeit.timeit(slow, number=1), 1e-6)))
        t_py, t_c = best(slow, args.repeat, number), best(fast, args.repeat, number)
        print(f"{name:<28}{t_py * 1e6:>14.1f}{t_c * 1e6:>16.1f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
