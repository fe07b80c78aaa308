"""Time the compiled and numpy kernels on census-sized inputs.

    python benchmarks/bench_kernels.py [--n 200000] [--repeat 3]

Both backends are run on identical inputs; the script checks that their
outputs agree before reporting times.
"""

import argparse
import time

import numpy as np

from curve_census import hyperelliptic as hyp
from curve_census import kernels
from curve_census import trigonal as tri
from curve_census.field import build_field


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200_000, help="models per kernel")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    hidx = np.sort(rng.choice(hyp.TOTAL, size=min(args.n, hyp.TOTAL), replace=False))
    f, _ = hyp.coefficient_block(0, hyp.TOTAL)
    f = f[hidx]
    tidx = rng.choice(tri.total_size(), size=args.n, replace=False)
    quint = np.concatenate([tri.index_block(int(a), int(a) + 1)[0] for a in np.sort(tidx)[: args.n // 50]])
    quint_big, _ = tri.index_block(0, args.n)

    cases = [
        ("hyper_charsums GF(9)", lambda b: b.hyper_charsums(f, build_field(2))),
        ("hyper_charsums GF(3)", lambda b: b.hyper_charsums(f, build_field(1))),
        ("squarefree_mask", lambda b: b.squarefree_mask(f)),
        ("quintic_fiber_sums GF(9)", lambda b: b.quintic_fiber_sums(quint_big, build_field(2))),
        ("quintic_fiber_sums GF(3)", lambda b: b.quintic_fiber_sums(quint_big, build_field(1))),
        ("quintic_singular_mask GF(3^6)", lambda b: b.quintic_singular_mask(quint, build_field(6))),
    ]
    names = list(kernels.BACKENDS)
    print(f"{'kernel':32s} {'rows':>8s} " + " ".join(f"{n:>10s}" for n in names) + "   numpy/compiled")
    for label, fn in cases:
        times, outs = [], []
        for name in names:
            t, out = _time(lambda: fn(kernels.BACKENDS[name]), args.repeat)
            times.append(t)
            outs.append(np.asarray(out))
        if any(not np.array_equal(outs[0], o) for o in outs[1:]):
            raise SystemExit(f"backends disagree on {label}")
        rows = len(outs[0])
        speed = f"{times[0] / times[-1]:8.2f}x" if len(times) > 1 else ""
        print(f"{label:32s} {rows:8d} " + " ".join(f"{t:9.3f}s" for t in times) + f"   {speed}")


if __name__ == "__main__":
    main()
