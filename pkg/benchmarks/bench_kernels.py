"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends run the same searches; the results are checked to agree
before the timings are printed.
"""

import argparse
import random
import time

from emberlin import _pykernels, oracle
from emberlin.generators import gen_ddc, gen_join_chain, random_digraph_mixed

try:
    from emberlin import _ckernels
except ImportError:
    _ckernels = None


def _census(D):
    return sorted(oracle.enumerate_directed_embeddings(D).hist.items())


def _census_all(D):
    return sorted(oracle.enumerate_directed_embeddings(D, signatures="all").hist.items())


def _bieulerian_batch(Ds):
    return [oracle.directed_bieulerian(D)[0] for D in Ds]


def _rand(seed, max_n=6):
    return random_digraph_mixed(random.Random(seed), max_n=max_n)


CASES = [
    ("census random n=2 m=8", _census, _rand(21)),
    ("census random n=6 m=14", _census, _rand(24)),
    ("all signs ddc_6", _census_all, gen_ddc(6)),
    ("all signs random n=5", _census_all, _rand(6)),
    ("all signs join-chain 3", _census_all, gen_join_chain(3)),
    ("bi-eulerian search", _bieulerian_batch, [_rand(s, 8) for s in (9, 27, 35, 61)]),
]


def _time(fn, arg, repeat):
    best, out = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(arg)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the fallback is available")
    saved = oracle.kernels
    print(f"{'case':<24}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    try:
        for name, fn, arg in CASES:
            oracle.kernels = _pykernels
            tp, rp = _time(fn, arg, args.repeat)
            if _ckernels is None:
                print(f"{name:<24}{tp:>12.4f}{'-':>12}{'-':>10}")
                continue
            oracle.kernels = _ckernels
            tc, rc = _time(fn, arg, args.repeat)
            if rp != rc:
                raise SystemExit(f"backends disagree on {name}")
            print(f"{name:<24}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
    finally:
        oracle.kernels = saved


if __name__ == "__main__":
    main()
