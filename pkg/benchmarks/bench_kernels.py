"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends are imported directly, so the comparison does not depend on
HYPEROCT_PURE_PYTHON.  Every workload is also checked for equal results.
"""
import argparse
import random
import timeit
from fractions import Fraction
from math import gcd

from hyperoct import _kernels_py
from hyperoct.chars import gram_matrix
from hyperoct.group import enumerate_group
from hyperoct.pairpart import _enumerate, perfect_matchings

try:
    from hyperoct import _ckernels
except ImportError:
    _ckernels = None


def _int_gram(n, qp, qm):
    G = gram_matrix(n, qp, qm)
    den = 1
    for row in G:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    return [[int(x * den) for x in row] for row in G]


def workloads():
    rng = random.Random(0)
    elems = [list(s.img) for s in enumerate_group(5)]
    pairs = [(rng.choice(elems), rng.choice(elems)) for _ in range(2000)]
    partners = [list(p) for p in _enumerate(8, True)][:4000]
    matchings = []
    for m in perfect_matchings(10):
        partner = [0] * 10
        for a, b in m:
            partner[a - 1], partner[b - 1] = b - 1, a - 1
        matchings.append(partner)
    gram = _int_gram(3, Fraction(1, 3), Fraction(1, 3))

    return {
        "compose (2000 pairs, B(5))": lambda k: [k.compose(a, b) for a, b in pairs],
        "cycle_lengths (3840 elements, B(5))": lambda k: [k.cycle_lengths(s) for s in elems],
        "sym_cycle_stats (4000 partitions, 2n=16)": lambda k: [k.sym_cycle_stats(p) for p in partners],
        "hat_partner (4000 partitions, 2n=16)": lambda k: [k.hat_partner(p) for p in partners],
        "matching_cycles (945 matchings, 2n=10)": lambda k: [k.matching_cycles(m) for m in matchings],
        "drake_counts (945 matchings, 2n=10)": lambda k: [k.drake_counts(m) for m in matchings],
        "int_psd (48x48 Gram of B(3))": lambda k: k.int_psd([row[:] for row in gram]),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'workload':44s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, fn in workloads().items():
        py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat)) * 1e3
        if _ckernels is None:
            print(f"{name:44s} {py:10.2f} {'-':>10s} {'-':>8s}")
            continue
        if fn(_kernels_py) != fn(_ckernels):
            raise SystemExit(f"backends disagree on {name}")
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:44s} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
