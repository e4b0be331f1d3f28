"""Compare the compiled and pure-Python kernels on the formula corpus.

    python3 benchmarks/bench_kernels.py [--max-atoms 4] [--max-vars 4] [--repeat 3]
"""

import argparse
import time

from nfstrat import _purekernels as pure
from nfstrat import kernels
from nfstrat.corpus import enumerate_conjunctions
from nfstrat.formula import encode_atoms


def encoded(max_atoms, max_vars):
    out = []
    for f in enumerate_conjunctions(max_atoms, max_vars):
        kinds, lefts, rights, names = encode_atoms(f)
        out.append((list(kinds), list(lefts), list(rights), len(names)))
    return out


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def index_pass(mod, corpus):
    def run():
        for k, l, r, n in corpus:
            idx = mod.canonical_indices(k, l, r, n)
            mod.rng_total(l, r, idx, n)
            idx = mod.acyclic_indices(k, l, r, n)
            mod.rng_total(l, r, idx, n)

    return run


def brute_pass(mod, corpus):
    def run():
        for k, l, r, n in corpus:
            mod.min_rng_bruteforce(k, l, r, n, 2 * len(k))

    return run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-atoms", type=int, default=4)
    ap.add_argument("--max-vars", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    corpus = encoded(args.max_atoms, args.max_vars)
    small = [c for c in corpus if len(c[0]) <= 3]
    backends = [("python", pure)]
    if kernels.compiled is not None:
        backends.append(("cython", kernels.compiled))
    else:
        print("compiled kernels not built; timing the pure backend only")

    print(f"indexing: {len(corpus)} formulas; brute force: {len(small)} formulas (<= 3 atoms)")
    results = {}
    for name, mod in backends:
        results[name] = (best_of(args.repeat, index_pass(mod, corpus)), best_of(args.repeat, brute_pass(mod, small)))
        print(f"{name:>7}: indexing {results[name][0]:.3f} s, brute force {results[name][1]:.3f} s")
    if len(results) == 2:
        (pi, pb), (ci, cb) = results["python"], results["cython"]
        print(f"speedup: indexing x{pi / ci:.1f}, brute force x{pb / cb:.1f}")


if __name__ == "__main__":
    main()
