"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Prints one row per kernel with the best time for each backend and the speedup.
"""
import argparse
import random
import timeit

from relmatroid import kernels


def workloads(rng):
    n = 10
    rows = tuple(rng.randrange(1 << n) for _ in range(n))
    up = kernels.upper_table(rows, n)
    wide = tuple(rng.getrandbits(64) for _ in range(64))
    # an equivalence forces the full transitivity scan
    classes = tuple(sum(1 << y for y in range(64) if y % 8 == x % 8) for x in range(64))
    fam = kernels.matroid_families(4)[-1]
    rank5 = kernels.family_rank_table((1 << 32) - 1, 5)
    cl5 = kernels.closure_table(rank5, 5)
    return [
        ("is_transitive (n=64)", lambda k: k.is_transitive(classes)),
        ("transpose (n=64)", lambda k: k.transpose(wide, 64)),
        ("upper_table (n=10)", lambda k: k.upper_table(rows, n)),
        ("lower_table (n=10)", lambda k: k.lower_table(rows, n)),
        ("binary_law_failures union (n=6)", lambda k: k.binary_law_failures(up[:64], 6, kernels.UNION, 5)),
        ("binary_law_failures monotone (n=8)", lambda k: k.binary_law_failures(up[:256], 8, kernels.MONOTONE, 5)),
        ("matroid_families (n=3)", lambda k: k.matroid_families(3)),
        ("family_rank_table (n=4)", lambda k: k.family_rank_table(fam, 4)),
        ("closure_axiom_failures (n=5)", lambda k: k.closure_axiom_failures(cl5, 5, 5)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--full", action="store_true", help="include matroid_families(4), slow in pure Python")
    args = ap.parse_args()
    backends = kernels.backends()
    if "cython" not in backends:
        print("compiled extension not built; only the pure-Python backend is available")
    rng = random.Random(0)
    cases = workloads(rng)
    if args.full:
        cases.append(("matroid_families (n=4)", lambda k: k.matroid_families(4)))
    names = sorted(backends)
    print(f"{'kernel':38}" + "".join(f"{b:>12}" for b in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases:
        best = {}
        for b in names:
            mod = backends[b]
            number = 1
            while timeit.timeit(lambda: fn(mod), number=number) < 0.05 and number < 1 << 20:
                number *= 4
            best[b] = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat)) / number
        row = f"{label:38}" + "".join(f"{best[b] * 1e6:10.1f}us" for b in names)
        if len(names) > 1:
            row += f"{best['python'] / best['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
