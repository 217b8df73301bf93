#!/usr/bin/env python3
"""Randomized stress experiment for the Smith normal form routine.

Draws random integer matrices, recomputes D = P*A*Q and the transform
inverses, and checks shape, positivity and the divisibility chain.
Reports throughput; exits nonzero on the first violation.

    python scripts/snf_stress.py --count 5000 --max-dim 10 --max-entry 99
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from bredon.intlinalg import IntegerMatrix, cokernel, kernel_basis, smith_normal_form


def check_one(rng: random.Random, max_dim: int, max_entry: int) -> str | None:
    m = rng.randint(1, max_dim)
    n = rng.randint(1, max_dim)
    a = IntegerMatrix.from_rows(
        [[rng.randint(-max_entry, max_entry) for _ in range(n)] for _ in range(m)], cols=n
    )
    snf = smith_normal_form(a)
    if snf.P @ a @ snf.Q != snf.D:
        return f"D != P A Q for {a.to_rows()}"
    if snf.P @ snf.P_inv != IntegerMatrix.identity(m) or snf.Q @ snf.Q_inv != IntegerMatrix.identity(n):
        return f"transform inverses broken for {a.to_rows()}"
    factors = snf.invariant_factors
    if any(d <= 0 for d in factors):
        return f"non-positive invariant factor for {a.to_rows()}"
    if any(e % d for d, e in zip(factors, factors[1:])):
        return f"divisibility chain broken for {a.to_rows()}"
    k = len(factors)
    if kernel_basis(a).cols != n - k or cokernel(a).free_rank != m - k:
        return f"rank bookkeeping broken for {a.to_rows()}"
    return None


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--max-dim", type=int, default=8)
    parser.add_argument("--max-entry", type=int, default=9)
    parser.add_argument("--seed", type=int, default=0x5EED)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    started = time.monotonic()
    for trial in range(args.count):
        problem = check_one(rng, args.max_dim, args.max_entry)
        if problem:
            print(f"trial {trial}: {problem}", file=sys.stderr)
            return 1
    elapsed = time.monotonic() - started
    rate = args.count / elapsed if elapsed else float("inf")
    print(f"{args.count} decompositions verified in {elapsed:.2f}s ({rate:.0f}/s)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
