#!/usr/bin/env python3
"""Survey the Hilbert functions of random point configurations.

Samples seeded configurations on a few products of projective spaces and
reports how often the generic value min(r, dim S_D) is attained, plus the
set of distinct Hilbert-function vectors seen (finitely many per family).
"""

import argparse
from collections import Counter

from multiapolar import Field, Space, Window, CounterRng
from multiapolar.points import hilbert_function_points, random_configuration


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--spaces", default="P2,P3,P1xP1,P1xP2")
    ap.add_argument("--r", type=int, default=5)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--total-degree", type=int, default=4)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    field = Field((1 << 31) - 1)
    for name in args.spaces.split(","):
        space = Space.parse(name)
        window = Window.total(space.k, args.total_degree)
        generic = tuple(space.generic_hf(args.r, D) for D in window)
        seen = Counter()
        base = CounterRng(args.seed, 0)
        for t in range(args.trials):
            Z = random_configuration(space, field, args.r, base.spawn(t))
            seen[tuple(hilbert_function_points(Z, D) for D in window)] += 1
        hit = seen[generic]
        dominated = all(all(v <= g for v, g in zip(vec, generic)) for vec in seen)
        print(f"{name}: generic HF attained {hit}/{args.trials} times, "
              f"{len(seen)} distinct vectors, generic dominates: {dominated}")
        for vec, count in seen.most_common(3):
            tag = "generic" if vec == generic else "special"
            print(f"    {count:4d}x {tag}: {vec}")


if __name__ == "__main__":
    main()
