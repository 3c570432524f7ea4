#!/usr/bin/env python3
"""Two double points on P^6 impose only 13 conditions on quadrics.

This is the classical defective case behind the non-generic Hilbert function
(1, 7, 27, 28, ...) of certain degree-28 schemes: a degree-14 fat-point
subscheme with h(2) = 13 forces, via the nested-subscheme inequality,
h(2) <= 13 + 14 = 27 < 28 for any degree-28 scheme containing it.
"""

import argparse

from multiapolar import Field, RATIONALS, Space, CounterRng
from multiapolar.cli import canonical_json
from multiapolar.points import (
    hilbert_function_points,
    nested_bound_report,
    random_configuration,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20260810)
    ap.add_argument("--emit-json", default=None)
    args = ap.parse_args()

    space = Space((6,))
    out = {}
    for label, field in [("Q", RATIONALS), ("Fp", Field((1 << 31) - 1))]:
        rng = CounterRng(args.seed, 2)
        Z = random_configuration(space, field, 2, rng, multiplicity=2)
        h2 = hilbert_function_points(Z, (2,))
        rep = nested_bound_report(Z, 28, (2,))
        out[label] = rep
        print(f"[{label}] deg Z = {Z.degree()}, h_Z(2) = {h2}; any degree-28 "
              f"scheme containing Z has h(2) <= {rep['bound']} < {rep['generic']}")

    if args.emit_json:
        with open(args.emit_json, "w") as fh:
            fh.write(canonical_json(out))


if __name__ == "__main__":
    main()
