#!/usr/bin/env python3
"""Scan monomial targets on P^2 and tabulate certified border-rank bounds.

For x0^(a0) x1^(a1) x2^(a2) with a0 <= a1 <= a2 the certified lower bound
should come out as (a0+1)(a1+1), matching the known border rank of these
monomials; the scan also shows the first r where the necessary condition
passes.
"""

import argparse
import json

from multiapolar import DualElement, DualSubspace, RATIONALS, Space, lower_bound_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-total", type=int, default=5,
                    help="largest total degree of the monomials to scan")
    ap.add_argument("--r-max", type=int, default=6)
    ap.add_argument("--emit-json", default=None)
    args = ap.parse_args()

    space = Space((2,))
    results = []
    for L in range(2, args.max_total + 1):
        for a in space.monomials((L,)):
            if not (a[0] <= a[1] <= a[2]) or a[0] == 0:
                continue
            E = DualSubspace.span([DualElement.monomial(space, RATIONALS, a)])
            report = lower_bound_scan(E, args.r_max)
            expected = (a[0] + 1) * (a[1] + 1)
            verdicts = "".join(row["verdict"][0] for row in report["rows"])
            results.append({"target": list(a), "verdicts": verdicts,
                            "lower_bound": report["lower_bound"],
                            "expected_rank": expected})
            mark = "ok" if report["lower_bound"] == min(expected, args.r_max + 1) else "??"
            print(f"x0^{a[0]} x1^{a[1]} x2^{a[2]}  verdicts={verdicts}  "
                  f"bound>={report['lower_bound']}  known rank {expected}  [{mark}]")

    if args.emit_json:
        with open(args.emit_json, "w") as fh:
            json.dump(results, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
