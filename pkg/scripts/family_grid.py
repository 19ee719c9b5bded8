#!/usr/bin/env python3
"""Verify every catalogued basis claim over a parameter grid.

Runs the four-part check (membership, S-pair closure, initial ideal,
reduced basis) for path, biclique, and Cameron-Walker instances and
prints one row per instance.  Exits 1 if any check fails.
"""

import argparse
import itertools
import sys

from xcond.families import biclique_claimed, cw_claimed, path_claimed, verify_claim
from xcond.graphs import cameron_walker_graph


def check(name, claim):
    rep = verify_claim(claim, claim.presentation())
    flags = "".join(
        "mjir"[i] if v else "."
        for i, v in enumerate(
            (rep.membership_ok, rep.spair_ok, rep.initial_match, rep.reduced_match)
        )
    )
    size = len(claim.distinct_polynomials())
    print(f"{name:<22} {size:>5} elements  [{flags}]  {'ok' if rep.ok else 'FAIL'}")
    return rep.ok


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--path-max", type=int, default=8)
    ap.add_argument("--biclique-max", type=int, default=2)
    args = ap.parse_args()

    all_ok = True
    for n in range(3, args.path_max + 1):
        all_ok &= check(f"path-{n}", path_claimed(n))

    m = args.biclique_max
    for p, q, r in itertools.product(range(1, m + 1), repeat=3):
        all_ok &= check(f"biclique-{p}-{q}-{r}", biclique_claimed(p, q, r))

    for p, q in (((1,), (1,)), ((2,), (1,)), ((1, 1), (0,)), ((2, 1), (1, 0))):
        tag = "cw-" + ",".join(map(str, p)) + ";" + ",".join(map(str, q))
        all_ok &= check(tag, cw_claimed(cameron_walker_graph(p, q)))

    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
