#!/usr/bin/env python3
"""Tabulate componentwise-linearity certificates for cover-ideal powers.

For each requested family the k-th power of the vertex cover ideal is
certified through the standard-monomial pipeline; the row shows which
hypotheses held and which route produced the Betti table.  Exits 1 if
any power is left uncertified.
"""

import argparse
import sys

from xcond.graphs import biclique_graph, minimal_vertex_covers, path_graph
from xcond.rees import componentwise_certificate, rees_ideal


def presentations(path_max, biclique):
    for n in range(3, path_max + 1):
        g = path_graph(n)
        yield f"path-{n}", rees_ideal(
            g.context(), minimal_vertex_covers(g).monomials()
        )
    if biclique:
        p, q, r = biclique
        g = biclique_graph(p, q, r)
        names = tuple(f"w{j}" for j in range(1, len(minimal_vertex_covers(g).covers) + 1))
        yield f"biclique-{p}-{q}-{r}", rees_ideal(
            g.context(), minimal_vertex_covers(g).monomials(), fiber_names=names
        )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--path-max", type=int, default=6)
    ap.add_argument("--biclique", type=int, nargs=3, default=(2, 2, 2))
    ap.add_argument("--kmax", type=int, default=3)
    args = ap.parse_args()

    print(f"{'family':<16} {'k':>2}  {'gens':>4}  {'certified':<24} betti route")
    uncertified = 0
    for name, pres in presentations(args.path_max, tuple(args.biclique)):
        for k in range(1, args.kmax + 1):
            rep = componentwise_certificate(pres, k)
            if not rep.certified:
                uncertified += 1
            beta0 = sum(
                v for (i, _), v in (rep.betti.entries if rep.betti else ()) if i == 0
            )
            print(
                f"{name:<16} {k:>2}  {beta0:>4}  {str(rep.certified):<24} "
                f"{rep.betti_route}"
            )
    return 0 if uncertified == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
