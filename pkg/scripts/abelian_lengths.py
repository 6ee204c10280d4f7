"""Chain length of Z_pG against the closed form for every abelian p-group up to a bound.

    python3 scripts/abelian_lengths.py --p 2 --max-order 32
"""

import argparse
import time

from radchain.chain import run_chain
from radchain.grouprings import abelian_invariants, abelian_lrad, abelian_pgroups, group_ring


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--max-order", type=int, default=32)
    args = ap.parse_args()

    print(f"{'group':<16}{'|G|':>5}{'n':>3}{'a':>3}{'formula':>9}{'chain':>7}{'secs':>8}")
    bad = 0
    for G in abelian_pgroups(args.p, args.max_order):
        t = time.perf_counter()
        A, O, form = group_ring(G, args.p)
        length = run_chain(O.lattice, form, A).length
        n, a = abelian_invariants(G, args.p)
        expected = abelian_lrad(n, a, args.p)
        bad += expected != length
        print(f"{G.name:<16}{G.order:>5}{n:>3}{a:>3}{expected:>9}{length:>7}{time.perf_counter() - t:>8.2f}")
    print("all match" if not bad else f"{bad} mismatches")


if __name__ == "__main__":
    main()
