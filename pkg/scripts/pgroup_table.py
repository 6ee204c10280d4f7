"""Per-step index valuations and radical self-duality for a list of groups.

    python3 scripts/pgroup_table.py C4 D8 Q8 --p 2
    python3 scripts/pgroup_table.py C9 C3xC3 --p 3 --json out.json
"""

import argparse
import json

from radchain.chain import run_chain
from radchain.grouprings import frattini_index, group_ring, parse_group


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("groups", nargs="+")
    ap.add_argument("--p", type=int, required=True)
    ap.add_argument("--json", help="also write the rows to this file")
    args = ap.parse_args()

    rows = []
    for name in args.groups:
        G = parse_group(name)
        A, O, form = group_ring(G, args.p)
        report = run_chain(O.lattice, form, A)
        row = {
            "group": name,
            "order": G.order,
            "frattini_index": frattini_index(G, args.p),
            "length": report.length,
            "index_vals": [s.index_from_start for s in report.steps],
            "radical_selfdual": [s.radical_selfdual for s in report.steps],
        }
        rows.append(row)
        sd = "".join("y" if x else "n" for x in row["radical_selfdual"])
        print(f"{name:<12} |G|={G.order:<3} |G/G'G^p|={row['frattini_index']:<3} "
              f"l_rad={report.length:<3} index {row['index_vals']}  J self-dual {sd}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
