"""Tabulate add(n, m) against the lower bounds and the spine construction."""

from __future__ import annotations

import argparse
import csv
import sys
from math import ceil

from planarlab.addable import (addable_set, build_spine_graph, lower_bound_add,
                               max_planar_edges, min_addable, spine_params_for)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=7, help="exhaustive add(n, m) up to this n")
    ap.add_argument("--spine-max", type=int, default=12, help="spine values up to this n")
    args = ap.parse_args()
    w = csv.writer(sys.stdout)
    w.writerow(["n", "m", "add_exact", "lower_bound", "formula", "spine"])
    for n in range(1, max(args.n_max, args.spine_max) + 1):
        for m in range(max_planar_edges(n) + 1):
            exact = min_addable(n, m).value if n <= args.n_max else ""
            formula = ceil(1.5 * (3 * n - 6 - m)) if n >= 3 and m >= 2 * n - 3 else ""
            spine = ""
            if formula != "" and n >= 6:
                spine = len(addable_set(build_spine_graph(spine_params_for(n, m))))
            if exact == "" and spine == "":
                continue
            w.writerow([n, m, exact, lower_bound_add(n, m), formula, spine])


if __name__ == "__main__":
    main()
