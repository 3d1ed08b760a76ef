"""Write the four empirical-probe CSV tables for n <= N into a directory."""

from __future__ import annotations

import argparse
import os

from planarlab.census import TABLES, trend_tables


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--out", default="tables")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for which in TABLES:
        path = os.path.join(args.out, f"{which}.csv")
        with open(path, "w") as fh:
            fh.write(trend_tables(args.n_max, which))
        print(path)


if __name__ == "__main__":
    main()
