"""Compare the 4-embeddability algorithm with the brute-force oracle.

Exhaustive over isomorphism classes with n <= --n-max (Delta <= 4), then
--samples random labeled n = 7 instances stratified by edge count.
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter

from planarlab.canon import graph_classes
from planarlab.census import ClassConstraints, class_masks
from planarlab.fourreg import brute_force_oracle, four_embeddable, is_four_embeddable
from planarlab.graphs import LabeledGraph, to_graph6
from planarlab.planarity import is_planar
from planarlab.sampling import DEFAULT_SEED


def check(h: LabeledGraph, tally: Counter) -> None:
    v = four_embeddable(h)
    if v != brute_force_oracle(h):
        print("MISMATCH", to_graph6(h))
        tally["mismatch"] += 1
    if v:
        r = is_four_embeddable(h, want_witness=True)
        assert r.simple is not None
    tally[v] += 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = ap.parse_args()
    t = time.time()
    for n in range(1, args.n_max + 1):
        tally: Counter = Counter()
        for h in graph_classes(n):
            if h.max_degree() <= 4 and is_planar(h):
                check(h, tally)
        print(f"n={n}: yes={tally[True]} no={tally[False]} mismatches={tally['mismatch']}")
    rng = random.Random(args.seed)
    strata = [s for s in (class_masks(ClassConstraints(7, m, D2=4)) for m in range(16)) if len(s)]
    tally = Counter()
    for i in range(args.samples):
        s = strata[i % len(strata)]
        check(LabeledGraph.from_mask(7, int(s[rng.randrange(len(s))])), tally)
    print(f"n=7 sample: yes={tally[True]} no={tally[False]} mismatches={tally['mismatch']}")
    print(f"elapsed {time.time() - t:.1f}s")


if __name__ == "__main__":
    main()
