"""Brute force over the MSTD landscape.

Everything here is desk-scale and reproducible: enumerations walk interior
subsets as binary counters, sampling derives one RNG per fixed-size chunk,
and reports come out identical for any worker count.
"""

import json

from mstd_chains import (exhaustive_by_diameter, fill2_chain, find_fill2_seeds,
                         min_cardinality_scan, oracle_profile,
                         sample_mstd_proportion)

# No MSTD set exists below diameter 14; at 14 the smallest witness appears.
below = exhaustive_by_diameter(13)
print(f"diameters 0..13: {below.total_examined} sets, "
      f"{below.mstd_count} MSTD")
at = exhaustive_by_diameter(14, workers=2)
print(f"diameters 0..14: {at.total_examined} sets, {at.mstd_count} MSTD")
print("smallest witnesses:", [w.to_text() for w in at.witnesses[:2]])
print()

# Independently, no set with fewer than 8 elements is MSTD in this region.
small = min_cardinality_scan(d_max=20, card_max=7, workers=2)
print(f"cardinality <= 7, diameter <= 20: {small.total_examined} sets, "
      f"{small.mstd_count} MSTD")
print()

# A positive fraction of random subsets of [1, n] is MSTD once n is large
# enough to fit one; the report carries a 95% Wilson interval.
report = sample_mstd_proportion(n=30, samples=100_000, seed=42, workers=2)
print(json.dumps(report.to_json(), indent=2, sort_keys=True))
print()

# Seeds for the linear fill-in method, found exhaustively, all usable.
seeds = find_fill2_seeds(10)
print(f"{len(seeds)} usable fringe splits at n=10; the first three:")
for L, R in seeds[:3]:
    chain = fill2_chain(L, R, 10, 5)
    last = chain.steps[-1].profile
    print(f"  L={L.to_text()}  R={R.to_text()}  "
          f"-> 5 steps, last {last.classification.value}")
print()

# The double-loop oracle referees the fast path everywhere above.
print("oracle on Conway:", oracle_profile([0, 2, 3, 4, 7, 11, 12, 14]))
