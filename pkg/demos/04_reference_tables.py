"""Reproduce the published example-sequence tables, flagging known bad cells.

The comparison is cell-for-cell. Three published cells of the linear
fill-in table are inconsistent with the printed seed set itself (its
diameter is 19, not 16); those are pinned as known discrepancies and
flagged rather than silently corrected in either direction.
"""

from mstd_chains import (CONWAY_SET, IntegerSet, compare_to_golden,
                         emit_growth_summary, fill1_chain, fill2_chain,
                         nonfill_chain)

chains = {
    "fill1": fill1_chain(CONWAY_SET, 7),
    "fill2": fill2_chain(IntegerSet([1, 3, 4, 8, 9]),
                         IntegerSet([12, 13, 15, 18, 19, 20]), 10, 7),
    "nonfill": nonfill_chain(7),
}

for method, record in chains.items():
    print(compare_to_golden(record).render())
    print()

print("growth between consecutive MSTD steps:")
print(emit_growth_summary(list(chains.values())))
