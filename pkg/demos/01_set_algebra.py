"""Sumsets, difference sets, and what makes a set MSTD.

For a finite set of integers A, the sumset A+A collects all pairwise sums
and the difference set A-A all pairwise differences. Addition commutes and
subtraction does not, so one expects more differences than sums; a set
beating that expectation (|A+A| > |A-A|) is called MSTD.
"""

from mstd_chains import (CONWAY_SET, IntegerSet, affine, classify, diffset,
                         is_pn, profile, sumset, symmetry_center)

a = IntegerSet([1, 2, 3])
print("A      =", a.to_list())
print("A + A  =", sumset(a).to_list())
print("A - A  =", diffset(a).to_list())
print("verdict:", classify(a).value, "(intervals are always balanced)")
print()

# The smallest MSTD set, found by Conway: one sum ahead of the differences.
p = profile(CONWAY_SET)
print("Conway =", CONWAY_SET.to_list())
print(f"|A+A| = {p.sum_count}, |A-A| = {p.diff_count} -> {p.classification.value}")
print(f"cardinality {p.cardinality}, diameter {p.diameter}, "
      f"density {float(p.density):.3f}")
print()

# Dilation and translation never change either count.
moved = affine(CONWAY_SET, 3, -100)
q = profile(moved)
print("3*A - 100 =", moved.to_list())
print(f"counts preserved: {q.sum_count}/{q.diff_count}")
print()

# Symmetric sets (c - A = A for some c) are always balanced. Conway's set
# is one element away from the symmetric set below.
sym = IntegerSet([0, 2, 3, 7, 11, 12, 14])
print("symmetric part:", sym.to_list(), "center =", symmetry_center(sym),
      "->", classify(sym).value)
print("Conway itself has center:", symmetry_center(CONWAY_SET))
print()

# Fringe completeness: hulls complete except within n of each extreme.
seed = IntegerSet([1, 3, 4, 8, 9, 12, 13, 15, 18, 19, 20])
print("seed", seed.to_list())
for n in (9, 10, 12):
    print(f"  complete except within {n} of the extremes?", is_pn(seed, n))
