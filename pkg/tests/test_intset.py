import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mstd_chains import (ArithmeticRangeError, Classification, IntegerSet,
                         InvalidParameterError, affine, classify, diffset,
                         is_pn, profile, sumset, symmetry_center)

from .conftest import naive_diffs, naive_sums

sets_strategy = st.builds(
    IntegerSet, st.sets(st.integers(-300, 300), min_size=1, max_size=40)
)


# ---------------------------------------------------------------------------
# sumset / diffset
# ---------------------------------------------------------------------------

def test_sumset_basic():
    assert sumset(IntegerSet([1, 2, 3])).to_list() == [2, 3, 4, 5, 6]
    assert sumset(IntegerSet([5])).to_list() == [10]
    assert sumset(IntegerSet()).is_empty


def test_sumset_conway(conway):
    assert len(sumset(conway)) == 26


def test_diffset_basic():
    assert diffset(IntegerSet([1, 2, 3])).to_list() == [-2, -1, 0, 1, 2]
    assert diffset(IntegerSet([5])).to_list() == [0]
    assert diffset(IntegerSet()).is_empty


def test_diffset_conway(conway):
    assert len(diffset(conway)) == 25


def test_sumset_overflow_rejected():
    big = IntegerSet([0, 2 ** 62 + 1])
    with pytest.raises(ArithmeticRangeError):
        sumset(big)
    with pytest.raises(ArithmeticRangeError):
        diffset(IntegerSet([-(2 ** 62), 2 ** 62]))
    with pytest.raises(ArithmeticRangeError):
        IntegerSet([2 ** 63])


def test_wide_sets_use_exact_fallback():
    # far beyond the dense bit-vector window
    wide = IntegerSet([0, 5, 2 ** 40, 2 ** 40 + 3])
    assert set(sumset(wide)) == naive_sums(wide)
    assert set(diffset(wide)) == naive_diffs(wide)


@given(sets_strategy)
def test_diffset_symmetric_odd(a):
    d = diffset(a)
    assert 0 in d
    assert len(d) % 2 == 1
    els = d.to_list()
    assert els == [-x for x in reversed(els)]


@given(st.sets(st.integers(-200, 200), min_size=1, max_size=30), st.data())
def test_monotonicity(superset, data):
    b = IntegerSet(superset)
    sub = data.draw(st.sets(st.sampled_from(sorted(superset)), min_size=1))
    a = IntegerSet(sub)
    assert sumset(a).issubset(sumset(b))
    assert diffset(a).issubset(diffset(b))


@settings(max_examples=200)
@given(sets_strategy)
def test_matches_naive_double_loop(a):
    assert set(sumset(a)) == naive_sums(a)
    assert set(diffset(a)) == naive_diffs(a)


def test_matches_naive_on_seeded_batch():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        size = int(rng.integers(1, 64))
        a = IntegerSet(rng.integers(-500, 501, size=size).tolist())
        assert set(sumset(a)) == naive_sums(a)
        assert set(diffset(a)) == naive_diffs(a)


# ---------------------------------------------------------------------------
# affine maps
# ---------------------------------------------------------------------------

def test_affine_basic():
    assert affine(IntegerSet([0, 1]), 2, 3).to_list() == [3, 5]
    with pytest.raises(InvalidParameterError):
        affine(IntegerSet([1]), 0, 5)


def test_affine_preserves_profile(conway):
    moved = affine(conway, 1, -7)
    assert len(sumset(moved)) == 26
    assert len(diffset(moved)) == 25


def test_affine_interval_to_odd_numbers():
    k = 9
    odds = affine(IntegerSet.interval(1, k), 2, -1)
    assert odds.to_list() == list(range(1, 2 * k, 2))
    p = profile(odds)
    assert p.classification == Classification.BALANCED
    assert p.sum_count == len(naive_sums(odds))
    assert p.diff_count == len(naive_diffs(odds))


@settings(max_examples=150)
@given(sets_strategy,
       st.integers(-40, 40).filter(lambda x: x != 0),
       st.integers(-1000, 1000))
def test_affine_invariance(a, x, y):
    b = affine(a, x, y)
    assert len(b) == len(a)
    assert len(sumset(b)) == len(sumset(a))
    assert len(diffset(b)) == len(diffset(a))


# ---------------------------------------------------------------------------
# classification, symmetry, fringe completeness
# ---------------------------------------------------------------------------

def test_classify(conway):
    assert classify(IntegerSet([1, 2, 3])) == Classification.BALANCED
    assert classify(conway) == Classification.MSTD
    mdts = IntegerSet.interval(0, 14).union(IntegerSet([17]))
    assert classify(mdts) == Classification.MDTS
    with pytest.raises(InvalidParameterError):
        classify(IntegerSet())


def test_symmetry_center(conway):
    assert symmetry_center(IntegerSet([1, 3, 5])) == 6
    assert symmetry_center(IntegerSet([0, 2, 3, 7, 11, 12, 14])) == 14
    assert symmetry_center(conway) is None


@given(st.sets(st.integers(-150, 150), min_size=1, max_size=25),
       st.integers(-100, 100))
def test_symmetric_sets_are_balanced(half, center):
    a = IntegerSet(half).union(affine(IntegerSet(half), -1, center))
    assert symmetry_center(a) == center
    assert classify(a) == Classification.BALANCED


def test_is_pn(conway, fill2_seed):
    L, R, n = fill2_seed
    assert is_pn(L.union(R), n)
    assert is_pn(IntegerSet.interval(1, 12), 0)
    # both hulls computed explicitly: the full ranges are not covered
    assert naive_sums(conway) != set(range(0, 29))
    assert naive_diffs(conway) != set(range(-14, 15))
    assert not is_pn(conway, 0)
    with pytest.raises(InvalidParameterError):
        is_pn(conway, -1)


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

def test_profile_conway(conway):
    p = profile(conway)
    assert (p.cardinality, p.diameter, p.sum_count, p.diff_count) == (8, 14, 26, 25)
    assert p.classification == Classification.MSTD
    assert p.density == pytest.approx(8 / 14)


def test_profile_singleton():
    p = profile(IntegerSet([0]))
    assert (p.cardinality, p.diameter, p.sum_count, p.diff_count) == (1, 0, 1, 1)
    assert p.classification == Classification.BALANCED
    assert p.density is None


def test_profile_fill2_seed(fill2_seed):
    L, R, _ = fill2_seed
    p = profile(L.union(R))
    assert (p.cardinality, p.sum_count, p.diff_count) == (11, 38, 37)
    assert p.classification == Classification.MSTD
    assert p.diameter == 19  # the printed seed spans 1..20


def test_profile_rejects_empty():
    with pytest.raises(InvalidParameterError):
        profile(IntegerSet())


@given(sets_strategy)
def test_profile_count_bounds(a):
    p = profile(a)
    c, d = p.cardinality, p.diameter
    assert p.sum_count <= min(c * (c + 1) // 2, 2 * d + 1)
    assert p.diff_count <= min(c * c - c + 1, 2 * d + 1)
    assert p.diff_count % 2 == 1


@pytest.mark.parametrize("k", [1, 2, 7, 50, 100])
def test_interval_balance(k):
    p = profile(IntegerSet.interval(1, k))
    assert p.classification == Classification.BALANCED
    assert p.sum_count == p.diff_count == 2 * k - 1


# ---------------------------------------------------------------------------
# representation details
# ---------------------------------------------------------------------------

def test_text_roundtrip(conway):
    assert IntegerSet.from_text("0,2,3,4,7,11,12,14") == conway
    assert conway.to_text() == "0,2,3,4,7,11,12,14"


def test_text_errors_name_position():
    with pytest.raises(InvalidParameterError, match="token 2"):
        IntegerSet.from_text("1,x,3")
    with pytest.raises(InvalidParameterError, match="token 3"):
        IntegerSet.from_text("1,5,5")


def test_lazy_bits_backed_sets(conway):
    s = sumset(conway)  # starts out bits-backed
    assert len(s) == 26
    assert s.min == 0 and s.max == 28
    assert 1 not in s and 2 in s
    assert set(s.to_list()) == naive_sums(conway)


def test_set_operations(conway):
    evens = IntegerSet([0, 2, 4, 12, 14])
    assert evens.issubset(conway)
    assert not conway.issubset(evens)
    assert conway.difference(evens).to_list() == [3, 7, 11]
    assert conway.intersection(evens) == evens
    assert conway.union(IntegerSet([1])).contains_interval(0, 4)
    assert conway.missing_in_interval(0, 14) == [1, 5, 6, 8, 9, 10, 13]


def test_dedup_and_ordering():
    a = IntegerSet([3, 1, 2, 3, 1])
    assert a.to_list() == [1, 2, 3]
    assert len(a) == 3


def test_dense_sparse_boundary_agreement():
    from mstd_chains.intset import DENSE_DIAMETER_LIMIT

    base = [0, 3, 7, 50, 51]
    dense = IntegerSet(base + [DENSE_DIAMETER_LIMIT])      # last set on the bit path
    sparse = IntegerSet(base + [DENSE_DIAMETER_LIMIT + 1])  # first on the fallback
    for a in (dense, sparse):
        assert set(sumset(a)) == naive_sums(a)
        assert set(diffset(a)) == naive_diffs(a)


@given(sets_strategy)
def test_hull_cardinality_lower_bounds(a):
    # both hulls have at least 2|A| - 1 members, with equality exactly for
    # arithmetic progressions
    floor = 2 * len(a) - 1
    s, d = len(sumset(a)), len(diffset(a))
    assert s >= floor and d >= floor
    els = a.to_list()
    steps = {b - c for b, c in zip(els[1:], els)}
    if len(els) > 1 and len(steps) == 1:
        assert s == floor and d == floor


def test_profile_of_lazy_result_sets(conway):
    # profiles of bits-backed sets (sumset output) take the lazy path
    hull = sumset(conway)
    p = profile(hull)
    assert p.cardinality == 26
    assert p.sum_count == len(naive_sums(hull))


@given(st.sets(st.integers(-200, 200), max_size=30),
       st.sets(st.integers(-200, 200), max_size=30))
def test_set_operations_match_python_sets(a_els, b_els):
    a, b = IntegerSet(a_els), IntegerSet(b_els)
    assert set(a.union(b)) == a_els | b_els
    assert set(a.difference(b)) == a_els - b_els
    assert set(a.intersection(b)) == a_els & b_els
    assert a.issubset(b) == (a_els <= b_els)
    assert a.ispropersubset(b) == (a_els < b_els)
