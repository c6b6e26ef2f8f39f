import json

import numpy as np
import pytest

from mstd_chains import (Classification, IntegerSet, InvalidParameterError,
                         ResourceLimitError, exhaustive_by_diameter,
                         fill2_chain, find_fill2_seeds, min_cardinality_scan,
                         oracle_profile, profile, sample_mstd_proportion,
                         wilson_interval)

from .conftest import CONWAY, FILL2_L, FILL2_R


# ---------------------------------------------------------------------------
# the independent oracle
# ---------------------------------------------------------------------------

def test_oracle_reference_values(conway):
    p = oracle_profile(conway)
    assert (p.sum_count, p.diff_count) == (26, 25)
    assert p.classification == Classification.MSTD
    q = oracle_profile([1, 2, 3])
    assert (q.sum_count, q.diff_count) == (5, 5)
    assert q.classification == Classification.BALANCED


def test_oracle_rejects_empty_and_oversized():
    with pytest.raises(InvalidParameterError):
        oracle_profile([])
    with pytest.raises(ResourceLimitError):
        oracle_profile(range(10_001))


def test_oracle_agrees_with_fast_path():
    rng = np.random.default_rng(99)
    for _ in range(1000):
        size = int(rng.integers(1, 64))
        a = IntegerSet(rng.integers(-500, 501, size=size).tolist())
        assert oracle_profile(a) == profile(a)


# ---------------------------------------------------------------------------
# exhaustive enumeration by diameter
# ---------------------------------------------------------------------------

def test_exhaustive_tiny_counts():
    report = exhaustive_by_diameter(3)
    assert report.total_examined == 8
    assert (report.mstd_count, report.mdts_count, report.balanced_count) == (0, 2, 6)
    assert report.witnesses == ()


def test_exhaustive_below_threshold_has_no_mstd():
    report = exhaustive_by_diameter(13)
    assert report.mstd_count == 0
    assert report.total_examined == 2 ** 13
    # frozen from this enumeration; any drift means a classifier change
    assert (report.mdts_count, report.balanced_count) == (7124, 1068)


def test_exhaustive_counts_match_oracle_recount():
    from itertools import combinations

    mstd = mdts = balanced = 0
    for d in range(11):
        interiors = ([()] if d <= 1 else
                     (c for j in range(d) for c in combinations(range(1, d), j)))
        for combo in interiors:
            p = oracle_profile({0, d, *combo})
            if p.classification == Classification.MSTD:
                mstd += 1
            elif p.classification == Classification.MDTS:
                mdts += 1
            else:
                balanced += 1
    report = exhaustive_by_diameter(10)
    assert (report.mstd_count, report.mdts_count, report.balanced_count) == \
        (mstd, mdts, balanced)


def test_exhaustive_finds_minimal_mstd_first():
    report = exhaustive_by_diameter(14)
    assert report.mstd_count > 0
    assert report.witnesses[0] == IntegerSet(CONWAY)
    # every witness really is MSTD, and counts partition the domain
    for w in report.witnesses:
        assert oracle_profile(w).classification == Classification.MSTD
    assert (report.mstd_count + report.mdts_count + report.balanced_count
            == report.total_examined)


def test_exhaustive_worker_invariance():
    serial = exhaustive_by_diameter(12)
    parallel = exhaustive_by_diameter(12, workers=2)
    assert json.dumps(serial.to_json(), sort_keys=True) == \
        json.dumps(parallel.to_json(), sort_keys=True)


def test_exhaustive_caps():
    with pytest.raises(ResourceLimitError):
        exhaustive_by_diameter(27)
    with pytest.raises(InvalidParameterError):
        exhaustive_by_diameter(-1)


# ---------------------------------------------------------------------------
# bounded-cardinality scan
# ---------------------------------------------------------------------------

def test_card_scan_three_element_sets_never_mstd():
    report = min_cardinality_scan(5, 3)
    assert report.mstd_count == 0
    # {0}, {0,d} for 5 diameters, and C(d-1,1) interior choices
    assert report.total_examined == 1 + 5 + sum(d - 1 for d in range(1, 6))


def test_card_scan_finds_conway_at_eight():
    report = min_cardinality_scan(14, 8)
    assert report.mstd_count > 0
    assert report.witnesses[0] == IntegerSet(CONWAY)


def test_card_scan_region_without_witnesses():
    report = min_cardinality_scan(16, 7)
    assert report.mstd_count == 0


def test_card_scan_budget():
    with pytest.raises(ResourceLimitError):
        min_cardinality_scan(30, 30)


def test_card_scan_worker_invariance():
    serial = min_cardinality_scan(12, 6)
    parallel = min_cardinality_scan(12, 6, workers=2)
    assert serial.to_json() == parallel.to_json()


# ---------------------------------------------------------------------------
# random sampling
# ---------------------------------------------------------------------------

def test_sampling_is_deterministic():
    a = sample_mstd_proportion(30, 5000, seed=42)
    b = sample_mstd_proportion(30, 5000, seed=42)
    c = sample_mstd_proportion(30, 5000, seed=42, workers=2)
    assert a.to_json() == b.to_json() == c.to_json()
    assert a.total_examined == 5000
    assert a.mstd_count + a.mdts_count + a.balanced_count == 5000


def test_sampling_small_window_has_no_mstd():
    report = sample_mstd_proportion(5, 1000, seed=1)
    assert report.mstd_count == 0
    assert report.mstd_fraction == 0


def test_sampling_seed_changes_stream():
    a = sample_mstd_proportion(30, 5000, seed=42)
    b = sample_mstd_proportion(30, 5000, seed=43)
    assert a.to_json() != b.to_json()


def test_sampling_validation():
    with pytest.raises(InvalidParameterError):
        sample_mstd_proportion(0, 10, seed=1)
    with pytest.raises(InvalidParameterError):
        sample_mstd_proportion(10, 0, seed=1)
    with pytest.raises(InvalidParameterError):
        sample_mstd_proportion(10, 10, seed=-1)


def test_wilson_interval():
    lo, hi = wilson_interval(0, 100)
    assert lo == 0.0 and 0 < hi < 0.05
    lo, hi = wilson_interval(50, 100)
    assert lo < 0.5 < hi
    with pytest.raises(InvalidParameterError):
        wilson_interval(1, 0)


# ---------------------------------------------------------------------------
# seed discovery
# ---------------------------------------------------------------------------

def test_seed_discovery_recovers_reference_seed():
    seeds = find_fill2_seeds(10)
    assert (IntegerSet(FILL2_L), IntegerSet(FILL2_R)) in seeds


def test_seed_discovery_small_windows_empty():
    assert find_fill2_seeds(3) == []
    assert find_fill2_seeds(1) == []


def test_seed_discovery_roundtrip():
    for L, R in find_fill2_seeds(10)[:4]:
        record = fill2_chain(L, R, 10, 4)
        assert len(record.steps) == 4


def test_seed_discovery_cap():
    with pytest.raises(ResourceLimitError):
        find_fill2_seeds(13)
