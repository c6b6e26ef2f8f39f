"""Brute-force exploration of the MSTD landscape.

This module is the independent referee for the rest of the package: the
double-loop oracle recomputes profiles with none of the bit-vector
machinery, the exhaustive scans establish desk-scale facts (no MSTD set
below diameter 14 or with fewer than 8 elements in the scanned region),
and the seeded sampler estimates how common MSTD subsets are.

Enumerations walk interior subsets as plain binary counters, so the work
splits into contiguous numeric ranges. Chunk boundaries and per-chunk RNG
seeds depend only on the request, never on the worker count, and results
merge associatively: reports are identical no matter how the work was
partitioned.
"""

from __future__ import annotations

import math
from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidParameterError, ResourceLimitError
from .intset import IntegerSet, SetProfile

_ENUM_CHUNK = 1 << 14
_SAMPLE_CHUNK = 1 << 12
_WITNESS_CAP = 8
_ORACLE_CARD_CAP = 10_000


def oracle_profile(a: IntegerSet | Iterable[int]) -> SetProfile:
    """Profile by explicit double loops over Python integers.

    Deliberately naive and independent: no bit-vectors, no numpy, no code
    shared with the fast path. Capped at 10**4 elements.
    """
    els = [int(x) for x in a]
    if not els:
        raise InvalidParameterError("oracle_profile: set must be nonempty")
    if len(els) > _ORACLE_CARD_CAP:
        raise ResourceLimitError(f"oracle_profile: more than {_ORACLE_CARD_CAP} elements")
    sums = {x + y for x in els for y in els}
    diffs = {x - y for x in els for y in els}
    return SetProfile.from_counts(
        cardinality=len(set(els)),
        diameter=max(els) - min(els),
        sum_count=len(sums),
        diff_count=len(diffs),
    )


def _mask_counts(bits: int, span: int) -> tuple[int, int]:
    """(|A+A|, |A-A|) for the set encoded by ``bits`` (bit i = element i).

    ``span`` is the highest set bit. Works by OR-ing shifted copies, one
    per element; tiny sets only, the run-smearing engine handles the rest.
    """
    s = 0
    d = 0
    rest = bits
    while rest:
        low = rest & -rest
        a = low.bit_length() - 1
        s |= bits << a
        d |= bits << (span - a)
        rest ^= low
    return s.bit_count(), d.bit_count()


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one search: what was examined and what was found."""

    domain: str
    total_examined: int
    mstd_count: int
    mdts_count: int
    balanced_count: int
    witnesses: tuple[IntegerSet, ...] = ()
    seed: Optional[int] = None
    mstd_fraction: Optional[Fraction] = None
    ci95: Optional[tuple[float, float]] = None

    def to_json(self) -> dict:
        out = {
            "domain": self.domain,
            "total_examined": self.total_examined,
            "mstd_count": self.mstd_count,
            "mdts_count": self.mdts_count,
            "balanced_count": self.balanced_count,
            "witnesses": [w.to_text() for w in self.witnesses],
            "seed": self.seed,
        }
        if self.mstd_fraction is not None:
            out["mstd_fraction"] = float(self.mstd_fraction)
        if self.ci95 is not None:
            out["ci95"] = [self.ci95[0], self.ci95[1]]
        return out


def wilson_interval(successes: int, trials: int, z: float = 1.96) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise InvalidParameterError("wilson_interval: trials must be positive")
    phat = successes / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = (z / denom) * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
    return (max(0.0, center - half), min(1.0, center + half))


def _run_tasks(worker, tasks: Sequence, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with Pool(processes=workers) as pool:
        return pool.map(worker, tasks, chunksize=1)


def _merge_witnesses(parts: Iterable[Sequence[tuple]], cap: int) -> list[tuple]:
    """Keep the cap smallest keyed witnesses; associative and order-free."""
    merged: list[tuple] = []
    for part in parts:
        merged.extend(part)
    merged.sort()
    return merged[:cap]


def _keep_best(witnesses: list[tuple], item: tuple, cap: int) -> None:
    """Maintain the cap smallest items in sorted order."""
    if len(witnesses) < cap:
        insort(witnesses, item)
    elif item < witnesses[-1]:
        witnesses.pop()
        insort(witnesses, item)


# ---------------------------------------------------------------------------
# exhaustive enumeration by diameter
# ---------------------------------------------------------------------------

def _enum_chunk(task: tuple[int, int, int]) -> tuple[int, int, int, int, list[tuple]]:
    """Classify interior masks [lo, hi) at diameter d."""
    d, lo, hi = task
    mstd = mdts = bal = 0
    witnesses: list[tuple] = []
    endpoints = 1 | (1 << d) if d >= 1 else 1
    for mask in range(lo, hi):
        bits = (mask << 1) | endpoints
        s, f = _mask_counts(bits, d)
        if s > f:
            mstd += 1
            elements = tuple(i for i in range(d + 1) if (bits >> i) & 1)
            _keep_best(witnesses, (d, len(elements), elements), _WITNESS_CAP)
        elif s < f:
            mdts += 1
        else:
            bal += 1
    return hi - lo, mstd, mdts, bal, witnesses


def exhaustive_by_diameter(d_max: int, workers: int = 1,
                           witness_cap: int = _WITNESS_CAP) -> SearchReport:
    """Classify every subset of [0, d] containing 0 and d, for all d <= d_max.

    Witnesses are the MSTD sets smallest by (diameter, cardinality,
    elements); none exist below diameter 14.
    """
    if d_max < 0:
        raise InvalidParameterError("exhaustive_by_diameter: d_max must be >= 0")
    if d_max > 26:
        raise ResourceLimitError("exhaustive_by_diameter: d_max capped at 26")
    tasks: list[tuple[int, int, int]] = []
    for d in range(d_max + 1):
        interior = 1 << max(d - 1, 0)
        for lo in range(0, interior, _ENUM_CHUNK):
            tasks.append((d, lo, min(lo + _ENUM_CHUNK, interior)))
    parts = _run_tasks(_enum_chunk, tasks, workers)
    total = sum(p[0] for p in parts)
    mstd = sum(p[1] for p in parts)
    mdts = sum(p[2] for p in parts)
    bal = sum(p[3] for p in parts)
    witnesses = _merge_witnesses((p[4] for p in parts), witness_cap)
    return SearchReport(
        domain=f"subsets of [0,d] containing 0 and d, 0 <= d <= {d_max}",
        total_examined=total,
        mstd_count=mstd,
        mdts_count=mdts,
        balanced_count=bal,
        witnesses=tuple(IntegerSet(w[2]) for w in witnesses),
    )


# ---------------------------------------------------------------------------
# bounded-cardinality scan
# ---------------------------------------------------------------------------

def _card_chunk(task: tuple[int, int]) -> tuple[int, int, int, int, list[tuple]]:
    """Classify all sets {0, d} + (j interior elements)."""
    from itertools import combinations

    d, j = task
    mstd = mdts = bal = 0
    witnesses: list[tuple] = []
    endpoints = 1 | (1 << d) if d >= 1 else 1
    examined = 0
    for combo in combinations(range(1, d), j):
        bits = endpoints
        for c in combo:
            bits |= 1 << c
        examined += 1
        s, f = _mask_counts(bits, d)
        if s > f:
            mstd += 1
            elements = (0, *combo, d) if d >= 1 else (0,)
            _keep_best(witnesses, (len(elements), d, elements), _WITNESS_CAP)
        elif s < f:
            mdts += 1
        else:
            bal += 1
    return examined, mstd, mdts, bal, witnesses


def min_cardinality_scan(d_max: int, card_max: int, workers: int = 1,
                         witness_cap: int = _WITNESS_CAP) -> SearchReport:
    """Classify subsets of [0, d] with 0, d and at most card_max elements.

    Establishes whether any MSTD set with fewer than 8 elements exists in
    the scanned region (none do).
    """
    if d_max < 0 or card_max < 1:
        raise InvalidParameterError("min_cardinality_scan: d_max >= 0 and card_max >= 1")
    budget = sum(
        math.comb(max(d - 1, 0), j)
        for d in range(d_max + 1)
        for j in range(0, max(card_max - 2, 0) + 1)
        if j <= max(d - 1, 0) and (2 + j if d >= 1 else 1) <= card_max
    )
    if budget > 100_000_000:
        raise ResourceLimitError(f"min_cardinality_scan: {budget} sets exceeds budget")
    tasks = []
    for d in range(d_max + 1):
        if d == 0:
            if card_max >= 1:
                tasks.append((0, 0))
            continue
        if card_max < 2:
            continue
        for j in range(0, min(card_max - 2, d - 1) + 1):
            tasks.append((d, j))
    parts = _run_tasks(_card_chunk, tasks, workers)
    total = sum(p[0] for p in parts)
    witnesses = _merge_witnesses((p[4] for p in parts), witness_cap)
    return SearchReport(
        domain=(f"subsets of [0,d] containing 0 and d, 0 <= d <= {d_max}, "
                f"cardinality <= {card_max}"),
        total_examined=total,
        mstd_count=sum(p[1] for p in parts),
        mdts_count=sum(p[2] for p in parts),
        balanced_count=sum(p[3] for p in parts),
        witnesses=tuple(IntegerSet(w[2]) for w in witnesses),
    )


# ---------------------------------------------------------------------------
# seeded random sampling
# ---------------------------------------------------------------------------

def _sample_chunk(task: tuple[int, int, int, int]) -> tuple[int, int, int, int, list[tuple]]:
    """Classify one fixed-size block of random subsets of [1, n].

    The RNG is seeded from (seed, chunk index) alone, so the stream for a
    chunk never depends on which worker runs it.
    """
    seed, chunk_index, count, n = task
    rng = np.random.default_rng([seed, chunk_index])
    rows = rng.integers(0, 2, size=(count, n), dtype=np.uint8)
    packed = np.packbits(rows, axis=1, bitorder="little")
    mstd = mdts = bal = 0
    witnesses: list[tuple] = []
    for row_index in range(count):
        bits = int.from_bytes(packed[row_index].tobytes(), "little")
        if bits == 0:
            bal += 1  # empty draw: zero sums, zero differences
            continue
        s, f = _mask_counts(bits, bits.bit_length() - 1)
        if s > f:
            mstd += 1
            if len(witnesses) < _WITNESS_CAP:
                elements = tuple(i + 1 for i in range(n) if (bits >> i) & 1)
                witnesses.append((chunk_index, row_index, elements))
        elif s < f:
            mdts += 1
        else:
            bal += 1
    return count, mstd, mdts, bal, witnesses


def sample_mstd_proportion(n: int, samples: int, seed: int,
                           workers: int = 1,
                           witness_cap: int = _WITNESS_CAP) -> SearchReport:
    """Estimate the MSTD fraction among uniform random subsets of [1, n].

    Each element is included independently with probability 1/2. Sampling
    is chunked with per-chunk derived seeds, so the report is bit-identical
    for any worker count. The 95% interval is a Wilson score interval.
    """
    if n < 1 or n > 10_000:
        raise InvalidParameterError("sample_mstd_proportion: need 1 <= n <= 10**4")
    if samples < 1:
        raise InvalidParameterError("sample_mstd_proportion: samples must be >= 1")
    if seed < 0:
        raise InvalidParameterError("sample_mstd_proportion: seed must be >= 0")
    tasks = []
    chunk_index = 0
    remaining = samples
    while remaining > 0:
        count = min(_SAMPLE_CHUNK, remaining)
        tasks.append((seed, chunk_index, count, n))
        chunk_index += 1
        remaining -= count
    parts = _run_tasks(_sample_chunk, tasks, workers)
    total = sum(p[0] for p in parts)
    mstd = sum(p[1] for p in parts)
    witnesses = _merge_witnesses((p[4] for p in parts), witness_cap)
    return SearchReport(
        domain=f"uniform random subsets of [1,{n}], p=1/2 per element",
        total_examined=total,
        mstd_count=mstd,
        mdts_count=sum(p[2] for p in parts),
        balanced_count=sum(p[3] for p in parts),
        witnesses=tuple(IntegerSet(w[2]) for w in witnesses),
        seed=seed,
        mstd_fraction=Fraction(mstd, total),
        ci95=wilson_interval(mstd, total),
    )


# ---------------------------------------------------------------------------
# seed discovery for the linear fill-in method
# ---------------------------------------------------------------------------

def find_fill2_seeds(n: int) -> list[tuple[IntegerSet, IntegerSet]]:
    """All (L, R) with L | R a valid linear fill-in seed for this n.

    Scans every A inside [1, 2n] with 1 and 2n present and n absent, and
    keeps those that are MSTD with hulls complete except within n of each
    extreme. Exhaustive over 2**(2n-3) candidates; capped at n <= 12.
    """
    if n < 1:
        raise InvalidParameterError("find_fill2_seeds: n must be >= 1")
    if n > 12:
        raise ResourceLimitError("find_fill2_seeds: n capped at 12")
    if n == 1:
        return []  # 1 and 2n = 2 forced in, n = 1 forced out: contradiction
    # bit i stands for the value i + 1
    free = [v for v in range(2, 2 * n) if v != n]
    forced = 1 | (1 << (2 * n - 1))
    span = 2 * n - 1
    sum_lo, sum_hi = (n + 2) - 2, 3 * n - 2          # values n+2 .. 3n
    diff_lo, diff_hi = span - (n - 1), span + (n - 1)  # values -(n-1) .. n-1
    sum_mask = ((1 << (sum_hi - sum_lo + 1)) - 1) << sum_lo
    diff_mask = ((1 << (diff_hi - diff_lo + 1)) - 1) << diff_lo
    found: list[tuple[IntegerSet, IntegerSet]] = []
    for mask in range(1 << len(free)):
        bits = forced
        m = mask
        while m:
            low = m & -m
            bits |= 1 << (free[low.bit_length() - 1] - 1)
            m ^= low
        s = 0
        d = 0
        rest = bits
        while rest:
            low = rest & -rest
            a = low.bit_length() - 1
            s |= bits << a
            d |= bits << (span - a)
            rest ^= low
        if s.bit_count() <= d.bit_count():
            continue
        if (s & sum_mask) != sum_mask or (d & diff_mask) != diff_mask:
            continue
        elements = [i + 1 for i in range(2 * n) if (bits >> i) & 1]
        found.append((
            IntegerSet(e for e in elements if e <= n),
            IntegerSet(e for e in elements if e > n),
        ))
    found.sort(key=lambda pair: (pair[0].to_list(), pair[1].to_list()))
    return found
