"""Table rendering and reference-table comparison for chain records.

The three example sequences shipped by the chain methods have published
reference tables (transcribed in GOLDEN_TABLES). A handful of published
cells are inconsistent with the printed seed sets themselves; those cells
are pinned in KNOWN_DISCREPANCIES with both the published and the
recomputed value, and comparisons flag them instead of failing or silently
"correcting" either side.

All ratio and density cells are rounded half-up to 3 decimals, and the
ascii, csv, and json renderings of one chain carry identical numbers.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chains import ChainRecord, chain_to_json
from .errors import InvalidParameterError
from .intset import Classification
from .rounding import format3

COLUMNS = ("Set", "|A_i+A_i|", "|A_i-A_i|", "Cardinality", "Diameter",
           "|A_i|/|A_{i-1}|", "D(A_i)/D(A_{i-1})", "Density")

# Closed-form density limits of the MSTD steps, where the method has one.
ANALYTIC_DENSITY_LIMITS: dict[str, Fraction] = {
    "fill1": Fraction(2, 3),
    "fill2": Fraction(1, 1),
    "nonfill": Fraction(1, 2),
}


def table_cells(record: ChainRecord) -> list[tuple[str, ...]]:
    """One row of display cells per step, in COLUMNS order."""
    rows = []
    for step, (card_ratio, diam_ratio) in zip(record.steps, record.ratios()):
        p = step.profile
        rows.append((
            f"A_{step.index}",
            str(p.sum_count),
            str(p.diff_count),
            str(p.cardinality),
            str(p.diameter),
            format3(card_ratio),
            format3(diam_ratio),
            format3(p.density),
        ))
    return rows


def _density_footer(record: ChainRecord) -> list[str]:
    mstd = [s.profile for s in record.steps
            if s.profile.classification == Classification.MSTD]
    lines = []
    analytic = ANALYTIC_DENSITY_LIMITS.get(record.method or "")
    empirical = mstd[-1].density if mstd else None
    if analytic is not None:
        lines.append(f"Limiting MSTD density: {format3(analytic)}")
    elif empirical is not None:
        lines.append(f"Limiting MSTD density: {format3(empirical)} (empirical)")
    else:
        lines.append("Limiting MSTD density: N/A")
    if empirical is not None:
        lines.append(f"Last MSTD step density: {format3(empirical)}")
    return lines


def emit_table(record: ChainRecord, fmt: str = "ascii") -> str:
    """Render a chain as an ascii table, csv, or the JSON step array.

    The ascii and csv forms end with the limiting-density footer; csv
    carries it as '#'-prefixed comment lines.
    """
    if not record.steps:
        raise InvalidParameterError("emit_table: chain is empty")
    if fmt == "json":
        return chain_to_json(record)
    rows = table_cells(record)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        writer.writerows(rows)
        for line in _density_footer(record):
            buf.write(f"# {line}\n")
        return buf.getvalue()
    if fmt != "ascii":
        raise InvalidParameterError(f"emit_table: unknown format {fmt!r}")
    widths = [max(len(col), *(len(r[i]) for r in rows)) for i, col in enumerate(COLUMNS)]
    out = ["  ".join(col.ljust(w) for col, w in zip(COLUMNS, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    for r in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    out.extend(_density_footer(record))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# growth summary
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MethodGrowth:
    """Growth of one chain, measured between consecutive MSTD steps."""

    method: str
    first_cardinality: int
    first_diameter: int
    growth_type: str                      # Linear | Exponential | Irregular
    card_rate: Optional[int] = None       # steady additive step (Linear)
    diam_rate: Optional[int] = None
    min_card_factor: Optional[Fraction] = None  # smallest ratio (Exponential)
    min_diam_factor: Optional[Fraction] = None

    def rate_cells(self) -> tuple[str, str]:
        if self.growth_type == "Linear":
            return str(self.card_rate), str(self.diam_rate)
        if self.growth_type == "Exponential":
            return (f">{format3(self.min_card_factor)}x",
                    f">{format3(self.min_diam_factor)}x")
        return "?", "?"


def growth_rows(chains: list[ChainRecord]) -> list[MethodGrowth]:
    """Measure each chain's growth; needs >= 5 steps (3 MSTD steps)."""
    rows = []
    for record in chains:
        if len(record.steps) < 5:
            raise InvalidParameterError("growth summary: every chain needs >= 5 steps")
        mstd = [s.profile for s in record.steps
                if s.profile.classification == Classification.MSTD]
        if len(mstd) < 3:
            raise InvalidParameterError("growth summary: need >= 3 MSTD steps")
        cards = [p.cardinality for p in mstd]
        diams = [p.diameter for p in mstd]
        card_incs = [b - a for a, b in zip(cards, cards[1:])]
        diam_incs = [b - a for a, b in zip(diams, diams[1:])]
        first = record.steps[0].profile
        if card_incs[-1] == card_incs[-2] and diam_incs[-1] == diam_incs[-2]:
            # additive step settles; the first increment may differ
            rows.append(MethodGrowth(
                method=record.method or "?",
                first_cardinality=first.cardinality,
                first_diameter=first.diameter,
                growth_type="Linear",
                card_rate=card_incs[-1],
                diam_rate=diam_incs[-1],
            ))
            continue
        card_factors = [Fraction(b, a) for a, b in zip(cards, cards[1:])]
        diam_factors = [Fraction(b, a) for a, b in zip(diams, diams[1:])]
        if min(diam_factors) > 1 and min(card_factors) > 1:
            rows.append(MethodGrowth(
                method=record.method or "?",
                first_cardinality=first.cardinality,
                first_diameter=first.diameter,
                growth_type="Exponential",
                min_card_factor=min(card_factors),
                min_diam_factor=min(diam_factors),
            ))
        else:
            rows.append(MethodGrowth(
                method=record.method or "?",
                first_cardinality=first.cardinality,
                first_diameter=first.diameter,
                growth_type="Irregular",
            ))
    return rows


def emit_growth_summary(chains: list[ChainRecord]) -> str:
    """Tabulate per-method growth between consecutive MSTD steps."""
    rows = growth_rows(chains)
    header = ("Method", "|A_1|", "A_1 Diam.", "Card. Rate", "Diam. Rate", "Type")
    cells = []
    for g in rows:
        card_rate, diam_rate = g.rate_cells()
        cells.append((g.method, str(g.first_cardinality), str(g.first_diameter),
                      card_rate, diam_rate, g.growth_type))
    widths = [max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(header)]
    out = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    for r in cells:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# reference tables and comparison
# ---------------------------------------------------------------------------

# Published example-sequence tables: per row
# (sums, diffs, cardinality, diameter, card ratio, diam ratio, density).
GOLDEN_TABLES: dict[str, list[tuple]] = {
    "fill1": [
        (26, 25, 8, 14, None, None, "0.571"),
        (33, 35, 16, 17, "2.000", "1.214", "0.941"),
        (126, 125, 39, 63, "2.438", "3.706", "0.619"),
        (130, 131, 65, 65, "1.667", "1.032", "1.000"),
        (414, 413, 135, 207, "2.077", "3.185", "0.652"),
        (418, 419, 209, 209, "1.548", "1.010", "1.000"),
        (1278, 1277, 423, 639, "2.024", "3.057", "0.662"),
    ],
    "fill2": [
        (38, 37, 11, 16, None, None, "0.688"),
        (52, 61, 21, 30, "1.909", "1.875", "0.700"),
        (80, 79, 31, 40, "1.476", "1.333", "0.775"),
        (92, 101, 41, 50, "1.323", "1.250", "0.820"),
        (120, 119, 51, 60, "1.244", "1.200", "0.850"),
        (132, 141, 61, 70, "1.196", "1.167", "0.871"),
        (160, 159, 71, 80, "1.164", "1.143", "0.888"),
    ],
    "nonfill": [
        (36, 35, 11, 18, None, None, "0.611"),
        (40, 41, 12, 22, "1.091", "1.222", "0.545"),
        (52, 51, 15, 26, "1.250", "1.182", "0.577"),
        (56, 57, 16, 30, "1.067", "1.154", "0.533"),
        (68, 67, 19, 34, "1.188", "1.133", "0.559"),
        (72, 73, 20, 38, "1.053", "1.118", "0.526"),
        (84, 83, 23, 42, "1.150", "1.105", "0.548"),
    ],
}

GOLDEN_FOOTERS = {"fill1": "0.667", "fill2": "1.000", "nonfill": "0.500"}

# Published cells that disagree with values recomputed from the printed
# seed set itself: (method, 1-based row, column) -> (published, recomputed).
# The seed of the linear fill-in example spans 19, not 16, which also
# skews the published second-step diameter ratio.
KNOWN_DISCREPANCIES: dict[tuple[str, int, str], tuple[str, str]] = {
    ("fill2", 1, "Diameter"): ("16", "19"),
    ("fill2", 1, "Density"): ("0.688", "0.579"),
    ("fill2", 2, "D(A_i)/D(A_{i-1})"): ("1.875", "1.579"),
}


@dataclass(frozen=True)
class CellCheck:
    row: int
    column: str
    expected: str
    computed: str
    status: str  # match | known-discrepancy | mismatch


@dataclass(frozen=True)
class TableComparison:
    method: str
    cells: tuple[CellCheck, ...]
    footer_expected: str
    footer_computed: str

    @property
    def mismatches(self) -> tuple[CellCheck, ...]:
        return tuple(c for c in self.cells if c.status == "mismatch")

    @property
    def flagged(self) -> tuple[CellCheck, ...]:
        return tuple(c for c in self.cells if c.status == "known-discrepancy")

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.footer_expected == self.footer_computed

    def render(self) -> str:
        lines = [f"reference comparison for method {self.method}: "
                 f"{'PASS' if self.passed else 'FAIL'}"]
        for c in self.flagged:
            lines.append(
                f"  FLAG row A_{c.row} {c.column}: published {c.expected} is "
                f"inconsistent with the printed seed set; computed {c.computed}"
            )
        for c in self.mismatches:
            lines.append(
                f"  MISMATCH row A_{c.row} {c.column}: expected {c.expected}, "
                f"computed {c.computed}"
            )
        if self.footer_expected != self.footer_computed:
            lines.append(f"  MISMATCH footer: expected {self.footer_expected}, "
                         f"computed {self.footer_computed}")
        return "\n".join(lines)


def compare_to_golden(record: ChainRecord, method: Optional[str] = None) -> TableComparison:
    """Compare a chain cell-for-cell against its published reference table.

    Whitelisted inconsistent cells come back flagged (and only count as
    flagged when the computed value matches the pinned recomputation).
    """
    method = method or record.method
    if method not in GOLDEN_TABLES:
        raise InvalidParameterError(f"compare_to_golden: no reference table for {method!r}")
    golden = GOLDEN_TABLES[method]
    if len(record.steps) < len(golden):
        raise InvalidParameterError(
            f"compare_to_golden: need >= {len(golden)} steps, have {len(record.steps)}"
        )
    checks: list[CellCheck] = []
    rows = table_cells(record)
    for i, want in enumerate(golden, start=1):
        got = rows[i - 1][1:]  # drop the Set label
        for column, expected, computed in zip(COLUMNS[1:], want, got):
            expected_str = "N/A" if expected is None else str(expected)
            if expected_str == computed:
                status = "match"
            else:
                pinned = KNOWN_DISCREPANCIES.get((method, i, column))
                if pinned and pinned == (expected_str, computed):
                    status = "known-discrepancy"
                else:
                    status = "mismatch"
            checks.append(CellCheck(i, column, expected_str, computed, status))
    analytic = ANALYTIC_DENSITY_LIMITS.get(method)
    footer_computed = format3(analytic) if analytic is not None else "N/A"
    return TableComparison(
        method=method,
        cells=tuple(checks),
        footer_expected=GOLDEN_FOOTERS[method],
        footer_computed=footer_computed,
    )
