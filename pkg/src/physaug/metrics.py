"""Corruption-robustness aggregation.

Consumes precomputed detection scores P[C, S] (mAP percentages) for every
corruption type C and severity level S and reduces them to the mean
performance under corruption:

    mpc = (1/N_C) * sum_C (1/N_S) * sum_S P[C, S]

which for a complete grid equals the grand mean of all cells.  Incomplete
grids are rejected, never imputed: averaging over present cells would
silently skew comparisons.

Results file format (UTF-8 CSV): header ``corruption,severity,map``, one
row per cell, severity a positive integer, map a decimal percentage.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DATASET_GRIDS",
    "CorruptionResultsTable",
    "ResultsFormatError",
    "parse_results",
    "mpc",
    "per_corruption_means",
    "summarize",
    "format_report",
]

# Named evaluation modes: corruption count x severity count.
DATASET_GRIDS = {"dwd": (4, 1), "cityscapes_c": (15, 5)}

_HEADER = ["corruption", "severity", "map"]


class ResultsFormatError(ValueError):
    """Malformed results file; message carries the offending row number."""


@dataclass(frozen=True)
class CorruptionResultsTable:
    """Complete score grid: ``scores[i, s-1]`` is corruption
    ``corruptions[i]`` at severity ``s``."""

    corruptions: tuple[str, ...]
    scores: np.ndarray  # (N_C, N_S) float64

    def __post_init__(self):
        arr = np.asarray(self.scores, dtype=np.float64)
        if arr.ndim != 2:
            raise ValueError(f"scores must be 2D (N_C, N_S), got shape {arr.shape}")
        if arr.shape[0] != len(self.corruptions):
            raise ValueError(
                f"{len(self.corruptions)} corruption names but {arr.shape[0]} score rows"
            )
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("table must contain at least one cell")
        if len(set(self.corruptions)) != len(self.corruptions):
            raise ValueError("duplicate corruption names")
        if not np.isfinite(arr).all():
            raise ValueError("scores must be finite")
        if arr.min() < 0:
            raise ValueError("scores must be >= 0")
        object.__setattr__(self, "scores", arr)

    @property
    def num_corruptions(self) -> int:
        return self.scores.shape[0]

    @property
    def num_severities(self) -> int:
        return self.scores.shape[1]


def parse_results(text: str) -> CorruptionResultsTable:
    """Parse and validate a results CSV into a complete table.

    Raises ResultsFormatError (naming the row) on a bad header, malformed
    row, duplicate (corruption, severity) key, non-numeric score, or a
    severity grid that is not exactly 1..N_S for every corruption.
    """
    reader = csv.reader(io.StringIO(text))
    rows = [(i + 1, row) for i, row in enumerate(reader) if row]
    if not rows:
        raise ResultsFormatError("empty results file")
    header_line, header = rows[0]
    if [h.strip().lower() for h in header] != _HEADER:
        raise ResultsFormatError(
            f"row {header_line}: expected header {','.join(_HEADER)!r}, got {','.join(header)!r}"
        )

    cells: dict[tuple[str, int], float] = {}
    corruptions: list[str] = []  # order of first appearance
    seen: set[str] = set()
    for line_no, row in rows[1:]:
        if len(row) != 3:
            raise ResultsFormatError(f"row {line_no}: expected 3 fields, got {len(row)}")
        name = row[0].strip()
        if not name:
            raise ResultsFormatError(f"row {line_no}: empty corruption name")
        try:
            severity = int(row[1])
        except ValueError:
            raise ResultsFormatError(f"row {line_no}: severity {row[1]!r} is not an integer") from None
        if severity < 1:
            raise ResultsFormatError(f"row {line_no}: severity must be >= 1, got {severity}")
        try:
            score = float(row[2])
        except ValueError:
            raise ResultsFormatError(f"row {line_no}: score {row[2]!r} is not numeric") from None
        if not np.isfinite(score) or score < 0:
            raise ResultsFormatError(f"row {line_no}: score must be finite and >= 0, got {row[2]}")
        key = (name, severity)
        if key in cells:
            raise ResultsFormatError(f"row {line_no}: duplicate cell for {key}")
        if name not in seen:
            seen.add(name)
            corruptions.append(name)
        cells[key] = score

    if not cells:
        raise ResultsFormatError("results file contains no data rows")

    num_severities = max(s for _, s in cells)
    missing = [
        (name, s)
        for name in corruptions
        for s in range(1, num_severities + 1)
        if (name, s) not in cells
    ]
    if missing:
        raise ResultsFormatError(f"missing cells (severities must form 1..{num_severities}): {missing}")

    scores = np.array(
        [[cells[(name, s)] for s in range(1, num_severities + 1)] for name in corruptions]
    )
    return CorruptionResultsTable(corruptions=tuple(corruptions), scores=scores)


def mpc(table: CorruptionResultsTable) -> float:
    """Mean performance under corruption: per-corruption severity means,
    averaged over corruptions."""
    return float(table.scores.mean(axis=1).mean())


def per_corruption_means(table: CorruptionResultsTable) -> dict[str, float]:
    means = table.scores.mean(axis=1)
    return {name: float(m) for name, m in zip(table.corruptions, means)}


def summarize(table: CorruptionResultsTable, clean_score: float | None = None) -> dict:
    """Machine-readable report: one object per corruption plus overall
    fields.  ``clean_score`` (mAP on the uncorrupted domain) is optional
    and omitted when absent."""
    out = {
        "corruptions": [
            {
                "name": name,
                "mean": float(table.scores[i].mean()),
                "scores": [float(v) for v in table.scores[i]],
            }
            for i, name in enumerate(table.corruptions)
        ],
        "num_corruptions": table.num_corruptions,
        "num_severities": table.num_severities,
        "mpc": mpc(table),
    }
    if clean_score is not None:
        out["clean"] = float(clean_score)
    return out


def format_report(table: CorruptionResultsTable, clean_score: float | None = None) -> str:
    """Aligned plain-text report of per-corruption means and overall mPC."""
    name_width = max(len("corruption"), max(len(n) for n in table.corruptions))
    lines = [f"{'corruption':<{name_width}}  {'mean':>7}"]
    for name, mean in per_corruption_means(table).items():
        lines.append(f"{name:<{name_width}}  {mean:>7.2f}")
    lines.append("-" * (name_width + 9))
    lines.append(f"{'mPC':<{name_width}}  {mpc(table):>7.2f}")
    if clean_score is not None:
        lines.append(f"{'clean':<{name_width}}  {float(clean_score):>7.2f}")
    lines.append(
        f"({table.num_corruptions} corruptions x {table.num_severities} severities)"
    )
    return "\n".join(lines)
