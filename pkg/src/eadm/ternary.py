"""Ternary-plot data for three-outcome models.

Produces two tables: a grid over the simplex flagged with credal
membership and per-option maximality, and the zero-expectation line of
every relevant difference option clipped to the simplex. Classification
is exact; the CSV writer only rounds for display.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from fractions import Fraction

from .core import MassFunction, Option, credal_member, expectation
from .model import Model
from .oracle import SimplexGrid, grid_points


class UnsupportedDimension(ValueError):
    pass


@dataclass(frozen=True)
class GridRow:
    p: MassFunction
    in_credal: bool
    maximiser: tuple[bool, ...]


@dataclass(frozen=True)
class ConstraintLine:
    label: str
    kind: str  # "assessment" or "query"
    option: Option
    endpoints: tuple[tuple[Fraction, ...], ...]  # 0, 1 or 2 points


@dataclass(frozen=True)
class TernaryData:
    query: tuple[str, ...]
    grid: tuple[GridRow, ...]
    lines: tuple[ConstraintLine, ...]


def zero_line(d: Option) -> tuple[tuple[Fraction, ...], ...]:
    """Points of the simplex where ``d`` has expectation zero.

    Returns the endpoints of the segment (two points), a single touching
    point, or nothing. The all-zero option (whole simplex) yields nothing.
    """
    n = len(d)
    if all(v == 0 for v in d):
        return ()
    pts: list[tuple[Fraction, ...]] = []
    for k in range(n):
        if d[k] == 0:
            pts.append(tuple(Fraction(int(i == k)) for i in range(n)))
    for i in range(n):
        for j in range(i + 1, n):
            if d[i] * d[j] < 0:
                t = d[j] / (d[j] - d[i])  # weight on vertex i
                pts.append(tuple(t if k == i else (1 - t) if k == j else Fraction(0)
                                 for k in range(n)))
    return tuple(dict.fromkeys(pts))


def labelled_differences(model: Model, query) -> list[tuple[str, str, Option]]:
    out = []
    for keep, reject in model.entries:
        for w in reject:
            for v in keep:
                out.append((f"{v}-{w}", "assessment", model.options[v] - model.options[w]))
    for u in query:
        for a in query:
            if a != u and model.options[a] != model.options[u]:
                out.append((f"{u}-{a}", "query", model.options[u] - model.options[a]))
    seen, unique = set(), []
    for item in out:
        if item[0] not in seen:
            seen.add(item[0])
            unique.append(item)
    return unique


def ternary_data(model: Model, query, resolution: int) -> TernaryData:
    if model.outcomes.n != 3:
        raise UnsupportedDimension(
            f"ternary export needs exactly 3 outcomes, model has {model.outcomes.n}")
    query = tuple(query)
    for name in query:
        if name not in model.options:
            raise KeyError(name)
    assessment = model.assessment
    vectors = [model.options[q] for q in query]
    rows = []
    for p in grid_points(SimplexGrid(3, resolution)):
        values = [expectation(p, u) for u in vectors]
        best = max(values) if values else None
        rows.append(GridRow(p, credal_member(p, assessment),
                            tuple(v == best for v in values)))
    lines = tuple(ConstraintLine(label, kind, d, zero_line(d))
                  for label, kind, d in labelled_differences(model, query))
    return TernaryData(query, tuple(rows), lines)


def _fmt(x) -> str:
    return f"{float(x):.12g}"


def write_csvs(data: TernaryData, out_dir, prefix: str = "ternary") -> tuple[str, str]:
    os.makedirs(out_dir, exist_ok=True)
    grid_path = os.path.join(out_dir, f"{prefix}_grid.csv")
    lines_path = os.path.join(out_dir, f"{prefix}_lines.csv")
    with open(grid_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["p1", "p2", "p3", "in_credal"] + [f"max_{q}" for q in data.query])
        for row in data.grid:
            w.writerow([_fmt(x) for x in row.p] + [int(row.in_credal)]
                       + [int(f) for f in row.maximiser])
    with open(lines_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["label", "kind", "d1", "d2", "d3",
                    "start_p1", "start_p2", "start_p3", "end_p1", "end_p2", "end_p3"])
        for line in data.lines:
            pts = list(line.endpoints)
            if len(pts) == 1:
                pts = pts * 2
            coords = [_fmt(x) for pt in pts for x in pt] or [""] * 6
            w.writerow([line.label, line.kind] + [_fmt(x) for x in line.option] + coords)
    return grid_path, lines_path


def export_ternary(model: Model, query, resolution: int, out_dir,
                   prefix: str = "ternary") -> TernaryData:
    data = ternary_data(model, query, resolution)
    write_csvs(data, out_dir, prefix)
    return data
