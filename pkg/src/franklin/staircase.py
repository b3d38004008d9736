"""Stairs, landings, and m-landing staircases on Ferrers diagrams.

Cells are addressed (row, col), 1-based, with row 1 the longest row.  For a
partition with n distinct parts > m:

  * the cell at the end of each row is a stair, and so is the top cell of
    each of the (top_part - m - 1) leftmost columns;
  * of the remaining cells, every cell with no cell above it is a landing
    (rows 1..n-1 contribute the gap cells between consecutive parts; row n
    contributes exactly m landings next to its end stair);
  * the m-landing staircase is the contiguous run of boundary cells that
    starts at the stair (1, part_1), always includes a stair it reaches,
    takes landings only while fewer than m have been taken, and ends just
    before the first landing met with the quota already full.

Column-top stairs are never part of the staircase: the walk ends when it
reaches them, which is what keeps the staircase length within m + n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .partitions import DistinctPartition


class PartTooSmall(ValueError):
    """Some part is <= m, so stairs and landings are undefined."""


class EmptyPartition(ValueError):
    """The empty partition has no cells to classify."""


class CellClass(enum.Enum):
    ROW_END_STAIR = "RowEndStair"
    COLUMN_TOP_STAIR = "ColumnTopStair"
    LANDING = "Landing"
    INTERIOR = "Interior"


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Staircase:
    """The m-landing staircase: cells in boundary-walk order.

    `cells` starts at (1, part_1) and steps left/up along the profile;
    `landing_rows` lists the row of each landing cell (a multiset, in walk
    order); `stair_count` counts the row-end stairs taken; `length` is the
    total number of cells, the s_m statistic.
    """

    cells: tuple[Cell, ...]
    landing_rows: tuple[int, ...]
    stair_count: int
    length: int


def _require_valid(p: DistinctPartition, m: int) -> None:
    if m < 0:
        raise ValueError("m must be nonnegative")
    if p.n == 0:
        raise EmptyPartition("staircase is undefined for the empty partition")
    if p.parts[-1] <= m:
        raise PartTooSmall(f"all parts must exceed m={m}, got {p.parts}")


def _walk(parts: tuple[int, ...], m: int) -> tuple[list[int], list[int]]:
    """Boundary walk over a nonempty tuple of parts > m.

    Returns (cells_per_row, landings_per_row) for the walked prefix of
    rows: entry i counts staircase cells / landing cells in row i+1.  Each
    walked row contributes its end stair plus the landings taken there.
    """
    n = len(parts)
    cells: list[int] = []
    lands: list[int] = []
    want = m
    for i in range(n):
        avail = parts[i] - parts[i + 1] - 1 if i + 1 < n else m
        take = want if want < avail else avail
        cells.append(1 + take)
        lands.append(take)
        want -= take
        if take < avail:
            break
    return cells, lands


def classify_cells(p: DistinctPartition, m: int) -> list[list[CellClass]]:
    """Classification of every diagram cell; result[i][j] is cell (i+1, j+1)."""
    _require_valid(p, m)
    parts = p.parts
    n = len(parts)
    grid = []
    for i in range(n):
        row = [CellClass.INTERIOR] * parts[i]
        row[parts[i] - 1] = CellClass.ROW_END_STAIR
        if i + 1 < n:
            for j in range(parts[i + 1] + 1, parts[i]):
                row[j - 1] = CellClass.LANDING
        else:
            top = parts[i]  # top > m, so the landing run below has m cells
            for j in range(1, top - m):
                row[j - 1] = CellClass.COLUMN_TOP_STAIR
            for j in range(top - m, top):
                row[j - 1] = CellClass.LANDING
        grid.append(row)
    return grid


def staircase(p: DistinctPartition, m: int) -> Staircase:
    """The m-landing staircase of p; requires all parts > m."""
    _require_valid(p, m)
    per_row, lands = _walk(p.parts, m)
    cells: list[Cell] = []
    landing_rows: list[int] = []
    for i, taken in enumerate(lands):
        row = i + 1
        end = p.parts[i]
        cells.append(Cell(row, end))
        for step in range(1, taken + 1):
            cells.append(Cell(row, end - step))
        landing_rows.extend([row] * taken)
    return Staircase(
        cells=tuple(cells),
        landing_rows=tuple(landing_rows),
        stair_count=len(per_row),
        length=sum(per_row),
    )


def top_overlap(p: DistinctPartition, m: int) -> int:
    """Number of staircase cells lying in the top row."""
    _require_valid(p, m)
    per_row, _ = _walk(p.parts, m)
    return per_row[-1] if len(per_row) == p.n else 0


def render_ferrers(p: DistinctPartition, m: int, mark_staircase: bool = False) -> str:
    """Text diagram, top row first: S = stair, L = landing, . = interior.

    With mark_staircase every cell is three characters wide and staircase
    cells are bracketed, e.g. ``[S]`` next to `` L ``, keeping columns
    aligned across rows.
    """
    grid = classify_cells(p, m)
    marked: set[Cell] = set(staircase(p, m).cells) if mark_staircase else set()
    symbol = {
        CellClass.ROW_END_STAIR: "S",
        CellClass.COLUMN_TOP_STAIR: "S",
        CellClass.LANDING: "L",
        CellClass.INTERIOR: ".",
    }
    lines = []
    for i in range(p.n - 1, -1, -1):
        chars = []
        for j, cls in enumerate(grid[i]):
            ch = symbol[cls]
            if mark_staircase:
                ch = f"[{ch}]" if Cell(i + 1, j + 1) in marked else f" {ch} "
            chars.append(ch)
        lines.append("".join(chars))
    return "\n".join(lines)
