"""Partitions, Ferrers-diagram cells, contents and rimhook combinatorics.

Partitions are plain tuples of positive ints in weakly decreasing order; the
empty tuple is the partition of 0.  Cells are 1-based ``(row, col)`` pairs.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]


class Cell(NamedTuple):
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


def content(cell: Cell) -> int:
    return cell.col - cell.row


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    if any(not isinstance(p, int) or p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def make_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize ``parts``: drop zeros, then check weak decrease."""
    parts = tuple(int(p) for p in parts if p != 0)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition")
    return parts


_EXPONENT = re.compile(r"^\s*(\d+)\s*\^\s*(\d+)\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,2"``; ``""`` is the empty partition.

    Exponent notation ``"3,1^2"`` is accepted and expanded.  Input parts may
    come in any order (they are sorted), which lets cycle types like
    ``"1,1,3"`` through.
    """
    text = text.strip().strip("()")
    if not text:
        return ()
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError(f"empty part in {text!r}")
        m = _EXPONENT.match(token)
        if m:
            parts.extend([int(m.group(1))] * int(m.group(2)))
        else:
            parts.append(int(token))
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {text!r}")
    return make_partition(sorted(parts, reverse=True))


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


def weight(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def partition_order_key(lam: Partition) -> tuple[int, ...]:
    """Sort key giving reverse lexicographic order: (3), (2,1), (1,1,1)."""
    return tuple(-p for p in lam) + (0,)


def sort_partitions(parts: Iterable[Partition]) -> list[Partition]:
    return sorted(parts, key=partition_order_key)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, largest first part first."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def cells(lam: Partition) -> list[Cell]:
    return [Cell(i + 1, j + 1) for i, part in enumerate(lam) for j in range(part)]


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def corner_cells(lam: Partition) -> list[Cell]:
    """Cells whose removal leaves a partition, top row first."""
    out = []
    for i, part in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if part > below:
            out.append(Cell(i + 1, part))
    return out


def addable_cells(lam: Partition) -> list[Cell]:
    out = []
    for i in range(len(lam) + 1):
        here = lam[i] if i < len(lam) else 0
        above = lam[i - 1] if i > 0 else None
        if above is None or above > here:
            out.append(Cell(i + 1, here + 1))
    return out


def remove_cell(lam: Partition, cell: Cell) -> Partition:
    parts = list(lam)
    if cell.row > len(parts) or parts[cell.row - 1] != cell.col:
        raise ValueError(f"{cell} is not at the end of a row of {lam}")
    parts[cell.row - 1] -= 1
    return make_partition(parts)


def add_cell(lam: Partition, cell: Cell) -> Partition:
    parts = list(lam) + [0]
    if parts[cell.row - 1] != cell.col - 1:
        raise ValueError(f"{cell} cannot be appended to {lam}")
    parts[cell.row - 1] += 1
    return make_partition(parts)


def skew_cells(outer: Partition, inner: Partition) -> list[Cell]:
    if not contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    padded = inner + (0,) * (len(outer) - len(inner))
    return [
        Cell(i + 1, j + 1)
        for i, (a, b) in enumerate(zip(outer, padded))
        for j in range(b, a)
    ]


def _edge_connected(cell_set: set[Cell]) -> bool:
    if not cell_set:
        return False
    start = next(iter(cell_set))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in (Cell(r + 1, c), Cell(r - 1, c), Cell(r, c + 1), Cell(r, c - 1)):
            if nb in cell_set and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cell_set)


def _has_square(cell_set: set[Cell]) -> bool:
    return any(
        Cell(r + 1, c) in cell_set
        and Cell(r, c + 1) in cell_set
        and Cell(r + 1, c + 1) in cell_set
        for r, c in cell_set
    )


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition
    length: int
    is_rimhook: bool
    height: int | None

    @property
    def cells(self) -> list[Cell]:
        return skew_cells(self.outer, self.inner)


def classify_skew(outer: Partition, inner: Partition) -> SkewShape:
    """Classify ``outer - inner`` by direct inspection of its cell set."""
    cs = skew_cells(outer, inner)
    cell_set = set(cs)
    height = len({c.row for c in cs}) - 1 if cs else None
    rim = _edge_connected(cell_set) and not _has_square(cell_set)
    return SkewShape(outer, inner, len(cs), rim, height)


# Rimhooks via first-column hook lengths ("beta numbers"): with k rows,
# beta_i = lam_i + k - i.  Removing a length-L rimhook lowers one beta by L
# onto a free slot; its height is the number of betas jumped over.

def _betas(lam: Partition, k: int) -> list[int]:
    padded = lam + (0,) * (k - len(lam))
    return [p + k - 1 - i for i, p in enumerate(padded)]


def _from_betas(betas: Iterable[int]) -> Partition:
    bs = sorted(betas, reverse=True)
    k = len(bs)
    return make_partition(b - (k - 1 - i) for i, b in enumerate(bs))


@cache
def rimhook_removals(lam: Partition, length: int) -> tuple[tuple[Partition, int], ...]:
    """All ``(nu, height)`` with ``lam - nu`` a rimhook of the given length."""
    if length < 1:
        raise ValueError("rimhook length must be positive")
    betas = _betas(lam, len(lam))
    present = set(betas)
    out = []
    for b in betas:
        target = b - length
        if target < 0 or target in present:
            continue
        height = sum(1 for other in betas if target < other < b)
        nu = _from_betas([target if x == b else x for x in betas])
        out.append((nu, height))
    out.sort(key=lambda item: partition_order_key(item[0]))
    return tuple(out)


@cache
def rimhook_additions(lam: Partition, length: int) -> tuple[tuple[Partition, int], ...]:
    """All ``(nu, height)`` with ``nu - lam`` a rimhook of the given length."""
    if length < 1:
        raise ValueError("rimhook length must be positive")
    # length extra zero rows give every added rimhook room to grow downward
    betas = _betas(lam, len(lam) + length)
    present = set(betas)
    out = []
    for b in betas:
        target = b + length
        if target in present:
            continue
        height = sum(1 for other in betas if b < other < target)
        nu = _from_betas([target if x == b else x for x in betas])
        out.append((nu, height))
    out.sort(key=lambda item: partition_order_key(item[0]))
    return tuple(out)


HORIZONTAL = "horizontal-domino"
VERTICAL = "vertical-domino"
DISJOINT = "disjoint-corners"


@dataclass(frozen=True)
class CellPair:
    """Two cells removable together; ``first`` is the left or upper one."""

    first: Cell
    second: Cell
    kind: str
    pair_content: int
    remainder: Partition

    def __str__(self) -> str:
        return f"{{{self.first},{self.second}}}"


def removable_pairs(lam: Partition) -> list[CellPair]:
    """Pairs of cells whose joint removal leaves a partition of ``n - 2``."""
    if weight(lam) < 2:
        raise ValueError("need a partition of weight at least 2")
    out = []
    for nu, _ in rimhook_removals(lam, 2):
        x, y = sorted(skew_cells(lam, nu))
        if x.row == y.row:
            out.append(CellPair(x, y, HORIZONTAL, content(x), nu))
        else:
            out.append(CellPair(x, y, VERTICAL, -content(x), nu))
    for x, y in combinations(corner_cells(lam), 2):
        out.append(CellPair(x, y, DISJOINT, -1, remove_cell(remove_cell(lam, y), x)))
    out.sort(key=lambda p: (p.first, p.second))
    return out


def hook_length(lam: Partition, cell: Cell) -> int:
    conj = conjugate(lam)
    return lam[cell.row - 1] - cell.col + conj[cell.col - 1] - cell.row + 1
