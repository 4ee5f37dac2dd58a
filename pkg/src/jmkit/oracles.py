"""Slow, independent reference computations used to cross-check the engine.

Nothing here touches the beta-number rimhook code or the character
recursion.
"""
from __future__ import annotations

from functools import cache
from itertools import combinations
from math import factorial, prod

from .partitions import (
    Cell,
    Partition,
    cells,
    classify_skew,
    conjugate,
    contains,
    is_partition,
    partitions_of,
    sort_partitions,
)


def brute_rimhook_removals(lam: Partition, length: int) -> list[tuple[Partition, int]]:
    """Filter every sub-partition of the right weight through ``classify_skew``."""
    n = sum(lam)
    if length > n:
        return []
    out = []
    for nu in partitions_of(n - length):
        if contains(lam, nu):
            shape = classify_skew(lam, nu)
            if shape.is_rimhook:
                out.append((nu, shape.height))
    order = {p: i for i, p in enumerate(sort_partitions(q for q, _ in out))}
    return sorted(out, key=lambda item: order[item[0]])


def brute_rimhook_additions(lam: Partition, length: int) -> list[tuple[Partition, int]]:
    n = sum(lam)
    out = []
    for nu in partitions_of(n + length):
        if contains(nu, lam):
            shape = classify_skew(nu, lam)
            if shape.is_rimhook:
                out.append((nu, shape.height))
    order = {p: i for i, p in enumerate(sort_partitions(q for q, _ in out))}
    return sorted(out, key=lambda item: order[item[0]])


def _rows_from_cells(cell_set: set[Cell]) -> Partition | None:
    rows: dict[int, set[int]] = {}
    for r, c in cell_set:
        rows.setdefault(r, set()).add(c)
    lam = []
    for r in range(1, len(rows) + 1):
        cols = rows.get(r)
        if not cols or cols != set(range(1, len(cols) + 1)):
            return None
        lam.append(len(cols))
    lam_t = tuple(lam)
    return lam_t if is_partition(lam_t) else None


def brute_removable_pairs(lam: Partition) -> list[tuple[Cell, Cell, Partition]]:
    """Every 2-subset of cells whose removal leaves a Ferrers diagram."""
    all_cells = set(cells(lam))
    out = []
    for x, y in combinations(sorted(all_cells), 2):
        rest = _rows_from_cells(all_cells - {x, y})
        if rest is not None:
            out.append((x, y, rest))
    return out


def hook_length_dimension(lam: Partition) -> int:
    """``n! / prod(hook lengths)``."""
    conj = conjugate(lam)
    hooks = [
        (lam[i] - j - 1) + (conj[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]
    return factorial(sum(lam)) // prod(hooks)


def count_standard_tableaux(lam: Partition) -> int:
    """Count SYT by explicitly filling cells with 1..n one at a time."""
    n = sum(lam)
    count = 0
    filled = [0] * len(lam)

    def place(k: int) -> None:
        nonlocal count
        if k > n:
            count += 1
            return
        for i in range(len(lam)):
            if filled[i] < lam[i] and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                place(k + 1)
                filled[i] -= 1

    place(1)
    return count


@cache
def _power_sum_product_in_schur(mu: Partition) -> dict[Partition, int]:
    """``p_mu`` in the Schur basis by multiplying in one part at a time.

    Uses additions checked cell-by-cell, not the beta-number routines.
    """
    if not mu:
        return {(): 1}
    prev = _power_sum_product_in_schur(mu[:-1])
    out: dict[Partition, int] = {}
    for lam, coeff in prev.items():
        for nu, height in brute_rimhook_additions(lam, mu[-1]):
            out[nu] = out.get(nu, 0) + coeff * (-1) ** height
    return {k: v for k, v in out.items() if v}


def expansion_character(lam: Partition, mu: Partition) -> int:
    """``chi^lam(mu)`` read off as the coefficient of ``s_lam`` in ``p_mu``."""
    return _power_sum_product_in_schur(tuple(mu)).get(lam, 0)
