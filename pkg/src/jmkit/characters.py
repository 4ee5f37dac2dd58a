"""Irreducible characters of S_n by signed rimhook stripping, plus tables,
branching and the Frobenius characteristic map."""
from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Mapping

from .partitions import (
    Partition,
    corner_cells,
    format_partition,
    make_partition,
    partitions_of,
    remove_cell,
    rimhook_removals,
    weight,
)
from .symfunc import PowerExpansion, z_of

DEFAULT_GUARD_N = 14


class GuardError(RuntimeError):
    """Requested size is past the configured resource guard."""


def guard_limit() -> int:
    raw = os.environ.get("JMKIT_GUARD_N")
    return int(raw) if raw else DEFAULT_GUARD_N


def check_guard(n: int, limit: int | None = None) -> None:
    limit = guard_limit() if limit is None else limit
    if n > limit:
        raise GuardError(f"n={n} exceeds guard n <= {limit} (set JMKIT_GUARD_N to raise it)")


class CharacterCache:
    """Memo for ``chi`` keyed on canonical ``(lam, mu)``.

    Plain dict reads and writes are atomic under the GIL; racing workers may
    recompute a value but always store the same one.
    """

    def __init__(self):
        self._memo: dict[tuple[Partition, Partition], int] = {}

    def __len__(self) -> int:
        return len(self._memo)

    def chi(self, lam: Partition, mu: Partition) -> int:
        lam = make_partition(lam)
        mu = make_partition(sorted(mu, reverse=True))
        if weight(lam) != weight(mu):
            raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
        return self._chi(lam, mu)

    def _chi(self, lam: Partition, mu: Partition) -> int:
        if not mu:
            return 1
        key = (lam, mu)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        # strip the largest part first: fewest rimhooks to branch over
        rest = mu[1:]
        value = 0
        for nu, height in rimhook_removals(lam, mu[0]):
            term = self._chi(nu, rest)
            value += -term if height % 2 else term
        self._memo[key] = value
        return value


shared_cache = CharacterCache()


def chi(lam: Partition, mu: Partition) -> int:
    """Irreducible character value ``chi^lam`` at cycle type ``mu``."""
    return shared_cache.chi(lam, mu)


def dimension(lam: Partition) -> int:
    return chi(lam, (1,) * weight(lam))


def class_size(mu: Partition) -> int:
    return factorial(weight(mu)) // z_of(mu)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        lam, mu = key
        return self.values[self.partitions.index(tuple(lam))][self.partitions.index(tuple(mu))]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda\\mu"] + [format_partition(mu) for mu in self.partitions])
        writer.writerow(["class_size"] + list(self.class_sizes))
        for lam, row in zip(self.partitions, self.values):
            writer.writerow([format_partition(lam)] + list(row))
        return buf.getvalue()

    def to_text(self) -> str:
        labels = ["(" + format_partition(p) + ")" for p in self.partitions]
        width = max(max(map(len, labels)), max(len(str(v)) for row in self.values for v in row))
        lines = [" " * width + " " + " ".join(lab.rjust(width) for lab in labels)]
        for lab, row in zip(labels, self.values):
            lines.append(lab.rjust(width) + " " + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "partitions": [list(p) for p in self.partitions],
            "class_sizes": list(self.class_sizes),
            "values": [list(row) for row in self.values],
        }


def _check_table(table: CharacterTable) -> None:
    n, parts, vals, sizes = table.n, table.partitions, table.values, table.class_sizes
    order = factorial(n)
    if sum(sizes) != order:
        raise AssertionError("class sizes do not sum to n!")
    triv = parts.index((n,))
    ident = parts.index((1,) * n)
    if any(v != 1 for v in vals[triv]):
        raise AssertionError("trivial character row is not all ones")
    if any(vals[i][ident] <= 0 for i in range(len(parts))):
        raise AssertionError("non-positive dimension")
    for a in range(len(parts)):
        for b in range(a, len(parts)):
            inner = sum(sizes[k] * vals[a][k] * vals[b][k] for k in range(len(parts)))
            if inner != (order if a == b else 0):
                raise AssertionError(f"row orthogonality fails for {parts[a]}, {parts[b]}")


def character_table(n: int, cache: CharacterCache | None = None,
                    guard: int | None = None) -> CharacterTable:
    """Full table of ``S_n``; rows and columns in the same partition order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    check_guard(n, guard)
    cache = CharacterCache() if cache is None else cache
    parts = partitions_of(n)
    values = tuple(tuple(cache.chi(lam, mu) for mu in parts) for lam in parts)
    table = CharacterTable(n, parts, values, tuple(class_size(mu) for mu in parts))
    _check_table(table)
    return table


def restrict_branching(lam: Partition, sigma_bar_type: Partition) -> int:
    """``sum over corners x of chi^{lam - x}(sigma_bar_type)``."""
    if weight(lam) != weight(sigma_bar_type) + 1:
        raise ValueError("need |lambda| = |type| + 1")
    return sum(chi(remove_cell(lam, x), sigma_bar_type) for x in corner_cells(lam))


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __call__(self, mu: Partition) -> Fraction:
        return Fraction(self.values.get(tuple(mu), 0))

    @classmethod
    def irreducible(cls, lam: Partition) -> "ClassFunction":
        n = weight(lam)
        return cls(n, {mu: Fraction(chi(lam, mu)) for mu in partitions_of(n)})


def characteristic(f: ClassFunction) -> PowerExpansion:
    """Frobenius characteristic ``sum_mu f(mu) / z_mu * p_mu``."""
    return PowerExpansion(
        f.n, {mu: f(mu) / z_of(mu) for mu in partitions_of(f.n)}
    )
