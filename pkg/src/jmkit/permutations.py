"""Permutations of {1..n}, cycle types, and the group-algebra sums R_n, T_n, V_n.

Products act right to left: ``(sigma * tau)(k) = sigma(tau(k))``.  With this
convention ``sigma * (i n)`` inserts ``n`` into the cycle of ``sigma``
holding ``i``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .partitions import Partition, make_partition, weight


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]  # images[k - 1] == sigma(k)

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int | None = None) -> "Permutation":
        cycles = [tuple(c) for c in cycles]
        points = [k for c in cycles for k in c]
        if len(points) != len(set(points)):
            raise ValueError("cycles are not disjoint")
        top = max(points, default=0)
        n = top if n is None else n
        if top > n or any(k < 1 for k in points):
            raise ValueError(f"cycle entries must lie in 1..{n}")
        images = list(range(1, n + 1))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def fixed_points(self) -> list[int]:
        return [k for k in range(1, self.n + 1) if self(k) == k]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """``sigma * tau``: apply ``tau`` first."""
    if sigma.n != tau.n:
        raise ValueError(f"size mismatch: S_{sigma.n} vs S_{tau.n}")
    return Permutation(tuple(sigma.images[t - 1] for t in tau.images))


def cycle_type(sigma: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in sigma.cycles()), reverse=True))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse cycle notation such as ``"(2 5 3)(1)(4)"``; ``"()"`` or ``""`` is the identity."""
    stripped = re.sub(r"\s+", "", _CYCLE.sub("", text))
    if stripped:
        raise ValueError(f"cannot parse cycle notation {text!r}")
    cycles = []
    for body in _CYCLE.findall(text):
        tokens = body.replace(",", " ").split()
        if tokens:
            cycles.append(tuple(int(t) for t in tokens))
    return Permutation.from_cycles(cycles, n)


def transposition(i: int, j: int, n: int) -> Permutation:
    return Permutation.from_cycles([(i, j)], n)


def representative(mu: Partition, n: int | None = None) -> Permutation:
    """Canonical permutation of cycle type ``mu``: consecutive blocks, largest first.

    With ``n > |mu|`` the extra points ``|mu|+1..n`` are fixed.
    """
    mu = tuple(sorted(mu, reverse=True))
    n = weight(mu) if n is None else n
    cycles = []
    start = 1
    for part in mu:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, n)


@dataclass(frozen=True)
class GroupAlgebraElement:
    n: int
    terms: tuple[tuple[Permutation, int], ...] = ()

    def __post_init__(self):
        if any(perm.n != self.n for perm, _ in self.terms):
            raise ValueError("all terms must live in the same S_n")

    def __len__(self) -> int:
        return len(self.terms)

    def cycle_type_census(self) -> dict[Partition, int]:
        census: dict[Partition, int] = {}
        for perm, coeff in self.terms:
            mu = cycle_type(perm)
            census[mu] = census.get(mu, 0) + coeff
        return census

    def conjugate_by(self, g: Permutation) -> "GroupAlgebraElement":
        ginv = g.inverse()
        return GroupAlgebraElement(self.n, tuple((g * perm * ginv, c) for perm, c in self.terms))


def build_R(sigma: Permutation) -> GroupAlgebraElement:
    """Jucys-Murphy sum ``sum_{i<n} sigma * (i n)``; needs ``sigma(n) == n``."""
    n = sigma.n
    if n < 1 or sigma(n) != n:
        raise ValueError("sigma must fix n")
    return GroupAlgebraElement(n, tuple((sigma * transposition(i, n, n), 1) for i in range(1, n)))


def build_R_j(sigma: Permutation, j: int) -> GroupAlgebraElement:
    """``sum_{i<j} sigma * (i j)`` for any ``j``; exploratory only."""
    n = sigma.n
    if not 1 <= j <= n:
        raise ValueError(f"j must lie in 1..{n}")
    return GroupAlgebraElement(n, tuple((sigma * transposition(i, j, n), 1) for i in range(1, j)))


def build_T(sigma: Permutation) -> GroupAlgebraElement:
    """``sum_{i<=n-2} sigma * (i n-1 n)``; needs ``sigma`` to fix ``n-1`` and ``n``."""
    n = sigma.n
    if n < 2 or sigma(n) != n or sigma(n - 1) != n - 1:
        raise ValueError("sigma must fix n-1 and n")
    terms = tuple(
        (sigma * Permutation.from_cycles([(i, n - 1, n)], n), 1) for i in range(1, n - 1)
    )
    return GroupAlgebraElement(n, terms)


def build_V(sigma: Permutation) -> GroupAlgebraElement:
    """``sum over non-fixed i of sigma * (i sigma(i))``; each term fixes ``sigma(i)``."""
    n = sigma.n
    terms = tuple(
        (sigma * transposition(i, sigma(i), n), 1)
        for i in range(1, n + 1)
        if sigma(i) != i
    )
    return GroupAlgebraElement(n, terms)


def drop_ones(mu: Partition, count: int) -> Partition:
    """Remove ``count`` parts equal to 1 (restriction to a smaller S_n)."""
    if mu.count(1) < count:
        raise ValueError(f"{mu} has fewer than {count} fixed points")
    return make_partition(mu[: len(mu) - count]) if count else mu


def eval_class_function(elem: GroupAlgebraElement, lam: Partition, drop_fixed_points: int = 0,
                        chi: Callable[[Partition, Partition], int] | None = None) -> int:
    """``sum coeff * chi^lam(type)``, optionally restricting each term first."""
    if drop_fixed_points not in (0, 1):
        raise ValueError("drop_fixed_points must be 0 or 1")
    if chi is None:
        from .characters import chi
    if elem.n - drop_fixed_points != weight(lam) and elem.terms:
        raise ValueError(f"terms restrict to S_{elem.n - drop_fixed_points}, lambda has weight {weight(lam)}")
    total = 0
    for perm, coeff in elem.terms:
        total += coeff * chi(lam, drop_ones(cycle_type(perm), drop_fixed_points))
    return total
