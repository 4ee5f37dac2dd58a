"""Sparse exact expansions in the Schur and power-sum bases.

``mult_p`` and ``skew_Dp`` act on Schur expansions through rimhook additions
and removals.  ``Dp_j`` means ``j * d/dp_j``, the adjoint of multiplication by
``p_j`` under the inner product making the Schur functions orthonormal.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial, prod
from numbers import Rational
from typing import ClassVar, Iterable, Mapping, Sequence

from . import jacobi_trudi
from .partitions import (
    Partition,
    add_cell,
    addable_cells,
    content,
    corner_cells,
    make_partition,
    partition_order_key,
    remove_cell,
    removable_pairs,
    rimhook_additions,
    rimhook_removals,
    weight,
)


def z_of(mu: Partition) -> int:
    """Centralizer order ``prod_j m_j! * j**m_j``."""
    return prod(factorial(m) * j**m for j, m in Counter(mu).items())


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Expansion:
    """Homogeneous linear combination of basis elements indexed by partitions."""

    basis: ClassVar[str] = ""
    degree: int
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, coeff in self.terms.items():
            lam = make_partition(lam)
            if weight(lam) != self.degree:
                raise ValueError(f"{lam} has weight {weight(lam)}, expected {self.degree}")
            coeff = Fraction(coeff)
            if coeff:
                clean[lam] = coeff
        object.__setattr__(
            self, "terms", dict(sorted(clean.items(), key=lambda kv: partition_order_key(kv[0])))
        )

    @classmethod
    def basis_element(cls, lam: Partition, coeff=1):
        return cls(weight(lam), {tuple(lam): Fraction(coeff)})

    @classmethod
    def zero(cls, degree: int):
        return cls(degree, {})

    def coefficient(self, lam: Partition) -> Fraction:
        return self.terms.get(tuple(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Expansion") -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {self.basis} and {other.basis} expansions")
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, 0) + c
        return type(self)(self.degree, terms)

    def __neg__(self):
        return type(self)(self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Rational)):
            return NotImplemented
        return type(self)(self.degree, {k: v * scalar for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, self.degree, tuple(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"0 [{self.basis}, degree {self.degree}]"
        sym = "s" if self.basis == "schur" else "p"
        pieces = []
        for lam, c in self.terms.items():
            idx = "(" + ",".join(map(str, lam)) + ")"
            pieces.append(f"{format_fraction(c)}*{sym}{idx}")
        return " + ".join(pieces).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [
                {"partition": list(lam), "coeff": format_fraction(c)}
                for lam, c in self.terms.items()
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


class SchurExpansion(Expansion):
    basis: ClassVar[str] = "schur"


class PowerExpansion(Expansion):
    basis: ClassVar[str] = "power"


def loads_expansion(text: str | dict) -> Expansion:
    data = json.loads(text) if isinstance(text, str) else text
    cls = {"schur": SchurExpansion, "power": PowerExpansion}[data["basis"]]
    terms = {tuple(t["partition"]): Fraction(t["coeff"]) for t in data["terms"]}
    return cls(int(data["degree"]), terms)


def s(*parts: int) -> SchurExpansion:
    return SchurExpansion.basis_element(make_partition(parts))


def p(*parts: int) -> PowerExpansion:
    return PowerExpansion.basis_element(make_partition(sorted(parts, reverse=True)))


def _accumulate(terms: dict, lam: Partition, amount) -> None:
    terms[lam] = terms.get(lam, 0) + amount


def mult_p(f: SchurExpansion, j: int) -> SchurExpansion:
    """``p_j * f`` via signed rimhook additions."""
    if j < 1:
        raise ValueError("j must be positive")
    out: dict[Partition, Fraction] = {}
    for lam, coeff in f.terms.items():
        for nu, height in rimhook_additions(lam, j):
            _accumulate(out, nu, coeff if height % 2 == 0 else -coeff)
    return SchurExpansion(f.degree + j, out)


def skew_Dp(f: SchurExpansion, j: int) -> SchurExpansion:
    """``Dp_j f`` via signed rimhook removals."""
    if j < 1:
        raise ValueError("j must be positive")
    out: dict[Partition, Fraction] = {}
    for lam, coeff in f.terms.items():
        for nu, height in rimhook_removals(lam, j):
            _accumulate(out, nu, coeff if height % 2 == 0 else -coeff)
    # below degree j nothing is removable; keep a non-negative degree on the zero
    return SchurExpansion(max(f.degree - j, 0), out)


def _remove_then_add(lam: Partition, extra: int, added_shift: int) -> SchurExpansion:
    """``sum_{j>=1} p_{j+added_shift} Dp_{j+extra} s_lam`` truncated where removals stop."""
    n = weight(lam)
    degree = n - extra + added_shift
    total = SchurExpansion.zero(degree)
    base = SchurExpansion.basis_element(lam)
    for j in range(1, n - extra + 1):
        removed = skew_Dp(base, j + extra)
        if removed.is_zero():
            continue
        total = total + mult_p(removed, j + added_shift)
    return total


@cache
def lhs_eq3(lam: Partition) -> SchurExpansion:
    """``sum_j p_j Dp_{j+1} s_lam``."""
    if weight(lam) < 1:
        raise ValueError("lambda must be non-empty")
    return _remove_then_add(lam, 1, 0)


def rhs_eq3(lam: Partition) -> SchurExpansion:
    """``sum over corners x of c(x) s_{lam - x}``."""
    if weight(lam) < 1:
        raise ValueError("lambda must be non-empty")
    out: dict[Partition, int] = {}
    for x in corner_cells(lam):
        _accumulate(out, remove_cell(lam, x), content(x))
    return SchurExpansion(weight(lam) - 1, out)


@cache
def lhs_eq6(lam: Partition) -> SchurExpansion:
    """``sum_j p_j Dp_{j+2} s_lam``."""
    if weight(lam) < 2:
        raise ValueError("lambda must have weight at least 2")
    return _remove_then_add(lam, 2, 0)


def rhs_eq6(lam: Partition) -> SchurExpansion:
    """``sum over removable pairs of pair_content * s_{lam - (x,y)}``."""
    out: dict[Partition, int] = {}
    for pair in removable_pairs(lam):
        _accumulate(out, pair.remainder, pair.pair_content)
    return SchurExpansion(weight(lam) - 2, out)


@cache
def lhs_t3(lam: Partition) -> SchurExpansion:
    """``sum_j p_{j+1} Dp_j s_lam``."""
    return _remove_then_add(lam, 0, 1)


def rhs_t3(lam: Partition) -> SchurExpansion:
    """``sum over addable x of c(x) s_{lam + x}``."""
    out: dict[Partition, int] = {}
    for x in addable_cells(lam):
        _accumulate(out, add_cell(lam, x), content(x))
    return SchurExpansion(weight(lam) + 1, out)


# power-sum side: p_mu is a monomial in the p_j, so these are plain calculus

def power_mult_p(f: PowerExpansion, j: int) -> PowerExpansion:
    out: dict[Partition, Fraction] = {}
    for mu, coeff in f.terms.items():
        _accumulate(out, tuple(sorted(mu + (j,), reverse=True)), coeff)
    return PowerExpansion(f.degree + j, out)


def power_Dp(f: PowerExpansion, j: int) -> PowerExpansion:
    """``j * d/dp_j``."""
    out: dict[Partition, Fraction] = {}
    for mu, coeff in f.terms.items():
        m = mu.count(j)
        if m:
            rest = list(mu)
            rest.remove(j)
            _accumulate(out, tuple(rest), coeff * j * m)
    return PowerExpansion(max(f.degree - j, 0), out)


def evaluate(f: Expansion, point: Sequence) -> Fraction:
    """Value of ``f`` as a polynomial in ``len(point)`` variables."""
    if len(point) < 1:
        raise ValueError("point needs at least one coordinate")
    xs = [Fraction(x) for x in point]
    value = jacobi_trudi.schur_value if isinstance(f, SchurExpansion) else jacobi_trudi.power_value
    return sum((c * value(lam, xs) for lam, c in f.terms.items()), Fraction(0))


def schur_inner(f: SchurExpansion, g: SchurExpansion) -> Fraction:
    """Hall inner product read off Schur coefficients."""
    return sum((c * g.coefficient(lam) for lam, c in f.terms.items()), Fraction(0))


def sum_expansions(items: Iterable[Expansion], zero: Expansion) -> Expansion:
    total = zero
    for item in items:
        total = total + item
    return total
