"""Exact two-sided checks of the content identities for Jucys-Murphy sums.

Each left side is computed by building the group-algebra element and reading
characters off cycle types; each right side comes from cell contents (or
from the rimhook operators for the symmetric-function forms).
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .characters import check_guard, chi, dimension
from .partitions import (
    Cell,
    Partition,
    add_cell,
    addable_cells,
    cells,
    content,
    corner_cells,
    make_partition,
    partitions_of,
    remove_cell,
    removable_pairs,
    rimhook_additions,
    rimhook_removals,
    weight,
)
from .permutations import (
    build_R,
    build_T,
    build_V,
    cycle_type,
    drop_ones,
    eval_class_function,
    representative,
)
from .symfunc import (
    Expansion,
    SchurExpansion,
    format_fraction,
    lhs_eq3,
    lhs_eq6,
    lhs_t3,
    mult_p,
    rhs_eq3,
    rhs_eq6,
    rhs_t3,
    skew_Dp,
)

IDENTITIES = (
    "T1", "EQ2", "T2", "T3", "EQ8", "EQ9",
    "EQ3", "EQ4", "EQ6", "T3_SYM", "LEMMA_ADJ", "PAIR_CANCEL",
)


@dataclass
class VerificationRecord:
    identity: str
    n: int
    inputs: dict[str, Any]
    lhs: Any
    rhs: Any
    ok: bool
    elapsed: float = 0.0
    note: str | None = None

    def to_json(self, stable: bool = False) -> dict:
        out: dict[str, Any] = {"identity": self.identity, "n": self.n}
        for key, value in self.inputs.items():
            out[key] = list(value) if isinstance(value, tuple) else value
        out["lhs"] = _value_json(self.lhs)
        out["rhs"] = _value_json(self.rhs)
        out["ok"] = self.ok
        if self.note:
            out["note"] = self.note
        if not stable:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    def dumps(self, stable: bool = False) -> str:
        return json.dumps(self.to_json(stable))


def _value_json(value):
    if isinstance(value, Expansion):
        return value.to_json()
    if isinstance(value, (int, Fraction)):
        return format_fraction(Fraction(value))
    return value


def _record(identity: str, n: int, inputs: dict, lhs, rhs, start: float,
            note: str | None = None) -> VerificationRecord:
    return VerificationRecord(identity, n, inputs, lhs, rhs, lhs == rhs,
                              time.perf_counter() - start, note)


def _check_weights(lam: Partition, typ: Partition, diff: int, what: str) -> None:
    if weight(lam) != weight(typ) + diff:
        raise ValueError(f"{what}: need |lambda| = |type| + {diff}, got {lam} and {typ}")


# group-algebra identities ------------------------------------------------

def verify_t1(lam: Partition, sigma_bar_type: Partition) -> VerificationRecord:
    start = time.perf_counter()
    _check_weights(lam, sigma_bar_type, 1, "T1")
    n = weight(lam)
    sigma = representative(sigma_bar_type, n)
    lhs = eval_class_function(build_R(sigma), lam)
    rhs = sum(content(x) * chi(remove_cell(lam, x), sigma_bar_type) for x in corner_cells(lam))
    return _record("T1", n, {"lambda": lam, "type": sigma_bar_type}, lhs, rhs, start)


def verify_eq2(lam: Partition, sigma_bar_type: Partition) -> VerificationRecord:
    start = time.perf_counter()
    _check_weights(lam, sigma_bar_type, 1, "EQ2")
    n = weight(lam)
    sigma = representative(sigma_bar_type, n)
    # the i = n summand is sigma itself
    lhs = eval_class_function(build_R(sigma), lam) + chi(lam, cycle_type(sigma))
    rhs = sum((1 + content(x)) * chi(remove_cell(lam, x), sigma_bar_type)
              for x in corner_cells(lam))
    return _record("EQ2", n, {"lambda": lam, "type": sigma_bar_type}, lhs, rhs, start)


def verify_t2(lam: Partition, sigma_bar_type: Partition) -> VerificationRecord:
    start = time.perf_counter()
    _check_weights(lam, sigma_bar_type, 2, "T2")
    n = weight(lam)
    sigma = representative(sigma_bar_type, n)
    lhs = eval_class_function(build_T(sigma), lam)
    rhs = sum(pair.pair_content * chi(pair.remainder, sigma_bar_type)
              for pair in removable_pairs(lam))
    return _record("T2", n, {"lambda": lam, "type": sigma_bar_type}, lhs, rhs, start)


def verify_t3(lam: Partition, sigma_type: Partition) -> VerificationRecord:
    start = time.perf_counter()
    _check_weights(lam, sigma_type, -1, "T3")
    n = weight(sigma_type)
    sigma = representative(sigma_type, n)
    lhs = eval_class_function(build_V(sigma), lam, drop_fixed_points=1)
    rhs = sum(content(x) * chi(add_cell(lam, x), sigma_type) for x in addable_cells(lam))
    return _record("T3", n, {"lambda": lam, "type": sigma_type}, lhs, rhs, start)


def verify_eq8(lam: Partition, sigma_type: Partition) -> VerificationRecord:
    start = time.perf_counter()
    _check_weights(lam, sigma_type, -1, "EQ8")
    n = weight(sigma_type)
    sigma = representative(sigma_type, n)
    lhs = eval_class_function(build_V(sigma), lam, drop_fixed_points=1)
    fixed = len(sigma.fixed_points())
    note = None
    if fixed:
        # sigma * (i i) = sigma, read in S_{n-1} by dropping the fixed point i
        lhs += fixed * chi(lam, drop_ones(sigma_type, 1))
        note = f"{fixed} fixed-point terms restricted to S_{n - 1}"
    rhs = sum((1 + content(x)) * chi(add_cell(lam, x), sigma_type) for x in addable_cells(lam))
    return _record("EQ8", n, {"lambda": lam, "type": sigma_type}, lhs, rhs, start, note)


def verify_eq9(lam: Partition) -> VerificationRecord:
    start = time.perf_counter()
    lhs = sum(dimension(add_cell(lam, x)) * content(x) for x in addable_cells(lam))
    return _record("EQ9", weight(lam) + 1, {"lambda": lam}, lhs, 0, start)


# symmetric-function identities -----------------------------------------

def verify_eq3(lam: Partition) -> VerificationRecord:
    start = time.perf_counter()
    return _record("EQ3", weight(lam), {"lambda": lam}, lhs_eq3(lam), rhs_eq3(lam), start)


def verify_eq6(lam: Partition) -> VerificationRecord:
    start = time.perf_counter()
    return _record("EQ6", weight(lam), {"lambda": lam}, lhs_eq6(lam), rhs_eq6(lam), start)


def verify_t3_sym(lam: Partition) -> VerificationRecord:
    start = time.perf_counter()
    return _record("T3_SYM", weight(lam) + 1, {"lambda": lam}, lhs_t3(lam), rhs_t3(lam), start)


def verify_lemma_adj(mu: Partition, j: int) -> VerificationRecord:
    """Collects ``<p_j s_lam, s_mu>`` over all ``lam`` and compares with ``Dp_j s_mu``."""
    start = time.perf_counter()
    n = weight(mu)
    lhs_terms = {}
    for lam in partitions_of(n - j):
        coeff = mult_p(SchurExpansion.basis_element(lam), j).coefficient(mu)
        if coeff:
            lhs_terms[lam] = coeff
    lhs = SchurExpansion(n - j, lhs_terms)
    rhs = skew_Dp(SchurExpansion.basis_element(mu), j)
    return _record("LEMMA_ADJ", n, {"mu": mu, "j": j}, lhs, rhs, start)


@dataclass(frozen=True)
class Path:
    """One way to reach ``zeta`` by removing a (j+1)-rimhook then adding a j-rimhook."""

    j: int
    nu: Partition
    height_removed: int
    height_added: int

    @property
    def sign(self) -> int:
        return (-1) ** (self.height_removed + self.height_added)


def remove_add_paths(lam: Partition, zeta: Partition, extra: int = 1) -> list[Path]:
    out = []
    for j in range(1, weight(lam) - extra + 1):
        for nu, h_rem in rimhook_removals(lam, j + extra):
            for target, h_add in rimhook_additions(nu, j):
                if target == zeta:
                    out.append(Path(j, nu, h_rem, h_add))
    return out


def verify_eq4_coefficient(lam: Partition, zeta: Partition) -> VerificationRecord:
    start = time.perf_counter()
    lam, zeta = make_partition(lam), make_partition(zeta)
    if weight(zeta) != weight(lam) - 1:
        raise ValueError("need |zeta| = |lambda| - 1")
    lhs = sum(path.sign for path in remove_add_paths(lam, zeta))
    rhs = 0
    for x in corner_cells(lam):
        if remove_cell(lam, x) == zeta:
            rhs = content(x)
    return _record("EQ4", weight(lam), {"lambda": lam, "zeta": zeta}, lhs, rhs, start)


@dataclass(frozen=True)
class Way:
    j: int
    nu: Partition
    sign_removed: int
    sign_added: int
    d: int  # rows with cells deleted and not replaced
    a: int  # rows with cells added that were never deleted
    r: int  # rows with cells deleted and then replaced

    @property
    def net_sign(self) -> int:
        return self.sign_removed * self.sign_added


@dataclass(frozen=True)
class CancellationReport:
    lam: Partition
    zeta: Partition
    ways: tuple[Way, ...] = field(default_factory=tuple)

    @property
    def cancels(self) -> bool:
        return len(self.ways) == 2 and self.ways[0].net_sign == -self.ways[1].net_sign


def _rows(cell_set: set[Cell]) -> int:
    return len({c.row for c in cell_set})


def analyze_pair_cancellation(lam: Partition, zeta: Partition) -> CancellationReport:
    """Enumerate the remove-then-add ways from ``lam`` to ``zeta`` with row counts."""
    lam, zeta = make_partition(lam), make_partition(zeta)
    if weight(zeta) != weight(lam) - 1:
        raise ValueError("need |zeta| = |lambda| - 1")
    if any(remove_cell(lam, x) == zeta for x in corner_cells(lam)):
        raise ValueError(f"{zeta} is lambda minus a corner; no cancellation to analyze")
    lam_cells, zeta_cells = set(cells(lam)), set(cells(zeta))
    ways = []
    for path in remove_add_paths(lam, zeta):
        nu_cells = set(cells(path.nu))
        removed = lam_cells - nu_cells
        added = zeta_cells - nu_cells
        ways.append(Way(
            path.j, path.nu,
            (-1) ** path.height_removed, (-1) ** path.height_added,
            d=_rows(removed - added), a=_rows(added - removed), r=_rows(removed & added),
        ))
    return CancellationReport(lam, zeta, tuple(ways))


def verify_pair_cancel(lam: Partition, zeta: Partition) -> VerificationRecord:
    start = time.perf_counter()
    report = analyze_pair_cancellation(lam, zeta)
    lhs = sum(w.net_sign for w in report.ways)
    rec = _record("PAIR_CANCEL", weight(lam), {"lambda": lam, "zeta": zeta}, lhs, 0, start,
                  note=";".join(f"j={w.j},d={w.d},a={w.a},r={w.r},sign={w.net_sign:+d}"
                                for w in report.ways))
    rec.ok = rec.ok and report.cancels
    return rec


# sweeps -------------------------------------------------------------------

_CHECKS = {
    "T1": verify_t1, "EQ2": verify_eq2, "T2": verify_t2, "T3": verify_t3,
    "EQ8": verify_eq8, "EQ9": verify_eq9, "EQ3": verify_eq3, "EQ4": verify_eq4_coefficient,
    "EQ6": verify_eq6, "T3_SYM": verify_t3_sym, "LEMMA_ADJ": verify_lemma_adj,
    "PAIR_CANCEL": verify_pair_cancel,
}


def _reachable_non_corner(lam: Partition) -> list[Partition]:
    corners = {remove_cell(lam, x) for x in corner_cells(lam)}
    return [z for z in partitions_of(weight(lam) - 1)
            if z not in corners and remove_add_paths(lam, z)]


def sweep_inputs(identity: str, n: int) -> list[tuple]:
    """Every admissible argument tuple for ``identity`` at size ``n``."""
    if n < 1:
        return []
    if identity in ("T1", "EQ2"):
        return [(lam, t) for lam in partitions_of(n) for t in partitions_of(n - 1)]
    if identity == "T2":
        return [] if n < 2 else [(lam, t) for lam in partitions_of(n) for t in partitions_of(n - 2)]
    if identity in ("T3", "EQ8"):
        return [(lam, t) for lam in partitions_of(n - 1) for t in partitions_of(n)]
    if identity in ("EQ9", "T3_SYM"):
        return [(lam,) for lam in partitions_of(n - 1)]
    if identity == "EQ3":
        return [(lam,) for lam in partitions_of(n)]
    if identity == "EQ6":
        return [] if n < 2 else [(lam,) for lam in partitions_of(n)]
    if identity == "EQ4":
        return [(lam, z) for lam in partitions_of(n) for z in partitions_of(n - 1)]
    if identity == "LEMMA_ADJ":
        return [(mu, j) for mu in partitions_of(n) for j in range(1, n + 1)]
    if identity == "PAIR_CANCEL":
        return [(lam, z) for lam in partitions_of(n) for z in _reachable_non_corner(lam)]
    raise ValueError(f"unknown identity {identity!r}")


def run_check(identity: str, args: Sequence) -> VerificationRecord:
    return _CHECKS[identity](*args)


def _run_batch(batch: list[tuple[str, tuple]]) -> list[VerificationRecord]:
    return [run_check(identity, args) for identity, args in batch]


def sweep(n: int, suites: Iterable[str] = IDENTITIES, jobs: int = 1,
          guard: int | None = None, filters: dict[str, Partition] | None = None
          ) -> list[VerificationRecord]:
    """Run every requested identity over all admissible inputs at size ``n``.

    Returns failures first, otherwise in generation order; the order does not
    depend on ``jobs``.
    """
    check_guard(n, guard)
    suites = [s.upper() for s in suites]
    unknown = [s for s in suites if s not in _CHECKS]
    if unknown:
        raise ValueError(f"unknown identities: {unknown}")
    ordered = [s for s in IDENTITIES if s in suites]
    work = []
    for identity in ordered:
        for args in sweep_inputs(identity, n):
            if filters and not _matches(identity, args, filters):
                continue
            work.append((identity, args))
    if jobs > 1 and len(work) > 1:
        size = max(1, len(work) // (jobs * 4))
        batches = [work[i:i + size] for i in range(0, len(work), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [rec for chunk in pool.map(_run_batch, batches) for rec in chunk]
    else:
        records = _run_batch(work)
    return [r for r in records if not r.ok] + [r for r in records if r.ok]


_ARG_NAMES = {
    "T1": ("lambda", "type"), "EQ2": ("lambda", "type"), "T2": ("lambda", "type"),
    "T3": ("lambda", "type"), "EQ8": ("lambda", "type"), "EQ9": ("lambda",),
    "EQ3": ("lambda",), "EQ6": ("lambda",), "T3_SYM": ("lambda",),
    "EQ4": ("lambda", "zeta"), "PAIR_CANCEL": ("lambda", "zeta"), "LEMMA_ADJ": ("mu", "j"),
}


def _matches(identity: str, args: tuple, filters: dict) -> bool:
    named = dict(zip(_ARG_NAMES[identity], args))
    if "mu" in named and "lambda" in filters and "lambda" not in named:
        named["lambda"] = named["mu"]
    return all(named.get(key, value) == value for key, value in filters.items())


def summarize(records: Sequence[VerificationRecord], stable: bool = False,
              elapsed: float | None = None) -> dict:
    by_identity: dict[str, dict[str, int]] = {}
    for rec in records:
        slot = by_identity.setdefault(rec.identity, {"passed": 0, "failed": 0})
        slot["passed" if rec.ok else "failed"] += 1
    failures = [r for r in records if not r.ok]
    out = {
        "summary": True,
        "total": len(records),
        "passed": len(records) - len(failures),
        "failed": len(failures),
        "by_identity": {k: by_identity[k] for k in IDENTITIES if k in by_identity},
        "first_failure": failures[0].to_json(stable) if failures else None,
    }
    if not stable and elapsed is not None:
        out["elapsed_ms"] = round(elapsed * 1000, 3)
    return out
