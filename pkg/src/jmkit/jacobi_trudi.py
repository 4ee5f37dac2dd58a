"""Evaluate Schur and power-sum polynomials at a rational point.

Schur values come from the Jacobi-Trudi determinant ``det(h_{lam_i - i + j})``
with complete homogeneous values built by the generating-function recurrence.
This shares no code with the rimhook machinery, which is the point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .partitions import Partition


def complete_homogeneous(degree: int, point: Sequence[Fraction]) -> list[Fraction]:
    """``[h_0, ..., h_degree]`` at ``point``.

    Adds one variable at a time: ``h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)``.
    """
    h = [Fraction(1)] + [Fraction(0)] * degree
    for x in point:
        for k in range(1, degree + 1):
            h[k] += x * h[k - 1]
    return h


def determinant(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    m = [row[:] for row in matrix]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, size):
                    m[r][c] -= factor * m[col][c]
    return det


def schur_value(lam: Partition, point: Sequence[Fraction]) -> Fraction:
    if len(lam) > len(point):
        return Fraction(0)
    k = len(lam)
    if k == 0:
        return Fraction(1)
    h = complete_homogeneous(lam[0] + k, point)

    def hv(d: int) -> Fraction:
        return h[d] if d >= 0 else Fraction(0)

    return determinant([[hv(lam[i] - i + j) for j in range(k)] for i in range(k)])


def power_value(mu: Partition, point: Sequence[Fraction]) -> Fraction:
    out = Fraction(1)
    for part in mu:
        out *= sum((x**part for x in point), Fraction(0))
    return out
