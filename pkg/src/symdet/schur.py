"""Ranks of Schur modules in the exterior-power convention.

``schur_rank(shape, n)`` is the rank of the Schur module attached to
``shape`` on a free module of rank n, built from exterior powers: columns of
the diagram index wedge factors, so the rank equals the number of
semistandard tableaux of the conjugate shape with entries in 1..n.  It
vanishes exactly when the first part of ``shape`` exceeds n.

The closed form used is the hook content formula applied to the conjugate
shape, evaluated in exact integer arithmetic.  ``ssyt_count`` is a separate
brute-force tableau enumerator kept around as an independent check; it is
deliberately naive and refuses shapes beyond a small box budget.
"""

from __future__ import annotations

from functools import lru_cache
from math import prod

from .partitions import Partition

__all__ = ["schur_rank", "ssyt_count", "OracleCapExceeded", "DEFAULT_ORACLE_CAP"]

DEFAULT_ORACLE_CAP = 14


class OracleCapExceeded(ValueError):
    """Raised when a brute-force check is asked to exceed its box budget."""


@lru_cache(maxsize=None)
def schur_rank(shape: Partition, n: int) -> int:
    """Rank of the Schur module of ``shape`` on a rank-n free module.

    Exact for any size; returns 0 iff ``shape`` has a part larger than n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not shape.parts:
        return 1
    if shape.parts[0] > n:
        return 0
    conj = shape.conjugate()
    cols = conj.conjugate().parts  # column lengths of conj, i.e. shape.parts
    num = 1
    den = 1
    for i, row_len in enumerate(conj.parts, start=1):
        for j in range(1, row_len + 1):
            num *= n + j - i
            den *= row_len - j + cols[j - 1] - i + 1
    if num % den:
        raise ArithmeticError("hook content product failed to divide")
    return num // den


def ssyt_count(shape: Partition, n: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Count semistandard tableaux of ``shape`` with entries in 1..n by
    explicit enumeration.

    Rows weakly increase, columns strictly increase.  Exponential in the box
    count, so shapes with more than ``cap`` boxes are rejected rather than
    allowed to stall.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    boxes = shape.weight
    if boxes > cap:
        raise OracleCapExceeded(
            f"shape {shape} has {boxes} boxes, above the cap of {cap}"
        )
    if not shape.parts:
        return 1
    if n == 0:
        return 0
    rows = shape.parts

    def fill(i: int, j: int, current: list[list[int]]) -> int:
        if i == len(rows):
            return 1
        ni, nj = (i, j + 1) if j + 1 < rows[i] else (i + 1, 0)
        lo = current[i][j - 1] if j else 1
        if i and j < rows[i - 1]:
            lo = max(lo, current[i - 1][j] + 1)
        total = 0
        for val in range(lo, n + 1):
            current[i][j] = val
            total += fill(ni, nj, current)
        return total

    return fill(0, 0, [[0] * r for r in rows])
