"""Integer partitions, Young diagrams, and diagonal hook coordinates.

A partition is a weakly decreasing tuple of positive integers, pictured as a
left-justified Young diagram (English convention, row 1 on top).  Trailing
zeros are stripped on construction, so ``(3, 2, 0)`` and ``(3, 2)`` denote the
same value; the empty partition is the unique partition of weight 0.

Rows and columns are 1-based in every public signature.  All values are
immutable and hashable, safe to share across threads and to memoize on.

The diagonal hook coordinates of a partition of diagonal rank r are the arm
lengths ``a_i = lambda_i - i + 1`` and leg lengths ``b_i = lambda'_i - i + 1``
of the i-th diagonal box, both counting the box itself.  They are strictly
decreasing positive sequences and determine the partition:
``weight = sum(a_i + b_i) - r``.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "Partition",
    "HookNotation",
    "partitions_of",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Orders lexicographically on parts, which is only used to make listings
    deterministic; it is not dominance order.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(operator.index(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {p} in {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of ``str``: ``"4,4,2,1"`` -> Partition((4, 4, 2, 1))."""
        text = text.strip()
        if not text:
            return cls()
        return cls(tuple(int(tok) for tok in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the diagram: ``lambda'_i = #{t : lambda_t >= i}``."""
        if not self.parts:
            return Partition()
        return Partition(
            tuple(
                sum(1 for p in self.parts if p >= i)
                for i in range(1, self.parts[0] + 1)
            )
        )

    def diagonal_rank(self) -> int:
        """Side of the biggest square fitting inside the diagram."""
        rank = 0
        for i, p in enumerate(self.parts, start=1):
            if p < i:
                break
            rank = i
        return rank

    def contains_box(self, i: int, j: int) -> bool:
        """Whether box (i, j) lies in the diagram (1-based)."""
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def hook_length(self, i: int, j: int) -> int:
        """Boxes in the arm and leg of box (i, j), the box counted once.

        Equals ``lambda_i - j + lambda'_j - i + 1``.
        """
        if not self.contains_box(i, j):
            raise ValueError(f"box ({i}, {j}) is outside the diagram of {self}")
        col = sum(1 for p in self.parts if p >= j)
        return self.parts[i - 1] - j + col - i + 1

    def to_hook_notation(self) -> "HookNotation":
        """Diagonal arm/leg coordinates; rejects the empty partition."""
        rank = self.diagonal_rank()
        if rank == 0:
            raise ValueError("the empty partition has no diagonal box")
        conj = self.conjugate().parts
        arms = tuple(self.parts[i] - i for i in range(rank))
        legs = tuple(conj[i] - i for i in range(rank))
        return HookNotation(arms, legs)

    def diagram(self) -> str:
        """ASCII Young diagram, one row of ``#`` per part."""
        return "\n".join("#" * p for p in self.parts)


@dataclass(frozen=True)
class HookNotation:
    """Arm/leg lengths ``(a_1,...,a_r | b_1,...,b_r)`` of the diagonal boxes."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        arms = tuple(operator.index(a) for a in self.arms)
        legs = tuple(operator.index(b) for b in self.legs)
        if len(arms) != len(legs) or not arms:
            raise ValueError("arms and legs must be nonempty sequences of equal length")
        for seq, name in ((arms, "arms"), (legs, "legs")):
            if seq[-1] <= 0:
                raise ValueError(f"{name} must be positive, got {seq}")
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError(f"{name} must be strictly decreasing, got {seq}")
        object.__setattr__(self, "arms", arms)
        object.__setattr__(self, "legs", legs)

    @property
    def rank(self) -> int:
        return len(self.arms)

    @property
    def weight(self) -> int:
        return sum(self.arms) + sum(self.legs) - self.rank

    @classmethod
    def parse(cls, text: str) -> "HookNotation":
        """Inverse of ``str``: ``"4,3|4,2"``."""
        arm_text, _, leg_text = text.partition("|")
        return cls(
            tuple(int(tok) for tok in arm_text.split(",")),
            tuple(int(tok) for tok in leg_text.split(",")),
        )

    def __str__(self) -> str:
        return "{}|{}".format(
            ",".join(str(a) for a in self.arms),
            ",".join(str(b) for b in self.legs),
        )

    def to_partition(self) -> Partition:
        """Rebuild the partition: row i is ``a_i + i - 1`` for i <= r, and the
        rows below the diagonal square are read off the column lengths
        ``b_j + j - 1``."""
        rank = self.rank
        rows = [self.arms[i] + i for i in range(rank)]
        col_lengths = [self.legs[j] + j for j in range(rank)]
        for i in range(rank + 1, col_lengths[0] + 1):
            rows.append(sum(1 for c in col_lengths if c >= i))
        return Partition(tuple(rows))


def partitions_of(
    weight: int,
    *,
    max_parts: int | None = None,
    max_part: int | None = None,
) -> Iterator[Partition]:
    """Yield the partitions of ``weight``, optionally bounded in length and
    part size, in decreasing lexicographic order.

    ``partitions_of(0)`` yields exactly the empty partition.
    """
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    limit_parts = weight if max_parts is None else max_parts
    limit_part = weight if max_part is None else max_part

    def rec(w: int, k: int, cap: int) -> Iterator[tuple[int, ...]]:
        if w == 0:
            yield ()
            return
        if k <= 0 or cap <= 0:
            return
        lo = -(-w // k)  # smallest feasible leading part
        for first in range(min(w, cap), lo - 1, -1):
            for rest in rec(w - first, k - 1, first):
                yield (first, *rest)

    for parts in rec(weight, limit_parts, limit_part):
        yield Partition(parts)
