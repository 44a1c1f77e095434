"""Graded Betti tables of generic symmetric determinantal rings.

The ring under study is the polynomial ring in the n(n+1)/2 entries of a
generic symmetric n x n matrix, modulo the ideal of its minors of size t+1,
over a field of characteristic 0.  Every term of the minimal free resolution
decomposes into Schur modules, and the contributing shapes admit a direct
construction: pick a half-rank u >= 1 and a seed partition with at most 2u
parts, take 2u rows of length seed part plus 2u + t - 1, and append the
conjugate of the seed below.  The shape contributes to homological index
2u^2 - u + |seed| in internal degree 2u^2 + u(t-1) + |seed|, which is half
the weight of the shape.

`enumerate_terms` produces the terms of one homological index by that
construction, `betti_table` assembles the whole table, and the remaining
functions read ring invariants off the table.  `enumerate_shapes_oracle` is
an independent brute-force characterization of the same shapes, used for
cross-validation: among all partitions of a given weight, the contributing
ones are exactly those of even diagonal rank whose diagonal arm lengths
exceed the leg lengths by t - 1.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from math import comb

from . import schur
from .partitions import Partition, partitions_of
from .schur import OracleCapExceeded

__all__ = [
    "RingParams",
    "ResolutionTerm",
    "BettiTable",
    "enumerate_terms",
    "enumerate_shapes",
    "enumerate_shapes_oracle",
    "betti_table",
    "last_two_closed_form",
    "projective_dimension",
    "a_invariant_symmetric",
    "is_level",
    "DEFAULT_FILTER_CAP",
]

DEFAULT_FILTER_CAP = 24


@dataclass(frozen=True)
class RingParams:
    """Size n of the symmetric matrix and minor-size parameter t, 0 < t < n."""

    n: int
    t: int

    def __post_init__(self) -> None:
        n = operator.index(self.n)
        t = operator.index(self.t)
        if not 0 < t < n:
            raise ValueError(f"need 0 < t < n, got n={n}, t={t}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "t", t)

    @property
    def num_vars(self) -> int:
        """Number of matrix entries, n(n+1)/2."""
        return self.n * (self.n + 1) // 2

    @property
    def dim(self) -> int:
        """Krull dimension of the quotient ring, nt - t(t-1)/2."""
        return self.n * self.t - self.t * (self.t - 1) // 2


@dataclass(frozen=True)
class ResolutionTerm:
    """One Schur-module summand of a resolution term.

    half_rank is half the diagonal rank of the shape; degree is the internal
    degree, always half the weight of the shape.
    """

    shape: Partition
    half_rank: int
    hom_index: int
    degree: int
    rank: int

    def __post_init__(self) -> None:
        if self.shape.diagonal_rank() != 2 * self.half_rank:
            raise ValueError(f"{self.shape} does not have diagonal rank {2 * self.half_rank}")
        if 2 * self.degree != self.shape.weight:
            raise ValueError("internal degree must be half the shape weight")
        if self.rank <= 0:
            raise ValueError("zero-rank terms are never stored")


def _assemble_shape(seed: Partition, u: int, t: int) -> Partition:
    padded = list(seed.parts) + [0] * (2 * u - len(seed.parts))
    head = tuple(p + 2 * u + t - 1 for p in padded)
    return Partition(head + seed.conjugate().parts)


def projective_dimension(params: RingParams) -> int:
    """Length of the minimal free resolution: (n-t)(n-t+1)/2."""
    return params.num_vars - params.dim


def enumerate_terms(params: RingParams, hom_index: int) -> list[ResolutionTerm]:
    """All summands of the resolution term at one homological index >= 1.

    For each half-rank u with 2u^2 - u <= hom_index, the seeds are the
    partitions of hom_index - (2u^2 - u) with at most 2u parts, capped at
    n - 2u - t + 1 so the assembled first row stays within n (larger rows
    give rank-zero summands).  Sorted by degree, then by shape.
    """
    if hom_index < 1:
        raise ValueError("homological index must be positive")
    n, t = params.n, params.t
    terms = []
    u = 1
    while 2 * u * u - u <= hom_index:
        seed_weight = hom_index - (2 * u * u - u)
        cap = n - 2 * u - t + 1
        if cap >= 0:
            for seed in partitions_of(seed_weight, max_parts=2 * u, max_part=cap):
                shape = _assemble_shape(seed, u, t)
                terms.append(
                    ResolutionTerm(
                        shape=shape,
                        half_rank=u,
                        hom_index=hom_index,
                        degree=2 * u * u + u * (t - 1) + seed.weight,
                        rank=schur.schur_rank(shape, n),
                    )
                )
        u += 1
    terms.sort(key=lambda term: (term.degree, term.shape.parts))
    return terms


def enumerate_shapes(t: int, weight: int) -> list[Partition]:
    """All shapes of the given weight the construction can emit, for any n.

    The matrix-size cutoff is deliberately ignored here; this is the
    constructive side of the cross-validation pair.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if weight < 1:
        raise ValueError("weight must be positive")
    if weight % 2:
        return []
    half = weight // 2
    shapes = []
    u = 1
    while 2 * u * u + u * (t - 1) <= half:
        seed_weight = half - (2 * u * u + u * (t - 1))
        for seed in partitions_of(seed_weight, max_parts=2 * u):
            shapes.append(_assemble_shape(seed, u, t))
        u += 1
    shapes.sort(key=lambda shape: shape.parts)
    return shapes


def enumerate_shapes_oracle(
    t: int, weight: int, cap: int = DEFAULT_FILTER_CAP
) -> list[Partition]:
    """Brute-force counterpart of `enumerate_shapes`: filter all partitions
    of the given weight for even diagonal rank and arm lengths exceeding leg
    lengths by exactly t - 1 at every diagonal box.

    Exhaustive over all partitions of the weight, so weights above ``cap``
    are rejected outright.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if weight < 1:
        raise ValueError("weight must be positive")
    if weight > cap:
        raise OracleCapExceeded(f"weight {weight} is above the cap of {cap}")
    if weight % 2:
        return []
    shapes = []
    for shape in partitions_of(weight):
        if shape.diagonal_rank() % 2:
            continue
        hook = shape.to_hook_notation()
        if all(a == b + t - 1 for a, b in zip(hook.arms, hook.legs)):
            shapes.append(shape)
    shapes.sort(key=lambda s: s.parts)
    return shapes


@dataclass(frozen=True)
class BettiTable:
    """Exact graded Betti numbers, kept with their contributing shapes.

    terms holds every summand with homological index >= 1; index 0 is the
    ring itself, rank one in degree zero, and is added by the accessors.
    """

    params: RingParams
    terms: tuple[ResolutionTerm, ...]

    @property
    def projdim(self) -> int:
        return projective_dimension(self.params)

    def entries(self) -> dict[tuple[int, int], int]:
        """Map (homological index, internal degree) -> multiplicity."""
        out: dict[tuple[int, int], int] = {(0, 0): 1}
        for term in self.terms:
            key = (term.hom_index, term.degree)
            out[key] = out.get(key, 0) + term.rank
        return out

    def betti_numbers(self) -> tuple[int, ...]:
        """Total Betti numbers for homological indices 0..projdim."""
        totals = [0] * (self.projdim + 1)
        totals[0] = 1
        for term in self.terms:
            totals[term.hom_index] += term.rank
        return tuple(totals)

    def alternating_sum(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti_numbers()))

    @property
    def a_invariant(self) -> int:
        """Top internal degree of the last term minus the number of variables."""
        top = max(m for i, m in self.entries() if i == self.projdim)
        return top - self.params.num_vars

    @property
    def is_level(self) -> bool:
        """Whether the last term is concentrated in a single internal degree."""
        degrees = {m for i, m in self.entries() if i == self.projdim}
        return len(degrees) == 1

    @property
    def cm_type(self) -> int:
        """Rank of the last resolution term; 1 means Gorenstein."""
        return self.betti_numbers()[-1]

    def to_json_dict(self) -> dict:
        """Schema: {"n", "t", "char", "projdim", "entries"}, entries sorted by
        (index, degree) with ranks as decimal strings."""
        entries = [{"i": 0, "degree": 0, "rank": "1", "partitions": []}]
        grouped: dict[tuple[int, int], list[ResolutionTerm]] = {}
        for term in self.terms:
            grouped.setdefault((term.hom_index, term.degree), []).append(term)
        for (i, m) in sorted(grouped):
            group = sorted(grouped[(i, m)], key=lambda term: term.shape.parts)
            entries.append(
                {
                    "i": i,
                    "degree": m,
                    "rank": str(sum(term.rank for term in group)),
                    "partitions": [str(term.shape) for term in group],
                }
            )
        return {
            "n": self.params.n,
            "t": self.params.t,
            "char": "0",
            "projdim": self.projdim,
            "entries": entries,
        }

    def render_text(self) -> str:
        """Betti diagram: columns are homological indices, rows are
        degree minus index, with a totals row at the bottom."""
        cells = self.entries()
        top_slope = max(m - i for i, m in cells)
        cols = range(self.projdim + 1)
        grid = [
            ["." if (i, i + slope) not in cells else str(cells[(i, i + slope)]) for i in cols]
            for slope in range(top_slope + 1)
        ]
        header = [str(i) for i in cols]
        totals = [str(b) for b in self.betti_numbers()]
        widths = [
            max(len(header[i]), len(totals[i]), max(len(row[i]) for row in grid))
            for i in cols
        ]
        label_width = max(len("total:"), len(f"{top_slope}:"))

        def line(label: str, values: list[str]) -> str:
            body = "  ".join(v.rjust(w) for v, w in zip(values, widths))
            return f"{label.ljust(label_width)}  {body}".rstrip()

        lines = [line("", header)]
        lines.extend(line(f"{slope}:", row) for slope, row in enumerate(grid))
        lines.append(line("total:", totals))
        return "\n".join(lines)


def betti_table(params: RingParams) -> BettiTable:
    """Assemble the full table by enumerating every homological index."""
    terms: list[ResolutionTerm] = []
    for i in range(1, projective_dimension(params) + 1):
        terms.extend(enumerate_terms(params, i))
    return BettiTable(params=params, terms=tuple(terms))


def last_two_closed_form(params: RingParams) -> tuple[int, int]:
    """Ranks of the last and second-to-last resolution terms in the
    non-Gorenstein case n - t even: binomial(n,t) and
    n*binomial(n,t+1) - binomial(n,t+2)."""
    n, t = params.n, params.t
    if (n - t) % 2:
        raise ValueError(
            f"n - t = {n - t} is odd, so the ring is Gorenstein and the last "
            "rank is 1; the closed-form pair applies only to even n - t"
        )
    return comb(n, t), n * comb(n, t + 1) - comb(n, t + 2)


def a_invariant_symmetric(params: RingParams) -> int:
    """a-invariant read from the resolution: top degree at the last index
    minus the number of variables."""
    return betti_table(params).a_invariant


def is_level(params: RingParams) -> bool:
    """Whether the last resolution term sits in a single internal degree."""
    return betti_table(params).is_level
