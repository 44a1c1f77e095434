"""Cross-validation suites runnable from the command line.

Each check returns None on success or a message locating the first
counterexample.  Checks call through the public modules, so a defect
anywhere in the pipeline surfaces as a named failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import classify, resolution, schur
from .partitions import Partition, partitions_of
from .resolution import RingParams


@dataclass(frozen=True)
class VerifyOptions:
    n_max: int = 6
    t_max: int | None = None
    oracle_cap: int | None = None


def _grid(opts: VerifyOptions) -> Iterator[RingParams]:
    for n in range(2, opts.n_max + 1):
        top = n - 1 if opts.t_max is None else min(n - 1, opts.t_max)
        for t in range(1, top + 1):
            yield RingParams(n, t)


def check_partition_roundtrips(opts: VerifyOptions) -> str | None:
    # Exhaustive over weights <= 12: conjugation involution, rank symmetry,
    # hook-notation weight identity and roundtrip.
    for weight in range(13):
        for shape in partitions_of(weight):
            if shape.conjugate().conjugate() != shape:
                return f"conjugation is not an involution at {shape}"
            if shape.diagonal_rank() != shape.conjugate().diagonal_rank():
                return f"diagonal rank differs from the conjugate's at {shape}"
            if shape.parts:
                hook = shape.to_hook_notation()
                if hook.weight != weight:
                    return f"hook weight identity fails at {shape}"
                if hook.to_partition() != shape:
                    return f"hook roundtrip fails at {shape}"
    return None


def check_schur_ssyt_oracle(opts: VerifyOptions) -> str | None:
    w_max = 10 if opts.oracle_cap is None else min(10, opts.oracle_cap)
    cap = max(w_max, opts.oracle_cap or schur.DEFAULT_ORACLE_CAP)
    for weight in range(w_max + 1):
        for shape in partitions_of(weight):
            for n in range(1, 6):
                closed = schur.schur_rank(shape, n)
                counted = schur.ssyt_count(shape.conjugate(), n, cap=cap)
                if closed != counted:
                    return (
                        f"shape {shape}, n={n}: closed form {closed}, "
                        f"tableau count {counted}"
                    )
    return None


def check_schur_monotonicity(opts: VerifyOptions) -> str | None:
    for weight in range(9):
        for shape in partitions_of(weight):
            for n in range(7):
                if schur.schur_rank(shape, n) > schur.schur_rank(shape, n + 1):
                    return f"rank drops from n={n} to n={n + 1} at {shape}"
    return None


def check_shape_filter_oracle(opts: VerifyOptions) -> str | None:
    w_max = 16 if opts.oracle_cap is None else min(16, opts.oracle_cap)
    cap = max(w_max, resolution.DEFAULT_FILTER_CAP)
    for t in (1, 2, 3):
        for weight in range(2, w_max + 1, 2):
            built = resolution.enumerate_shapes(t, weight)
            filtered = resolution.enumerate_shapes_oracle(t, weight, cap=cap)
            if built != filtered:
                return f"construction and filter disagree at t={t}, weight={weight}"
    return None


def check_first_term(opts: VerifyOptions) -> str | None:
    # The resolution starts with the minors: one shape, two rows of t+1,
    # in internal degree t+1.
    for params in _grid(opts):
        shape = Partition((params.t + 1, params.t + 1))
        terms = resolution.enumerate_terms(params, 1)
        if len(terms) != 1 or terms[0].shape != shape:
            return f"unexpected first term at n={params.n}, t={params.t}"
        if terms[0].degree != params.t + 1:
            return f"first term off degree t+1 at n={params.n}, t={params.t}"
        if terms[0].rank != schur.schur_rank(shape, params.n):
            return f"first term rank mismatch at n={params.n}, t={params.t}"
    return None


def check_telescope(opts: VerifyOptions) -> str | None:
    for params in _grid(opts):
        total = resolution.betti_table(params).alternating_sum()
        if total != 0:
            return f"alternating sum {total} at n={params.n}, t={params.t}"
    return None


def check_closed_forms(opts: VerifyOptions) -> str | None:
    for params in _grid(opts):
        if (params.n - params.t) % 2:
            continue
        betti = resolution.betti_table(params).betti_numbers()
        last, prev = resolution.last_two_closed_form(params)
        if betti[-1] != last:
            return f"last rank {betti[-1]} != {last} at n={params.n}, t={params.t}"
        if betti[-2] != prev:
            return f"second-to-last rank {betti[-2]} != {prev} at n={params.n}, t={params.t}"
    return None


def check_gorenstein_type(opts: VerifyOptions) -> str | None:
    for params in _grid(opts):
        type_one = resolution.betti_table(params).cm_type == 1
        if type_one != ((params.n - params.t) % 2 == 1):
            return f"type-1 test disagrees with parity at n={params.n}, t={params.t}"
    return None


def check_last_shapes(opts: VerifyOptions) -> str | None:
    # Even n - t: the two top terms are single forced shapes of diagonal
    # rank n - t.
    for params in _grid(opts):
        n, t = params.n, params.t
        s = n - t
        if s % 2:
            continue
        ell = resolution.projective_dimension(params)
        last = resolution.enumerate_terms(params, ell)
        prev = resolution.enumerate_terms(params, ell - 1)
        if len(last) != 1 or last[0].shape != Partition((n,) * s + (s,)):
            return f"unexpected top term at n={n}, t={t}"
        if last[0].shape.diagonal_rank() != s:
            return f"top term rank is not n-t at n={n}, t={t}"
        if len(prev) != 1 or prev[0].shape != Partition((n,) * (s - 1) + (n - 1, s - 1)):
            return f"unexpected second-to-top term at n={n}, t={t}"
    return None


def check_obstruction_sweep(opts: VerifyOptions) -> str | None:
    for params in _grid(opts):
        if (params.n - params.t) % 2:
            continue
        report = classify.ag_obstruction(params)
        if report.passes != (report.sharp_lhs <= report.sharp_rhs):
            return f"bound forms disagree at n={params.n}, t={params.t}"
        if report.passes != ((params.n, params.t) == (3, 1)):
            return (
                f"obstruction verdict {report.passes} at n={params.n}, "
                f"t={params.t}: {report.lower_bound} vs {report.upper_bound}"
            )
    return None


def check_symmetric_ag_route(opts: VerifyOptions) -> str | None:
    # The direct classification must agree with the independent route:
    # Gorenstein, or level with a-invariant 1 - dim.
    for params in _grid(opts):
        verdict = classify.classify_symmetric(params)
        route = classify.gorenstein_symmetric(params) or (
            classify.ag_level_criterion(verdict.a_invariant, verdict.dim)
            and resolution.is_level(params)
        )
        if verdict.almost_gorenstein != route:
            return f"routes disagree at n={params.n}, t={params.t}"
    return None


def check_family_corollaries(opts: VerifyOptions) -> str | None:
    for n in range(1, opts.n_max + 1):
        for t in range(1, n + 1):
            verdict = classify.classify_hankel(n, t)
            if verdict.almost_gorenstein != (n == t or t == 2):
                return f"hankel verdict off at n={n}, t={t}"
            if verdict.gorenstein and not verdict.almost_gorenstein:
                return f"hankel gorenstein without almost at n={n}, t={t}"
    for n in range(3, 16, 2):
        verdict = classify.classify_pfaffian_square(n)
        betti = classify.pfaffian_square_betti(n)
        alternating = sum((-1) ** i * rank for i, (_, rank) in enumerate(betti))
        if alternating != 0:
            return f"pfaffian-square betti numbers do not telescope at n={n}"
        if verdict.almost_gorenstein != (n == 3):
            return f"pfaffian-square verdict off at n={n}"
        if verdict.gorenstein and not verdict.almost_gorenstein:
            return f"pfaffian-square gorenstein without almost at n={n}"
    return None


CHECKS: tuple[tuple[str, Callable[[VerifyOptions], str | None]], ...] = (
    ("partition-roundtrips", check_partition_roundtrips),
    ("schur-ssyt-oracle", check_schur_ssyt_oracle),
    ("schur-monotonicity", check_schur_monotonicity),
    ("shape-filter-oracle", check_shape_filter_oracle),
    ("first-term", check_first_term),
    ("telescope", check_telescope),
    ("closed-forms", check_closed_forms),
    ("gorenstein-type", check_gorenstein_type),
    ("last-shapes", check_last_shapes),
    ("obstruction-sweep", check_obstruction_sweep),
    ("symmetric-ag-route", check_symmetric_ag_route),
    ("family-corollaries", check_family_corollaries),
)


def run_checks(opts: VerifyOptions) -> list[tuple[str, str | None]]:
    return [(name, func(opts)) for name, func in CHECKS]
