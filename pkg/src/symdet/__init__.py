"""Exact Betti tables of generic symmetric determinantal rings and the
Gorenstein / almost Gorenstein classification of three ring families, by
pure partition combinatorics."""

from .classify import (
    Classification,
    ObstructionReport,
    ag_level_criterion,
    ag_obstruction,
    classify_hankel,
    classify_pfaffian_square,
    classify_symmetric,
    gorenstein_symmetric,
    pfaffian_square_betti,
)
from .partitions import HookNotation, Partition, partitions_of
from .resolution import (
    BettiTable,
    ResolutionTerm,
    RingParams,
    a_invariant_symmetric,
    betti_table,
    enumerate_shapes,
    enumerate_shapes_oracle,
    enumerate_terms,
    is_level,
    last_two_closed_form,
    projective_dimension,
)
from .schur import OracleCapExceeded, schur_rank, ssyt_count

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "Classification",
    "HookNotation",
    "ObstructionReport",
    "OracleCapExceeded",
    "Partition",
    "ResolutionTerm",
    "RingParams",
    "a_invariant_symmetric",
    "ag_level_criterion",
    "ag_obstruction",
    "betti_table",
    "classify_hankel",
    "classify_pfaffian_square",
    "classify_symmetric",
    "enumerate_shapes",
    "enumerate_shapes_oracle",
    "enumerate_terms",
    "gorenstein_symmetric",
    "is_level",
    "last_two_closed_form",
    "partitions_of",
    "pfaffian_square_betti",
    "projective_dimension",
    "schur_rank",
    "ssyt_count",
]
