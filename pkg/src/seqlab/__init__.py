"""Exact enumeration workbench for words avoiding long strictly increasing
runs.

Counts words over {1..n} with r copies of each letter and no strictly
increasing subsequence of length d -- exactly, via a Young-tableau dynamic
program -- and surrounds the counts with the experimental toolkit: a
brute-force oracle, recurrence guessing/verification/extension over exact
integers, growth-constant estimation, Bessel-series determinant checks, and
an OEIS-compatible cache and lookup client.
"""

from .partitions import (
    Partition,
    as_partition,
    conjugate,
    is_horizontal_strip,
    partitions_upto_length,
    syt_count,
)
from .tableaux import (
    LayerTable,
    advance_layer,
    avoiders_count,
    avoiders_sequence,
    initial_layer,
    kostka_uniform,
)
from .oracle import (
    ENUMERATION_BUDGET,
    Word,
    brute_count,
    enumerate_words,
    longest_strict_increase,
    total_words,
)
from .recurrences import (
    InsufficientTermsError,
    NonIntegerStepError,
    PRecurrence,
    SingularLeadingCoefficientError,
    extend,
    format_recurrence,
    guess,
    parse_recurrence,
    recurrence_residual,
    verify,
)
from .growth import (
    ConstantEstimate,
    GrowthParams,
    conjectured_params,
    empirical_growth,
    estimate_constant,
    richardson_extrapolate,
)
from .bessel import (
    GesselCheck,
    TruncSeries,
    bessel_I_2x,
    bessel_determinant,
    gessel_check,
    gessel_coefficient,
    series_det,
)
from .storage import (
    CacheError,
    SequenceRecord,
    cache_load,
    cache_path,
    cache_store,
    format_bfile,
    parse_bfile,
    record_to_bfile,
    resolve_cache_dir,
)
from .oeis import (
    MalformedResponseError,
    NetworkUnavailableError,
    OeisError,
    OeisMatch,
    oeis_lookup,
)

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "as_partition",
    "conjugate",
    "is_horizontal_strip",
    "partitions_upto_length",
    "syt_count",
    "LayerTable",
    "advance_layer",
    "avoiders_count",
    "avoiders_sequence",
    "initial_layer",
    "kostka_uniform",
    "ENUMERATION_BUDGET",
    "Word",
    "brute_count",
    "enumerate_words",
    "longest_strict_increase",
    "total_words",
    "InsufficientTermsError",
    "NonIntegerStepError",
    "PRecurrence",
    "SingularLeadingCoefficientError",
    "extend",
    "format_recurrence",
    "guess",
    "parse_recurrence",
    "recurrence_residual",
    "verify",
    "ConstantEstimate",
    "GrowthParams",
    "conjectured_params",
    "empirical_growth",
    "estimate_constant",
    "richardson_extrapolate",
    "GesselCheck",
    "TruncSeries",
    "bessel_I_2x",
    "bessel_determinant",
    "gessel_check",
    "gessel_coefficient",
    "series_det",
    "CacheError",
    "SequenceRecord",
    "cache_load",
    "cache_path",
    "cache_store",
    "format_bfile",
    "parse_bfile",
    "record_to_bfile",
    "resolve_cache_dir",
    "MalformedResponseError",
    "NetworkUnavailableError",
    "OeisError",
    "OeisMatch",
    "oeis_lookup",
]
