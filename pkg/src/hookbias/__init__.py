"""Exact hook-length statistics for ordinary and t-regular integer partitions.

Two independent engines compute the same counting functions: a brute-force
enumeration oracle over Young diagrams (:mod:`hookbias.partitions`) and an
exact truncated q-series engine (:mod:`hookbias.qseries`,
:mod:`hookbias.genfun`).  On top of them, :mod:`hookbias.bias` verifies
hook-count inequalities and scans their conjectured extensions, and
:mod:`hookbias.cli` exposes everything on the command line.
"""

from .partitions import (
    HookTally,
    OracleGuardError,
    Partition,
    TwoRegularClass,
    classify_2regular,
    conjugate,
    enumerate_partitions,
    enumerate_t_regular,
    fold_into_repeated,
    hook_length_census,
    hook_lengths,
    hook_tally,
    make_partition,
    min_part_two_count,
    oracle_ordinary,
    oracle_ordinary_bivariate,
    oracle_regular,
    partition_count,
    raise_largest_part,
)
from .qseries import (
    BivariateSeries,
    DualSeries,
    TruncatedSeries,
    bivariate_product,
    dual_product,
    geometric,
    invert_unit,
    pochhammer,
)
from .genfun import (
    SERIES_REGISTRY,
    gf_gap_remainder,
    gf_hook_gap,
    gf_hooks,
    gf_hooks_bivariate,
    gf_partitions,
    gf_regular2_gap,
    gf_regular3_gap,
    gf_regular_hooks,
)
from .bias import (
    BiasReport,
    Finding,
    diagonal_values_2regular,
    diagonal_values_regular,
    scan_conjecture_2regular,
    scan_conjecture_3regular,
    verify_2regular_12,
    verify_2regular_23,
    verify_ordinary_bias,
)

__version__ = "0.1.0"
