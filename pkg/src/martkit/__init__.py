"""Exact measure-theoretic probability on finite spaces.

Sigma-algebras as partitions, conditional expectation as atom averages,
filtrations and process measurability classes, and martingale checks,
all in exact rational arithmetic.
"""

from .condexp import CondExpResult, cond_exp, cond_exp_indep, cond_exp_pull_out, has_cond_exp
from .errors import (
    CapacityError,
    DimensionError,
    HorizonMismatchError,
    MartkitError,
    NotAdaptedError,
    PreconditionError,
    UniverseMismatchError,
    UnsupportedOrderError,
)
from .martingale import (
    ClassificationReport,
    Counterexample,
    InvariantViolation,
    check_difference,
    check_pairwise,
    check_set_integral,
    check_succ,
    classify,
    cond_exp_process,
    is_martingale,
    is_submartingale,
    is_supermartingale,
    transform,
)
from .measure import (
    AveragingReport,
    MeasureSpace,
    ae_eq,
    ae_ge,
    ae_gt,
    ae_le,
    ae_lt,
    as_table,
    averaging_oracle,
    const_table,
    density_report,
    independent,
    integral,
    restrict,
    set_integral,
    tail_diameter_integrals,
)
from .numeric import as_rat, diameter, l1_norm, rat, vec
from .process import (
    Filtration,
    ProcessTable,
    is_adapted,
    is_predictable,
    is_predictable_shifted,
    is_progressive,
    natural_filtration,
    p_add,
    p_compose,
    p_max,
    p_neg,
    p_norm,
    p_partial_sum,
    p_scale,
    p_scale_fn,
    p_sub,
    validate_filtration,
)
from .sigma import (
    Partition,
    TimedPartition,
    generate,
    generate_from_function,
    is_measurable_fn,
    is_measurable_set,
    join,
    predictable_sigma,
    product_time_partition,
    refines,
)

__version__ = "0.1.0"
