"""Partition combinatorics of nilpotent orbits for classical groups."""

from .conjectures import (
    BoundReport,
    ExampleResult,
    Verdict,
    bound_from_arthur,
    bound_from_dual_lparam,
    check_bound,
    reproduce_paper_examples,
    sharper_chain_check,
)
from .duality import (
    LhsCaseReport,
    SweepSummary,
    dbv,
    dual_type,
    key_lemma_lhs,
    key_lemma_rhs,
    key_lemma_sweep,
    lhs_case_formula,
    strict_inequality_check,
)
from .errors import *  # noqa: F401,F403
from .induction import LeviDatum, NilpotentOrbit, induce_classical, induce_gl, induce_levi, induced_wavefront, parse_levi
from .params import (
    Context,
    Irrep,
    Parameter,
    Summand,
    arthur_parameter,
    gl_wavefront,
    hat,
    L_parameter,
    p_A_of_phi,
    p_of_phi,
    p_of_psi,
    parse_parameter,
    phi_of_gl_standard_module,
    phi_of_psi,
)
from .partition import (
    ClassicalType,
    Partition,
    Slice,
    collapse,
    collapse_oracle,
    dominates,
    format_partition,
    is_type,
    make_partition,
    minus_one,
    parse_partition,
    partitions,
    plus_one,
    pointwise_sum,
    slice_partition,
    transpose,
    typed_partitions,
    union,
)

__version__ = "0.1.0"
