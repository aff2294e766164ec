"""Piecewise-constant Boolean signals over exact rational time, and a
hierarchy of switching-time models for asynchronous components: eventual-value
conditions, window-bounded conditions, fixed delays, and dwell constraints,
with combinators, closed-form serial composition, and a self-checking theorem
suite."""

from .boolfn import (
    BoolFn,
    and_fn,
    apply_fn,
    const_fn,
    fn_compose,
    fn_from_bits,
    fn_props,
    identity_fn,
    is_monotone,
    is_permutation_symmetric,
    not_fn,
    or_fn,
    proj_fn,
    xor_fn,
)
from .bounded import (
    BlcParams,
    blc,
    blc_compose,
    blc_included,
    blc_is_deterministic,
    blc_symmetric_rf,
    blc_symmetric_usual,
    blc_valid,
    envelope_violation,
    envelopes,
    lower_envelope,
    params,
    pattern_input,
    probe_inputs,
    upper_envelope,
)
from .conditions import (
    DirectProduct,
    LimitCondition,
    SearchBudget,
    SignalSet,
    check_constancy,
    check_deterministic,
    check_symmetry_rf,
    check_symmetry_usual,
    check_time_invariance,
    direct_product,
    lc_join,
    lc_meet,
    lc_meet_set,
    lc_restrict,
    mc,
    sc,
    scf,
    serial,
    serial_membership,
    serial_search,
    sol,
    sol_contains,
)
from .errors import (
    ArityMismatch,
    BlockArityMismatch,
    DistributivityUnverified,
    DuplicateTransitionTime,
    EmptyBailc,
    EmptyMeet,
    HypothesisViolated,
    InvalidBlc,
    InvalidDocument,
    InvalidWindow,
    MonotonyViolated,
    NegativeDelay,
    OverlappingIntervals,
    PreconditionViolated,
    SiglimError,
    UnknownTheorem,
)
from .files import (
    model_from_doc,
    model_to_doc,
    read_model_file,
    read_signal_file,
    signal_from_doc,
    signal_to_doc,
    write_model_file,
    write_signal_file,
)
from .inertial import (
    AicParams,
    aic_contains,
    aic_params,
    aic_set,
    bailc,
    bailc_compose,
    bailc_nonempty,
    bailc_witness_search,
    flc,
    search_between,
)
from .props import (
    DEFAULT_CONFIG,
    GenConfig,
    TheoremReport,
    describe,
    replay_case,
    run_all,
    run_theorem,
    theorem_ids,
)
from .signals import (
    Signal,
    breakpoints,
    charfn,
    combine,
    constant,
    first_one_time,
    is_constant,
    make_signal,
    pointwise,
    pulse,
    signal_leq,
    translate,
    translate_all,
    values_at,
    window_all,
    window_any,
)

__version__ = "0.1.0"
