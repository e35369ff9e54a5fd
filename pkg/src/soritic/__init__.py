"""Finite vicinity spaces, response systems, and soritical-sequence analysis.

The package splits into six concerns: vicinity spaces and connectivity
(`pretopology`), response systems and the tolerance/connectedness clash
(`system`), threshold rules on the unit interval with oracle-driven boundary
estimation (`threshold`), probabilistic responders with mixture reduction
(`probabilistic`), many-valued connectives (`fuzzy`), and same/different
matchers with comparative sequences (`comparative`).  The `cli` module runs
JSON scenario files against all of them.
"""

from .comparative import (
    DIFFERENT,
    SAME,
    ComparativeSequence,
    DigitsMatcher,
    EpsilonMatcher,
    EquivalenceReport,
    EquivalenceViolation,
    TableMatcher,
    find_comparative_sequence,
    is_equivalence,
    load_matcher_table,
    make_matcher,
    parse_matcher_table,
)
from .errors import (
    BudgetError,
    InputError,
    InternalInconsistencyError,
    NoChainError,
    SoriticError,
    StaleReportError,
)
from .fuzzy import (
    MismatchReport,
    implication,
    luk_eval,
    mismatch_report,
    negation,
    strong_conjunction,
    weak_conjunction,
)
from .pretopology import (
    ConnectivityVerdict,
    FrechetSpace,
    MinimalCover,
    Point,
    VicinityChain,
    Violation,
    chain_in_cover,
    cover_count,
    enumerate_minimal_covers,
    filter_v_connected,
    is_close,
    line_space,
    v_connected,
    validate_space,
)
from .probabilistic import (
    BernoulliSource,
    Distribution,
    FoldedSystem,
    Mixture,
    ObservationLog,
    ObservationRecord,
    PEstimate,
    SupervenienceVerdict,
    ZoraGrid,
    assess_supervenience,
    bernoulli_oracle,
    check_probabilistic_tolerance,
    discretize,
    estimate_p,
    interpolating_bernoulli_oracle,
    load_observation_log,
    parse_observation_log,
    reduce_mixture,
    temporal_fold,
    validate_zora,
    verify_reduction_by_simulation,
    wilson_interval,
)
from .system import (
    NoSoritesVerdict,
    ResponseSystem,
    SoriticalChain,
    ToleranceReport,
    assert_no_sorites,
    assert_tolerant_cover,
    check_tolerance,
    derive_soritical_contradiction,
    find_con_witness,
)
from .threshold import (
    R0,
    R1,
    BisectionTrace,
    FiniteRuleDistribution,
    MonotoneViolation,
    ReplayOracle,
    RuleOracle,
    ThresholdRule,
    UniformRuleDistribution,
    check_monotone_consistency,
    classify,
    estimate_boundary,
    sample_rule,
    stay_below_sequence,
)

__version__ = "0.1.0"
