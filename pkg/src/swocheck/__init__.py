"""Social welfare orderings over variable-population well-being profiles,
with randomized axiom falsification probes and counterexample witness chains."""

from .axioms import (
    AxiomId,
    ComparisonRecord,
    CriticalLevelResult,
    ProbeResult,
    ProbeStatus,
    ProbeWitness,
    SamplerConfig,
    check_avoid_repugnant,
    check_avoid_weak_repugnant,
    check_universal_axiom,
    find_critical_level,
    probe_extended_continuity,
    probe_monotone_zero_addition,
    replay_witness,
    search_critical_level,
)
from .orderings import (
    SwoConfig,
    SwoId,
    compare,
    compare_baseline,
    compare_leximin_extended,
    compare_theorem3,
    compare_theorem7,
    swo_value,
    value_modified_theorem2,
    value_theorem2,
    value_theorem7_reduced,
)
from .profiles import (
    EmptyProfileError,
    ParseError,
    Profile,
    ProfileError,
    Verdict,
    concat,
    count_positive,
    geomean_negative_part_abs,
    geomean_positive_part,
    mean,
    parse_profile,
    parse_profile_lines,
    replicate,
    sorted_ascending,
)
from .witnesses import (
    ChainStep,
    Requirement,
    WitnessChain,
    check_proposition1,
    run_theorem1_chain,
    run_theorem4_chain,
)

__version__ = "0.1.0"
