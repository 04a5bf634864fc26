"""Multi-method ensemble optimization on a coral-reef population model.

Three ensemble variants share one reef lifecycle: a static layout that ties
each search operator to a block of cells, a probabilistic variant that
redraws operator tags uniformly each generation, and a dynamic variant that
adapts the tag probabilities to each operator's recent performance.
"""

from .benchmarks import BENCHMARKS, benchmark_names, make_benchmark
from .errors import ConfigurationError, OperatorInapplicableError, StateError
from .harness import (
    ExperimentConfig,
    ExperimentSummary,
    RunRecord,
    aggregate_stats,
    export_traces,
    run_experiment,
)
from .objective import BoundedObjective
from .operators import DE_VARIANTS, OPERATOR_NAMES, OperatorParams, SubstrateBank
from .probability import (
    AssignmentPolicy,
    ProbabilityState,
    apply_probability_floor,
    assign_tags,
    compute_metrics,
    record_outcome,
    update_probabilities,
)
from .reef import (
    Coral,
    GenerationStats,
    Reef,
    ReefParams,
    budding,
    depredation,
    evolve_generation,
    init_reef,
    settle_larvae,
    spawn_offspring,
)
from .windfarm import (
    FeasibilityReport,
    Scenario,
    TurbineSpec,
    WindRose,
    aep,
    cauchy_local_search,
    check_feasibility,
    decode_genome,
    default_scenario,
    farm_power,
    load_scenario,
    power_curve,
    save_scenario,
    wake_free_bound,
    windfarm_objective,
    write_layout_csv,
)

__version__ = "0.1.0"
