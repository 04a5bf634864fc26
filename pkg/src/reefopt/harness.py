"""Experiment configuration, seeded repetition runner, and CSV export.

A config names the objective (a benchmark or a wind-farm scenario), the
ensemble variant, the substrate list, and the budget.  Repetition r runs
with seed base_seed + r; output files are deterministic functions of the
config, down to the byte.
"""

import json
import math
import os
import time
from dataclasses import dataclass, field

import numpy as np

from . import benchmarks, windfarm
from .errors import ConfigurationError
from .operators import OperatorParams, SubstrateBank
from .probability import AssignmentPolicy, ProbabilityState
from .reef import ReefParams, evolve_generation, init_reef

VARIANT_MODES = {"cro-sl": "static", "pcro-sl": "uniform", "dpcro-sl": "dynamic"}

DEFAULT_SUBSTRATES = ["de/best/1", "de/best/2", "de/current-to-best/1",
                      "de/current-to-pbest/1"]
WINDFARM_SUBSTRATES = ["de/best/1", "firefly", "blx", "gaussian", "cauchy"]

_CONFIG_KEYS = {
    "objective", "variant", "substrates", "operator_params", "reef", "policy",
    "budget", "repetitions", "base_seed",
    "local_search", "local_search_step", "local_search_fraction",
}


@dataclass
class ExperimentConfig:
    """Everything a run needs; unknown keys in a config file are rejected."""

    objective: dict
    variant: str = "dpcro-sl"
    substrates: list = None
    operator_params: dict = field(default_factory=dict)
    reef: dict = field(default_factory=dict)
    policy: dict = field(default_factory=dict)
    budget: int = 300000
    repetitions: int = 10
    base_seed: int = 0
    local_search: bool = None
    local_search_step: float = 10.0
    local_search_fraction: float = 0.05

    def __post_init__(self):
        if self.variant not in VARIANT_MODES:
            raise ConfigurationError(
                "variant must be one of %s" % ", ".join(VARIANT_MODES))
        if self.substrates is None:
            self.substrates = list(
                WINDFARM_SUBSTRATES if self.is_windfarm else DEFAULT_SUBSTRATES)
        if not self.substrates:
            raise ConfigurationError("substrate list must not be empty")
        if self.repetitions < 1:
            raise ConfigurationError("repetitions must be >= 1")
        if self.local_search is None:
            self.local_search = self.is_windfarm
        params = self.build_reef_params()
        occupancy = math.ceil(params.init_occupancy
                              * params.grid_rows * params.grid_cols)
        if self.budget < occupancy:
            raise ConfigurationError(
                "budget %d is below the initial occupancy %d" % (self.budget, occupancy))
        self.build_policy().validate_for(len(self.substrates))

    @classmethod
    def from_dict(cls, doc):
        unknown = set(doc) - _CONFIG_KEYS
        if unknown:
            raise ConfigurationError("unknown config keys: %s" % ", ".join(sorted(unknown)))
        if "objective" not in doc:
            raise ConfigurationError("config needs an 'objective' section")
        return cls(**doc)

    @classmethod
    def from_file(cls, path):
        with open(path) as f:
            return cls.from_dict(json.load(f))

    @property
    def is_windfarm(self):
        return "scenario" in self.objective

    def build_scenario(self):
        path = self.objective["scenario"]
        if path == "default":
            return windfarm.default_scenario()
        return windfarm.load_scenario(path)

    def build_objective(self):
        """A fresh counting objective (one per repetition)."""
        if self.is_windfarm:
            return windfarm.windfarm_objective(self.build_scenario())
        spec = self.objective
        name = spec.get("benchmark")
        if name is None:
            raise ConfigurationError(
                "objective needs a 'benchmark' name or a 'scenario' path")
        return benchmarks.make_benchmark(
            name,
            dim=spec.get("dim", benchmarks.DEFAULT_DIM),
            lower=spec.get("lower", benchmarks.DEFAULT_LOWER),
            upper=spec.get("upper", benchmarks.DEFAULT_UPPER),
        )

    def build_reef_params(self):
        values = dict(self.reef)
        if self.is_windfarm:
            values.setdefault("grid_rows", 15)
            values.setdefault("grid_cols", 15)
        return ReefParams(**values)

    def build_policy(self):
        return AssignmentPolicy(mode=VARIANT_MODES[self.variant], **self.policy)

    def build_bank(self, objective):
        params = OperatorParams.for_domain(objective.lower, objective.upper,
                                           **self.operator_params)
        return SubstrateBank(self.substrates, params, objective.lower, objective.upper)


@dataclass
class RunRecord:
    """One repetition: per-generation trace rows plus the final solution."""

    seed: int
    substrate_names: list
    rows: list  # (generation, best, mean, evaluations, p_0..p_T-1)
    best_genome: np.ndarray
    best_fitness: float
    wall_time: float


@dataclass
class ExperimentSummary:
    objective: str
    variant: str
    best: float
    mean: float
    std: float
    best_genome: np.ndarray
    scenario: object = None  # set for wind-farm runs


def aggregate_stats(final_bests):
    """(min, mean, population std) over repetition finals."""
    if len(final_bests) == 0:
        raise ValueError("no repetition results to aggregate")
    a = np.asarray(final_bests, dtype=float)
    return float(a.min()), float(a.mean()), float(a.std())


def _run_single(config, seed):
    objective = config.build_objective()
    params = config.build_reef_params()
    policy = config.build_policy()
    bank = config.build_bank(objective)
    state = ProbabilityState(bank.n_substrates)

    started = time.perf_counter()
    reef = init_reef(params, objective, seed)
    n_init = reef.n_occupied
    evals_per_gen = max(1, round(n_init * (1.0 + params.budding_fraction)))
    total_generations = max(1, (config.budget - n_init) // evals_per_gen)

    rows = []

    def record_row():
        fitnesses = reef.fitness_values()
        rows.append((reef.generation, float(fitnesses.min()), float(fitnesses.mean()),
                     reef.evaluations_used, *state.probabilities))

    record_row()

    search_pool = int(config.budget * config.local_search_fraction) \
        if config.local_search else 0
    search_slice = max(1, round(config.local_search_fraction
                                * policy.update_period * evals_per_gen))

    while reef.evaluations_used < config.budget:
        stats = evolve_generation(reef, policy, state, bank, rng=reef.rng,
                                  budget=config.budget,
                                  total_generations=total_generations)
        if (search_pool > 0 and not stats.budget_exhausted
                and reef.generation % policy.update_period == 0):
            spend = min(search_slice, search_pool,
                        config.budget - reef.evaluations_used)
            if spend > 0:
                best_cell = reef.best_index()
                incumbent = reef.cells[best_cell]
                genome, value = windfarm.cauchy_local_search(
                    objective, incumbent.genome, spend, reef.rng,
                    step_scale=config.local_search_step,
                    genome_value=incumbent.fitness)
                if value < incumbent.fitness:
                    incumbent.genome = genome
                    incumbent.fitness = value
                search_pool -= spend
        record_row()
        if stats.budget_exhausted:
            break

    best = reef.best()
    return RunRecord(
        seed=seed,
        substrate_names=list(bank.names),
        rows=rows,
        best_genome=best.genome.copy(),
        best_fitness=best.fitness,
        wall_time=time.perf_counter() - started,
    )


def run_experiment(config):
    """Run all repetitions and aggregate their final bests."""
    records = [_run_single(config, config.base_seed + r)
               for r in range(config.repetitions)]
    best, mean, std = aggregate_stats([r.best_fitness for r in records])
    winner = min(records, key=lambda r: r.best_fitness)
    summary = ExperimentSummary(
        objective="windfarm" if config.is_windfarm
        else config.objective["benchmark"],
        variant=config.variant,
        best=best,
        mean=mean,
        std=std,
        best_genome=winner.best_genome.copy(),
        scenario=config.build_scenario() if config.is_windfarm else None,
    )
    return summary, records


def export_traces(records, out_dir, summary):
    """Write per-run trace CSVs, the summary CSV, and the best-solution CSV.

    Raises before creating anything when there is nothing to write; float
    cells use repr so identical runs produce identical bytes.
    """
    if not records:
        raise ValueError("no run records to export")
    os.makedirs(out_dir, exist_ok=True)
    paths = []

    for index, record in enumerate(records):
        path = os.path.join(out_dir, "trace_run%d.csv" % index)
        with open(path, "w") as f:
            header = ["generation", "best", "mean", "evals"]
            header += ["p_%s" % name for name in record.substrate_names]
            f.write(",".join(header) + "\n")
            for row in record.rows:
                gen, best, mean, evals, *probs = row
                cells = [str(int(gen)), repr(float(best)), repr(float(mean)),
                         str(int(evals))]
                cells += [repr(float(p)) for p in probs]
                f.write(",".join(cells) + "\n")
        paths.append(path)

    summary_path = os.path.join(out_dir, "summary.csv")
    with open(summary_path, "w") as f:
        f.write("objective,variant,best,mean,std\n")
        f.write("%s,%s,%r,%r,%r\n" % (summary.objective, summary.variant,
                                      summary.best, summary.mean, summary.std))
    paths.append(summary_path)

    best_path = os.path.join(out_dir, "best_solution.csv")
    if summary.scenario is not None:
        layout, _ = windfarm.decode_genome(summary.best_genome, summary.scenario)
        windfarm.write_layout_csv(layout, best_path)
    else:
        with open(best_path, "w") as f:
            f.write("i,value\n")
            for i, v in enumerate(summary.best_genome, start=1):
                f.write("%d,%r\n" % (i, float(v)))
    paths.append(best_path)
    return paths
