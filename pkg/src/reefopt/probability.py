"""Substrate-tag assignment: static regions, uniform redraws, adaptive softmax.

The static mode ties each operator to a fixed block of reef cells.  The
probabilistic modes redraw a tag per coral each generation; the dynamic mode
additionally scores substrates on a sliding window of larvae outcomes and
re-weights the draw with a floored softmax.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, StateError

MODES = ("static", "uniform", "dynamic")
METRICS = ("success_rate", "raw_fitness", "fitness_improvement")
AGGREGATES = ("mean", "best", "worst")


@dataclass
class AssignmentPolicy:
    """How corals get their substrate tags.

    ``metric`` and ``aggregate`` only matter in dynamic mode.  ``floor`` is
    the minimum probability any substrate keeps after an update;
    ``update_period`` is the window length in generations.
    """

    mode: str = "dynamic"
    metric: str = "raw_fitness"
    aggregate: str = "best"
    temperature: float = 0.1
    floor: float = 0.02
    update_period: int = 10

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigurationError("mode must be one of %s" % (MODES,))
        if self.metric not in METRICS:
            raise ConfigurationError("metric must be one of %s" % (METRICS,))
        if self.aggregate not in AGGREGATES:
            raise ConfigurationError("aggregate must be one of %s" % (AGGREGATES,))
        if self.temperature <= 0.0:
            raise ConfigurationError("temperature must be > 0")
        if self.floor < 0.0:
            raise ConfigurationError("floor must be >= 0")
        if self.update_period < 1:
            raise ConfigurationError("update_period must be >= 1")

    def validate_for(self, n_substrates):
        """The floor must leave room to renormalize: floor * T < 1."""
        if n_substrates < 1:
            raise ConfigurationError("need at least one substrate")
        if self.floor * n_substrates >= 1.0:
            raise ConfigurationError(
                "floor %g too large for %d substrates" % (self.floor, n_substrates)
            )


class ProbabilityState:
    """Per-substrate draw probabilities plus the open window's accumulators."""

    def __init__(self, n_substrates):
        if n_substrates < 1:
            raise ConfigurationError("need at least one substrate")
        t = int(n_substrates)
        self.n_substrates = t
        self.probabilities = np.full(t, 1.0 / t)
        self.metrics = np.full(t, 0.5)
        self.reset_window()

    def reset_window(self):
        t = self.n_substrates
        self.produced = np.zeros(t, dtype=int)
        self.settled = np.zeros(t, dtype=int)
        self.fitness_sum = np.zeros(t)
        self.fitness_min = np.full(t, np.inf)
        self.fitness_max = np.full(t, -np.inf)
        self.improvement_sum = np.zeros(t)
        self.improvement_min = np.full(t, np.inf)
        self.improvement_max = np.full(t, -np.inf)


def assign_tags(policy, reef, state, rng):
    """Give every occupied coral a substrate tag; returns {flat cell: tag}.

    Static tags come from the cell's fixed region (T contiguous, nearly
    equal blocks of the row-major grid); the probabilistic modes draw one
    tag per coral, independently, every generation.
    """
    t = state.n_substrates
    occupied = reef.occupied()
    tags = {}
    if policy.mode == "static":
        capacity = reef.capacity
        for flat, coral in occupied:
            tag = flat * t // capacity
            coral.tag = tag
            tags[flat] = tag
        return tags
    if policy.mode == "uniform":
        draws = rng.integers(0, t, size=len(occupied))
    else:
        draws = rng.choice(t, size=len(occupied), p=state.probabilities)
    for (flat, coral), tag in zip(occupied, draws):
        coral.tag = int(tag)
        tags[flat] = int(tag)
    return tags


def record_outcome(state, tag, larva_fitness, settled, previous_best):
    """Credit one larva to its producing substrate.

    ``previous_best`` is the reef's best fitness when the generation began;
    the improvement credit is max(0, previous_best - larva_fitness).
    """
    state.produced[tag] += 1
    if settled:
        state.settled[tag] += 1
    f = float(larva_fitness)
    state.fitness_sum[tag] += f
    if f < state.fitness_min[tag]:
        state.fitness_min[tag] = f
    if f > state.fitness_max[tag]:
        state.fitness_max[tag] = f
    gain = max(0.0, float(previous_best) - f)
    state.improvement_sum[tag] += gain
    if gain < state.improvement_min[tag]:
        state.improvement_min[tag] = gain
    if gain > state.improvement_max[tag]:
        state.improvement_max[tag] = gain


def raw_metrics(state, policy):
    """Window scores before normalization, oriented so larger is better.

    Raw fitness is negated (minimization); substrates that produced no
    larvae get the window minimum so the floor keeps them alive.
    """
    produced = state.produced
    active = produced > 0
    if not active.any():
        raise StateError("no larvae recorded in the update window")
    raw = np.zeros(state.n_substrates)
    if policy.metric == "success_rate":
        raw[active] = state.settled[active] / produced[active]
    elif policy.metric == "raw_fitness":
        if policy.aggregate == "mean":
            raw[active] = -(state.fitness_sum[active] / produced[active])
        elif policy.aggregate == "best":
            raw[active] = -state.fitness_min[active]
        else:
            raw[active] = -state.fitness_max[active]
    else:
        if policy.aggregate == "mean":
            raw[active] = state.improvement_sum[active] / produced[active]
        elif policy.aggregate == "best":
            raw[active] = state.improvement_max[active]
        else:
            raw[active] = state.improvement_min[active]
    raw[~active] = raw[active].min()
    return raw


def compute_metrics(state, policy):
    """Close the window's scores and min-max normalize them to [0, 1]."""
    raw = raw_metrics(state, policy)
    lo = raw.min()
    hi = raw.max()
    if hi > lo:
        m = (raw - lo) / (hi - lo)
    else:
        m = np.full(state.n_substrates, 0.5)
    state.metrics = m
    return m


def apply_probability_floor(p, floor):
    """Raise entries below the floor and renormalize the rest proportionally.

    Iterates because the proportional shrink can push further entries under
    the floor; with floor * T < 1 this terminates with sum(p) == 1 and
    min(p) >= floor.
    """
    p = np.asarray(p, dtype=float).copy()
    if floor <= 0.0:
        return p / p.sum()
    fixed = np.zeros(p.size, dtype=bool)
    while True:
        below = (p < floor) & ~fixed
        if not below.any():
            break
        fixed |= below
        p[fixed] = floor
        free = ~fixed
        if not free.any():
            break
        mass = 1.0 - floor * fixed.sum()
        p[free] *= mass / p[free].sum()
    return p


def update_probabilities(state, policy):
    """Softmax of the normalized metrics, floored, then start a new window."""
    if policy.temperature <= 0.0:
        raise ConfigurationError("temperature must be > 0")
    z = state.metrics / policy.temperature
    z = z - z.max()  # keeps exp finite at very low temperatures
    e = np.exp(z)
    p = apply_probability_floor(e / e.sum(), policy.floor)
    state.probabilities = p
    state.reset_window()
    return p
