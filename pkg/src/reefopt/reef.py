"""The reef population model and the five-phase generational loop.

A reef is an M x N grid whose cells each hold at most one coral (a candidate
solution).  One generation runs: tag assignment, broadcast spawning plus
brooding, larvae settlement, budding, credit recording, an optional
probability update, and depredation.  The best coral is immune to
depredation, so the reef's best fitness never increases.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, OperatorInapplicableError, StateError
from .probability import assign_tags, compute_metrics, record_outcome, update_probabilities

BROOD_SIGMA_FRACTION = 0.02  # of the box width; also used for budding


def _fraction_count(fraction, n):
    # floor, with an epsilon so exact products like 0.7 * 10 do not lose a
    # unit to float rounding
    return int(fraction * n + 1e-9)


@dataclass
class ReefParams:
    """Grid size and lifecycle fractions.

    Fractions are of the occupied population: ``broadcast_fraction`` of
    corals spawn through their substrate operator, the rest brood;
    ``budding_fraction`` of the best duplicate; the worst
    ``depredation_fraction`` each die with probability ``depredation_prob``.
    """

    grid_rows: int = 10
    grid_cols: int = 10
    init_occupancy: float = 0.6
    broadcast_fraction: float = 0.9
    budding_fraction: float = 0.05
    depredation_fraction: float = 0.1
    depredation_prob: float = 0.1
    settle_attempts: int = 3

    def __post_init__(self):
        if self.grid_rows < 1 or self.grid_cols < 1:
            raise ConfigurationError("grid dimensions must be >= 1")
        if not 0.0 < self.init_occupancy <= 1.0:
            raise ConfigurationError("init_occupancy must be in (0, 1]")
        if not 0.0 < self.broadcast_fraction < 1.0:
            raise ConfigurationError("broadcast_fraction must be in (0, 1)")
        for name in ("budding_fraction", "depredation_fraction", "depredation_prob"):
            v = getattr(self, name)
            if not 0.0 <= v < 1.0:
                raise ConfigurationError("%s must be in [0, 1)" % name)
        if self.settle_attempts < 1:
            raise ConfigurationError("settle_attempts must be >= 1")


@dataclass
class Coral:
    """One candidate solution: genome, cached fitness, producing substrate.

    ``tag`` is the substrate index; -1 marks brooding or budding offspring,
    which earn no substrate credit.
    """

    genome: np.ndarray
    fitness: float
    tag: int = -1


@dataclass
class SettleResult:
    settled: bool
    cell: int  # flat row-major index, or -1 when discarded
    larva: Coral


@dataclass
class GenerationStats:
    generation: int
    best_fitness: float
    mean_fitness: float
    evaluations: int
    probabilities: np.ndarray
    budget_exhausted: bool = False


class Reef:
    """An M x N grid of optional corals, flat row-major storage."""

    def __init__(self, params, objective, rng):
        self.params = params
        self.objective = objective
        self.rng = rng
        self.cells = [None] * (params.grid_rows * params.grid_cols)
        self.generation = 0
        self._eval_offset = objective.evaluations

    @property
    def capacity(self):
        return self.params.grid_rows * self.params.grid_cols

    @property
    def evaluations_used(self):
        """Objective calls made on behalf of this reef."""
        return self.objective.evaluations - self._eval_offset

    @property
    def n_occupied(self):
        return sum(1 for c in self.cells if c is not None)

    def occupied(self):
        """(flat index, coral) pairs in row-major order."""
        return [(i, c) for i, c in enumerate(self.cells) if c is not None]

    def best_index(self):
        """Flat index of the best coral (first cell wins ties)."""
        best, best_f = -1, math.inf
        for i, c in enumerate(self.cells):
            if c is not None and c.fitness < best_f:
                best, best_f = i, c.fitness
        if best < 0:
            raise StateError("reef is empty")
        return best

    def best(self):
        return self.cells[self.best_index()]

    def fitness_values(self):
        return np.array([c.fitness for c in self.cells if c is not None])


def init_reef(params, objective, seed):
    """Populate ceil(occupancy * capacity) random cells with random corals.

    The generator seeded here is attached to the reef and drives the whole
    run, so (params, objective, seed) fully determine the trace.
    """
    rng = np.random.default_rng(seed)
    reef = Reef(params, objective, rng)
    k = math.ceil(params.init_occupancy * reef.capacity)
    sites = rng.choice(reef.capacity, size=k, replace=False)
    for site in sites:
        genome = objective.random_point(rng)
        reef.cells[int(site)] = Coral(genome, objective.evaluate(genome))
    return reef


def brood(genome, objective, rng):
    """Small Gaussian perturbation, width 2 percent of the box."""
    sigma = BROOD_SIGMA_FRACTION * objective.width
    child = genome + sigma * rng.standard_normal(genome.size)
    return objective.clamp(child)


def spawn_offspring(reef, bank, rng, total_generations=1000):
    """One larva per occupied coral: broadcast via its substrate, or brooding.

    The broadcast count is floor(broadcast_fraction * occupied); the rest
    brood.  A substrate that cannot run on the current population (too few
    corals) falls back to brooding, and the larva then carries no substrate
    credit (tag -1).  Larvae are evaluated here.
    """
    occupied = reef.occupied()
    n = len(occupied)
    if n == 0:
        raise StateError("cannot spawn on an empty reef")
    objective = reef.objective
    n_broadcast = _fraction_count(reef.params.broadcast_fraction, n)
    order = rng.permutation(n)
    genomes = np.array([c.genome for _, c in occupied])
    fitnesses = np.array([c.fitness for _, c in occupied])
    larvae = []
    for slot, idx in enumerate(order):
        coral = occupied[idx][1]
        tag = -1
        if slot < n_broadcast:
            try:
                child = bank.produce(coral.tag, int(idx), genomes, fitnesses,
                                     reef.generation, total_generations, rng)
                tag = coral.tag
            except OperatorInapplicableError:
                child = brood(coral.genome, objective, rng)
        else:
            child = brood(coral.genome, objective, rng)
        larvae.append(Coral(child, objective.evaluate(child), tag))
    return larvae


def settle_larvae(reef, larvae, rng):
    """Each larva tries random cells; it takes empty ones or beats incumbents.

    Attempts draw cells uniformly with replacement; a larva that fails
    ``settle_attempts`` times is discarded.
    """
    capacity = reef.capacity
    attempts = reef.params.settle_attempts
    results = []
    for larva in larvae:
        settled = False
        where = -1
        for _ in range(attempts):
            site = int(rng.integers(capacity))
            incumbent = reef.cells[site]
            if incumbent is None or larva.fitness < incumbent.fitness:
                reef.cells[site] = larva
                settled = True
                where = site
                break
        results.append(SettleResult(settled, where, larva))
    return results


def budding(reef, rng):
    """Duplicate-and-perturb the best fraction; larvae settle like any other."""
    occupied = reef.occupied()
    n = len(occupied)
    if n == 0:
        raise StateError("cannot bud on an empty reef")
    count = _fraction_count(reef.params.budding_fraction, n)
    if count == 0:
        return []
    fitnesses = np.array([c.fitness for _, c in occupied])
    best_rows = np.argsort(fitnesses, kind="stable")[:count]
    objective = reef.objective
    larvae = []
    for row in best_rows:
        parent = occupied[int(row)][1]
        child = brood(parent.genome, objective, rng)
        larvae.append(Coral(child, objective.evaluate(child)))
    return larvae


def depredation(reef, rng):
    """Remove each of the worst-fraction corals with the configured probability.

    The single best coral is immune, which makes the reef's best fitness
    monotone and keeps the reef non-empty.
    """
    occupied = reef.occupied()
    n = len(occupied)
    count = _fraction_count(reef.params.depredation_fraction, n)
    if count == 0:
        return 0
    fitnesses = np.array([c.fitness for _, c in occupied])
    worst_rows = np.argsort(-fitnesses, kind="stable")[:count]
    best_flat = reef.best_index()
    p = reef.params.depredation_prob
    removed = 0
    for row in worst_rows:
        flat = occupied[int(row)][0]
        if flat == best_flat:
            continue
        if rng.random() < p:
            reef.cells[flat] = None
            removed += 1
    return removed


def evolve_generation(reef, policy, state, bank, rng=None, budget=None,
                      total_generations=1000):
    """Run one full generation and report its statistics.

    When a budget is given and the spawn phase exhausts it, the phase still
    completes but budding, the probability update and depredation are
    skipped and the stats carry ``budget_exhausted=True``.
    """
    if rng is None:
        rng = reef.rng
    if reef.n_occupied == 0:
        raise StateError("reef not initialized")
    previous_best = reef.best().fitness

    assign_tags(policy, reef, state, rng)
    larvae = spawn_offspring(reef, bank, rng, total_generations)
    for result in settle_larvae(reef, larvae, rng):
        if result.larva.tag >= 0:
            record_outcome(state, result.larva.tag, result.larva.fitness,
                           result.settled, previous_best)

    exhausted = budget is not None and reef.evaluations_used >= budget
    if not exhausted:
        settle_larvae(reef, budding(reef, rng), rng)
        exhausted = budget is not None and reef.evaluations_used >= budget
    if not exhausted:
        if (policy.mode == "dynamic"
                and (reef.generation + 1) % policy.update_period == 0
                and state.produced.sum() > 0):
            compute_metrics(state, policy)
            update_probabilities(state, policy)
        depredation(reef, rng)

    reef.generation += 1
    fitnesses = reef.fitness_values()
    return GenerationStats(
        generation=reef.generation,
        best_fitness=float(fitnesses.min()),
        mean_fitness=float(fitnesses.mean()),
        evaluations=reef.evaluations_used,
        probabilities=state.probabilities.copy(),
        budget_exhausted=exhausted,
    )
