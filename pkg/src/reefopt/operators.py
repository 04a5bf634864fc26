"""The substrate operator bank.

Five differential-evolution variants, a firefly move, two-point crossover,
blend crossover, a scheduled Gaussian mutation and a Cauchy mutation.  Every
operator takes an explicit ``numpy.random.Generator`` and clamps its output
to the search box, so applications are pure given the generator state.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, OperatorInapplicableError

DE_VARIANTS = ("best/1", "best/2", "current-to-best/1", "current-to-pbest/1", "rand/2")

# number of random distinct partners each variant draws
_DE_PICKS = {
    "best/1": 2,
    "best/2": 4,
    "current-to-best/1": 2,
    "current-to-pbest/1": 2,
    "rand/2": 5,
}

OPERATOR_NAMES = tuple("de/" + v for v in DE_VARIANTS) + (
    "firefly", "2px", "blx", "gaussian", "cauchy",
)


@dataclass
class OperatorParams:
    """Tunables for the whole bank.

    The scale-like fields (``firefly_alpha``, ``gm_sigma_*``,
    ``cauchy_scale``) are absolute step sizes in genome units; use
    :meth:`for_domain` to get the usual width-proportional defaults.
    """

    de_scale: float = 0.7
    de_cross: float = 0.8
    pbest_fraction: float = 0.1
    blx_alpha: float = 0.5
    firefly_beta0: float = 1.0
    firefly_gamma: float = 1.0
    firefly_alpha: float = 0.01
    gm_sigma_start: float = 0.2
    gm_sigma_end: float = 0.02
    cauchy_scale: float = 0.01
    cauchy_t: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.de_scale <= 2.0:
            raise ConfigurationError("de_scale must be in [0, 2]")
        if not 0.0 <= self.de_cross <= 1.0:
            raise ConfigurationError("de_cross must be in [0, 1]")
        if not 0.0 < self.pbest_fraction <= 1.0:
            raise ConfigurationError("pbest_fraction must be in (0, 1]")
        if self.blx_alpha < 0.0:
            raise ConfigurationError("blx_alpha must be >= 0")
        if self.firefly_beta0 <= 0.0:
            raise ConfigurationError("firefly_beta0 must be > 0")
        if self.firefly_gamma < 0.0 or self.firefly_alpha < 0.0:
            raise ConfigurationError("firefly_gamma and firefly_alpha must be >= 0")
        if not self.gm_sigma_start > self.gm_sigma_end > 0.0:
            raise ConfigurationError("need gm_sigma_start > gm_sigma_end > 0")
        if self.cauchy_scale < 0.0 or self.cauchy_t <= 0.0:
            raise ConfigurationError("cauchy_scale must be >= 0 and cauchy_t > 0")

    @classmethod
    def for_domain(cls, lower, upper, **overrides):
        """Defaults with step sizes proportional to the box width."""
        width = float(upper) - float(lower)
        values = dict(
            firefly_alpha=0.01 * width,
            gm_sigma_start=0.2 * width,
            gm_sigma_end=0.02 * width,
            cauchy_scale=0.01 * width,
        )
        values.update(overrides)
        return cls(**values)


def draw_distinct_rows(parent_index, n, k, rng):
    """k rows drawn by rejection, mutually distinct and distinct from the parent."""
    picks = []
    while len(picks) < k:
        c = int(rng.integers(n))
        if c != parent_index and c not in picks:
            picks.append(c)
    return picks


def de_variant(variant, parent_index, genomes, fitnesses, params, lower, upper, rng):
    """Differential-evolution mutation plus binomial crossover.

    Parameters
    ----------
    variant : str
        One of ``DE_VARIANTS``.
    parent_index : int
        Row of the target vector in ``genomes``.
    genomes : ndarray, shape (n, dim)
        The current population; rows are candidate solutions.
    fitnesses : ndarray, shape (n,)
        Fitness of each row (minimization).
    params : OperatorParams
    lower, upper : float
        Search box.
    rng : numpy.random.Generator

    Randomness is consumed in a fixed order: each distinct partner row by
    drawing ``rng.integers(n)`` until the value differs from the parent row
    and the earlier picks; then one extra draw for the current-to-*
    variants (a uniform step weight, or an integer pick among the best
    rows); then ``rng.integers(dim)`` for the forced crossover column
    followed by ``rng.random(dim)`` recombination coins.

    Returns the trial genome, clamped to the box.  Raises
    ``OperatorInapplicableError`` when the population is too small for the
    variant's distinct picks.
    """
    if variant not in _DE_PICKS:
        raise ConfigurationError("unknown DE variant %r" % variant)
    n, dim = genomes.shape
    k = _DE_PICKS[variant]
    if n < k + 1:
        raise OperatorInapplicableError(
            "%s needs %d partners distinct from the parent, population has %d"
            % (variant, k, n)
        )
    r = draw_distinct_rows(parent_index, n, k, rng)
    f = params.de_scale
    x = genomes[parent_index]

    if variant == "best/1":
        best = int(np.argmin(fitnesses))
        v = genomes[best] + f * (genomes[r[0]] - genomes[r[1]])
    elif variant == "best/2":
        best = int(np.argmin(fitnesses))
        v = (genomes[best] + f * (genomes[r[0]] - genomes[r[1]])
             + f * (genomes[r[2]] - genomes[r[3]]))
    elif variant == "current-to-best/1":
        best = int(np.argmin(fitnesses))
        u = rng.random()
        v = x + u * (genomes[best] - x) + f * (genomes[r[0]] - genomes[r[1]])
    elif variant == "current-to-pbest/1":
        n_top = max(1, math.ceil(params.pbest_fraction * n))
        order = np.argsort(fitnesses, kind="stable")
        pbest = int(order[rng.integers(n_top)])
        v = x + f * (genomes[pbest] - x) + f * (genomes[r[0]] - genomes[r[1]])
    else:  # rand/2
        v = (genomes[r[0]] + f * (genomes[r[1]] - genomes[r[2]])
             + f * (genomes[r[3]] - genomes[r[4]]))

    j_rand = rng.integers(dim)
    coins = rng.random(dim)
    take = coins < params.de_cross
    take[j_rand] = True
    trial = np.where(take, v, x)
    return np.clip(trial, lower, upper)


def firefly(parent_index, genomes, fitnesses, params, lower, upper, rng):
    """Move the parent toward the best of a small sample of brighter corals.

    Distance is Euclidean, normalized by width*sqrt(dim) so the default
    absorption behaves uniformly across domains.  When nothing in the reef
    is strictly better, only the random walk term applies.
    """
    n, dim = genomes.shape
    x = genomes[parent_index]
    better = np.flatnonzero(fitnesses < fitnesses[parent_index])
    step = 0.0
    if better.size:
        sample = rng.choice(better, size=min(5, better.size), replace=False)
        target = int(sample[np.argmin(fitnesses[sample])])
        xj = genomes[target]
        width = upper - lower
        r2 = float(np.sum((xj - x) ** 2)) / (width * width * dim)
        step = params.firefly_beta0 * math.exp(-params.firefly_gamma * r2) * (xj - x)
    noise = rng.uniform(-0.5, 0.5, dim)
    return np.clip(x + step + params.firefly_alpha * noise, lower, upper)


def two_point(parent, mate, rng):
    """Replace the segment between two distinct cut points with the mate's."""
    dim = parent.size
    if dim < 2:
        raise OperatorInapplicableError("two-point crossover needs dim >= 2")
    cuts = np.sort(rng.choice(dim + 1, size=2, replace=False))
    return splice(parent, mate, int(cuts[0]), int(cuts[1]))


def splice(parent, mate, c1, c2):
    """Parent with components (c1, c2] taken from the mate (0 <= c1 < c2 <= dim)."""
    child = parent.copy()
    child[c1:c2] = mate[c1:c2]
    return child


def blx(parent, mate, params, lower, upper, rng):
    """Blend crossover: each gene uniform on the parent interval widened by alpha."""
    lo = np.minimum(parent, mate)
    hi = np.maximum(parent, mate)
    spread = params.blx_alpha * (hi - lo)
    child = rng.uniform(lo - spread, hi + spread)
    return np.clip(child, lower, upper)


def gaussian_sigma(generation, total_generations, sigma_start, sigma_end):
    """Mutation width, interpolated linearly from start (gen 0) to end."""
    if total_generations < 1:
        raise ConfigurationError("total_generations must be >= 1")
    frac = min(1.0, max(0.0, generation / total_generations))
    return sigma_start + (sigma_end - sigma_start) * frac


def gaussian(parent, generation, total_generations, params, lower, upper, rng):
    """Gaussian mutation whose width shrinks over the run."""
    sigma = gaussian_sigma(generation, total_generations,
                           params.gm_sigma_start, params.gm_sigma_end)
    return np.clip(parent + sigma * rng.standard_normal(parent.size), lower, upper)


def cauchy(parent, params, lower, upper, rng):
    """Heavy-tailed mutation: scale times a standard Cauchy draw per component."""
    delta = params.cauchy_t * rng.standard_cauchy(parent.size)
    return np.clip(parent + params.cauchy_scale * delta, lower, upper)


class SubstrateBank:
    """A named, ordered collection of substrate operators.

    The bank owns one parameter set and the search box; ``produce`` applies
    the operator at a tag index to a parent drawn from the population
    snapshot.  Mates for the crossovers are picked uniformly from the rest
    of the population.
    """

    def __init__(self, names, params, lower, upper):
        names = list(names)
        if not names:
            raise ConfigurationError("substrate list must not be empty")
        for name in names:
            if name not in OPERATOR_NAMES:
                raise ConfigurationError(
                    "unknown substrate %r (known: %s)" % (name, ", ".join(OPERATOR_NAMES))
                )
        self.names = names
        self.params = params
        self.lower = float(lower)
        self.upper = float(upper)

    @property
    def n_substrates(self):
        return len(self.names)

    def _pick_mate(self, parent_index, n, rng):
        if n < 2:
            raise OperatorInapplicableError("crossover needs at least two corals")
        others = np.delete(np.arange(n), parent_index)
        return int(others[rng.integers(others.size)])

    def produce(self, tag, parent_index, genomes, fitnesses, generation,
                total_generations, rng):
        """Apply substrate ``tag`` to one parent; returns the child genome."""
        if not 0 <= tag < len(self.names):
            raise ConfigurationError("substrate tag %r out of range" % (tag,))
        name = self.names[tag]
        n = genomes.shape[0]
        parent = genomes[parent_index]
        if name.startswith("de/"):
            return de_variant(name[3:], parent_index, genomes, fitnesses,
                              self.params, self.lower, self.upper, rng)
        if name == "firefly":
            return firefly(parent_index, genomes, fitnesses, self.params,
                           self.lower, self.upper, rng)
        if name == "2px":
            mate = self._pick_mate(parent_index, n, rng)
            child = two_point(parent, genomes[mate], rng)
            return np.clip(child, self.lower, self.upper)
        if name == "blx":
            mate = self._pick_mate(parent_index, n, rng)
            return blx(parent, genomes[mate], self.params, self.lower, self.upper, rng)
        if name == "gaussian":
            return gaussian(parent, generation, total_generations, self.params,
                            self.lower, self.upper, rng)
        return cauchy(parent, self.params, self.lower, self.upper, rng)
