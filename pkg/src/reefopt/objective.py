"""Box-bounded minimization objectives with evaluation accounting."""

import numpy as np

from .errors import ConfigurationError


class BoundedObjective:
    """A minimization objective on the box [lower, upper]^dim.

    Every call to :meth:`evaluate` increments :attr:`evaluations`, which is
    the single source of truth for budget accounting.  Maximization problems
    are negated before they get here.
    """

    def __init__(self, name, dim, lower, upper, func):
        if dim < 1:
            raise ConfigurationError("objective dimension must be >= 1, got %r" % dim)
        if not lower < upper:
            raise ConfigurationError("need lower < upper, got [%r, %r]" % (lower, upper))
        self.name = str(name)
        self.dim = int(dim)
        self.lower = float(lower)
        self.upper = float(upper)
        self._func = func
        self.evaluations = 0

    @property
    def width(self):
        return self.upper - self.lower

    def evaluate(self, x):
        """Evaluate one point, count the call, and return a float."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise ValueError(
                "%s expects a vector of length %d, got shape %s"
                % (self.name, self.dim, x.shape)
            )
        if not np.all(np.isfinite(x)):
            raise ValueError("%s got a non-finite input" % self.name)
        self.evaluations += 1
        return float(self._func(x))

    def clamp(self, x):
        return np.clip(x, self.lower, self.upper)

    def random_point(self, rng):
        return rng.uniform(self.lower, self.upper, self.dim)

    def reset_evaluations(self):
        self.evaluations = 0

    def __repr__(self):
        return "BoundedObjective(%s, dim=%d, box=[%g, %g])" % (
            self.name, self.dim, self.lower, self.upper,
        )
