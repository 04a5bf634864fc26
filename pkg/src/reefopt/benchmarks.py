"""The 15-function benchmark suite as bounded objectives.

All functions take a 1-D float array and return a float (minimization).
The registry maps "F1".."F15" to builders with the conventional
[-100, 100]^N box and N=30 defaults.
"""

import math

import numpy as np

from .errors import ConfigurationError
from .objective import BoundedObjective

DEFAULT_DIM = 30
DEFAULT_LOWER = -100.0
DEFAULT_UPPER = 100.0


def sphere(x):
    """F1: sum of squares."""
    return float(np.sum(x * x))


def high_condition_elliptic(x):
    """F2: squared components weighted 10^(6(i-1)/(N-1))."""
    n = x.size
    weights = 10.0 ** (6.0 * np.arange(n) / (n - 1))
    return float(np.sum(weights * x * x))


def bent_cigar(x):
    """F3: x1^2 plus 10^6 times the remaining squares."""
    return float(x[0] * x[0] + 1e6 * np.sum(x[1:] * x[1:]))


def discus(x):
    """F4: 10^6 x1^2 plus the remaining squares."""
    return float(1e6 * x[0] * x[0] + np.sum(x[1:] * x[1:]))


def rosenbrock(x):
    """F5: banana valley; the (1 - x1)^2 term appears once."""
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2) + (1.0 - x[0]) ** 2)


def ackley(x):
    """F6: exponential well over the plain (not mean) square norm."""
    n = x.size
    return float(
        math.e
        - 20.0 * math.exp(-0.2 * math.sqrt(np.sum(x * x)))
        - math.exp(np.sum(np.cos(2.0 * math.pi * x)) / n)
        + 20.0
    )


_WEIERSTRASS_J = np.arange(1, 21)
_WEIERSTRASS_W = 0.5 ** _WEIERSTRASS_J
_WEIERSTRASS_F = 3.0 ** _WEIERSTRASS_J


def weierstrass20(x):
    """F7: Weierstrass series truncated at 20 terms, no origin shift."""
    phases = 2.0 * math.pi * np.outer(x + 0.5, _WEIERSTRASS_F)
    return float(np.sum(np.cos(phases) @ _WEIERSTRASS_W))


def griewank(x):
    """F8: quadratic bowl modulated by a cosine product."""
    i = np.arange(1, x.size + 1)
    return float(1.0 + np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))))


def rastrigin(x):
    """F9: 10N + sum of x^2 - 10cos(2 pi x)."""
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * math.pi * x)))


def _schwefel_g(xi, n):
    # piecewise branches read as |x| <= 500 / x > 500 / x < -500,
    # with sqrt taken of the (non-negative) reduced argument
    if -500.0 <= xi <= 500.0:
        return -xi * math.sin(math.sqrt(abs(xi)))
    quad = ((abs(xi) - 500.0) / (100.0 * n * n)) ** 2
    if xi > 500.0:
        m = math.fmod(xi, 500.0)
        return -(500.0 - m) * math.sin(math.sqrt(500.0 - m)) + quad
    m = math.fmod(-xi, 500.0)
    return (500.0 - m) * math.sin(math.sqrt(500.0 - m)) + quad


def modified_schwefel(x):
    """F10: N times the sum of the piecewise per-component map."""
    n = x.size
    return float(n * sum(_schwefel_g(float(xi), n) for xi in x))


def katsuura(x):
    """F11: 10/N^2 times a product of dyadic floor sums (k runs 1..N)."""
    n = x.size
    k = np.arange(1, n + 1)
    pow2 = 2.0 ** k
    inv2 = 2.0 ** -k
    inner = np.floor(np.outer(x, pow2)) @ inv2
    return float(10.0 / (n * n) * np.prod(1.0 + (np.arange(1, n + 1) + 1.0) * inner))


def happy_cat(x):
    """F12: |‖x‖²-N|^¼ plus the shifted linear-quadratic term."""
    n = x.size
    s2 = float(np.sum(x * x))
    sx = float(np.sum(x))
    return abs(s2 - n) ** 0.25 + (0.5 * s2 + sx) / n + 0.5


def hgbat(x):
    """F13: |‖x‖⁴-(Σx)²|^¼ plus the shifted linear-quadratic term."""
    n = x.size
    s2 = float(np.sum(x * x))
    sx = float(np.sum(x))
    return abs(s2 * s2 - sx * sx) ** 0.25 + (0.5 * s2 + sx) / n + 0.5


def griewank_rosenbrock(x):
    """F14: Griewank map of pairwise Rosenbrock terms, plus a Griewank of F5."""
    y = 100.0 * (x[:-1] ** 2 - x[1:]) + (x[:-1] - 1.0) ** 2
    g = float(np.sum(y * y / 4000.0 - np.cos(y) + 1.0))
    r = rosenbrock(x)
    return g + r * r / 4000.0 - math.cos(r) + 1.0


def exp_shaffer_f6(x):
    """F15: Schaffer-F6 ridge over consecutive pairs plus a wrap-around term."""
    n = x.size
    s = float(np.sum(x[:-1] ** 2 + x[1:] ** 2))
    first = (math.sin(math.sqrt(s)) ** 2 - 0.5) / (1.0 + 0.001 * s) ** 2
    t = (n - 1.0) ** 2 + float(x[0]) ** 2
    second = (math.sin(math.sqrt(t)) ** 2 - 0.5) / (1.0 + 0.001 * t) ** 2
    return 1.0 + first + second


BENCHMARKS = {
    "F1": (sphere, "Sphere"),
    "F2": (high_condition_elliptic, "High Condition Elliptic"),
    "F3": (bent_cigar, "Bent Cigar"),
    "F4": (discus, "Discus"),
    "F5": (rosenbrock, "Rosenbrock"),
    "F6": (ackley, "Ackley"),
    "F7": (weierstrass20, "Weierstrass (20 terms)"),
    "F8": (griewank, "Griewank"),
    "F9": (rastrigin, "Rastrigin"),
    "F10": (modified_schwefel, "Modified Schwefel"),
    "F11": (katsuura, "Katsuura"),
    "F12": (happy_cat, "Happy Cat"),
    "F13": (hgbat, "HGBat"),
    "F14": (griewank_rosenbrock, "Griewank plus Rosenbrock"),
    "F15": (exp_shaffer_f6, "Exp Shaffer F6"),
}


def benchmark_names():
    return list(BENCHMARKS)


def make_benchmark(name, dim=DEFAULT_DIM, lower=DEFAULT_LOWER, upper=DEFAULT_UPPER):
    """Build a counting objective for one suite function.

    The suite formulas need at least two components (F2's conditioning
    weights and the pairwise terms of F5/F14/F15 are undefined for N=1).
    """
    if name not in BENCHMARKS:
        raise ConfigurationError("unknown benchmark %r (known: F1..F15)" % name)
    if dim < 2:
        raise ConfigurationError("benchmark dimension must be >= 2, got %r" % dim)
    func, _ = BENCHMARKS[name]
    return BoundedObjective(name, dim, lower, upper, func)
