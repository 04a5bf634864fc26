"""Turbine-layout objective: power curve, wake interaction, AEP, feasibility.

The scenario is a circular site on flat terrain: turbines must stay inside
the boundary radius and at least two rotor diameters apart.  The wind rose
has 16 direction bins with a fixed free-stream speed; directions are
meteorological bearings (degrees the wind comes from, 0 = north, clockwise).

Wakes use the simplified Gaussian deficit with constant thrust coefficient
8/9 and linear expansion k = 0.0324555 of the rotor-scaled width
sigma = k * downwind + D / sqrt(8); the fractional deficit at a downwind
turbine is (1 - sqrt(1 - CT / (8 (sigma/D)^2))) * exp(-(crosswind)^2 / (2 sigma^2)),
and deficits from several upstream turbines combine as the root sum of
squares.  Annual energy is sum_i f_i * P_i * 8760 in MWh.
"""

import json
import math
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from .errors import ConfigurationError
from .objective import BoundedObjective

HOURS_PER_YEAR = 8760.0
THRUST_COEFFICIENT = 8.0 / 9.0
WAKE_EXPANSION = 0.0324555
DEFAULT_SCENARIO_RESOURCE = "iea37_16turbine.json"
DEFAULT_PENALTY_WEIGHT = 100.0  # MWh per meter of violation


@dataclass
class TurbineSpec:
    """Cut-in/rated/cut-out speeds in m/s, rating in MW, diameter in m."""

    rotor_diameter: float = 130.0
    rating_mw: float = 3.35
    cut_in: float = 4.0
    rated: float = 9.8
    cut_out: float = 25.0

    def __post_init__(self):
        if not self.cut_in < self.rated < self.cut_out:
            raise ConfigurationError("need cut_in < rated < cut_out")
        if self.rotor_diameter <= 0 or self.rating_mw <= 0:
            raise ConfigurationError("rotor_diameter and rating_mw must be > 0")


class WindRose:
    """16 direction bins with frequencies summing to one."""

    N_BINS = 16

    def __init__(self, directions_deg, frequencies, free_stream=9.8):
        self.directions_deg = np.asarray(directions_deg, dtype=float)
        self.frequencies = np.asarray(frequencies, dtype=float)
        self.free_stream = float(free_stream)
        if self.directions_deg.shape != (self.N_BINS,) \
                or self.frequencies.shape != (self.N_BINS,):
            raise ConfigurationError("wind rose needs exactly %d bins" % self.N_BINS)
        if abs(self.frequencies.sum() - 1.0) > 1e-9:
            raise ConfigurationError("wind rose frequencies must sum to 1")
        if self.free_stream <= 0:
            raise ConfigurationError("free_stream must be > 0")


def default_wind_rose():
    return default_scenario().rose


@dataclass
class Scenario:
    """Site geometry plus the turbine and wind resource."""

    boundary_radius: float = 1300.0
    n_turbines: int = 16
    turbine: TurbineSpec = field(default_factory=TurbineSpec)
    rose: WindRose = None

    def __post_init__(self):
        if self.boundary_radius <= 0 or self.n_turbines < 1:
            raise ConfigurationError("boundary_radius and n_turbines must be positive")
        if self.rose is None:
            self.rose = default_scenario().rose

    @property
    def min_separation(self):
        """Two rotor diameters."""
        return 2.0 * self.turbine.rotor_diameter


def load_scenario(path):
    """Read a scenario file (JSON with a 16-row [direction, frequency] rose)."""
    with open(path) as f:
        return _scenario_from_dict(json.load(f))


def save_scenario(scenario, path):
    doc = {
        "boundary_radius": scenario.boundary_radius,
        "n_turbines": scenario.n_turbines,
        "turbine": {
            "rotor_diameter": scenario.turbine.rotor_diameter,
            "rating_mw": scenario.turbine.rating_mw,
            "cut_in": scenario.turbine.cut_in,
            "rated": scenario.turbine.rated,
            "cut_out": scenario.turbine.cut_out,
        },
        "free_stream": scenario.rose.free_stream,
        "wind_rose": [
            [float(d), float(f)]
            for d, f in zip(scenario.rose.directions_deg, scenario.rose.frequencies)
        ],
    }
    with open(path, "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")


def _scenario_from_dict(doc):
    rose_rows = doc["wind_rose"]
    rose = WindRose(
        [row[0] for row in rose_rows],
        [row[1] for row in rose_rows],
        doc.get("free_stream", 9.8),
    )
    return Scenario(
        boundary_radius=doc["boundary_radius"],
        n_turbines=doc["n_turbines"],
        turbine=TurbineSpec(**doc["turbine"]),
        rose=rose,
    )


def default_scenario():
    """The bundled 16-turbine, 1300 m circular scenario."""
    text = resources.files("reefopt").joinpath("data", DEFAULT_SCENARIO_RESOURCE).read_text()
    return _scenario_from_dict(json.loads(text))


def power_curve(speed, spec):
    """Turbine power in MW at one wind speed in m/s.

    Zero below cut-in and above cut-out, cubic ramp between cut-in and
    rated, flat at the rating in between.
    """
    v = float(speed)
    if v < 0:
        raise ValueError("wind speed must be >= 0")
    if v < spec.cut_in or v > spec.cut_out:
        return 0.0
    if v < spec.rated:
        return spec.rating_mw * ((v - spec.cut_in) / (spec.rated - spec.cut_in)) ** 3
    return spec.rating_mw


def _power_curve_vec(speeds, spec):
    v = np.asarray(speeds, dtype=float)
    ramp = spec.rating_mw * ((v - spec.cut_in) / (spec.rated - spec.cut_in)) ** 3
    p = np.where(v < spec.rated, ramp, spec.rating_mw)
    return np.where((v < spec.cut_in) | (v > spec.cut_out), 0.0, p)


def wake_losses(layout, direction_deg, rotor_diameter):
    """Fractional wind-speed loss at each turbine for one wind bearing."""
    xy = np.asarray(layout, dtype=float)
    a = math.radians(270.0 - direction_deg)
    ca, sa = math.cos(a), math.sin(a)
    dw = xy[:, 0] * ca + xy[:, 1] * sa
    cw = -xy[:, 0] * sa + xy[:, 1] * ca
    ddw = dw[:, None] - dw[None, :]  # [i, j] > 0 when i is downwind of j
    dcw = cw[:, None] - cw[None, :]
    downwind = ddw > 0.0
    sigma = np.where(downwind, WAKE_EXPANSION * ddw, 0.0) \
        + rotor_diameter / math.sqrt(8.0)
    radicand = 1.0 - THRUST_COEFFICIENT / (8.0 * (sigma / rotor_diameter) ** 2)
    deficit = (1.0 - np.sqrt(radicand)) * np.exp(-0.5 * (dcw / sigma) ** 2)
    deficit = np.where(downwind, deficit, 0.0)
    return np.sqrt(np.sum(deficit * deficit, axis=1))


def farm_power(layout, direction_index, rose, spec):
    """Total farm power in MW for one wind-rose bin."""
    loss = wake_losses(layout, float(rose.directions_deg[direction_index]),
                       spec.rotor_diameter)
    return float(np.sum(_power_curve_vec(rose.free_stream * (1.0 - loss), spec)))


def aep(layout, rose, spec):
    """Annual energy production in MWh/yr, frequency-weighted over all bins."""
    total = 0.0
    for i in range(rose.N_BINS):
        total += float(rose.frequencies[i]) * farm_power(layout, i, rose, spec)
    return total * HOURS_PER_YEAR


def wake_free_bound(scenario):
    """AEP if every turbine always saw the undisturbed free stream."""
    return (scenario.n_turbines
            * power_curve(scenario.rose.free_stream, scenario.turbine)
            * HOURS_PER_YEAR)


@dataclass
class FeasibilityReport:
    feasible: bool
    boundary_violations: list  # (turbine index, meters beyond the boundary)
    spacing_violations: list   # (i, j, meters short of the minimum)


def check_feasibility(layout, scenario):
    """List every boundary and spacing violation with its magnitude in meters."""
    xy = np.asarray(layout, dtype=float)
    boundary = []
    radii = np.hypot(xy[:, 0], xy[:, 1])
    for i, r in enumerate(radii):
        if r > scenario.boundary_radius:
            boundary.append((i, float(r - scenario.boundary_radius)))
    spacing = []
    min_sep = scenario.min_separation
    n = xy.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            d = math.hypot(xy[i, 0] - xy[j, 0], xy[i, 1] - xy[j, 1])
            if d < min_sep:
                spacing.append((i, j, float(min_sep - d)))
    return FeasibilityReport(not boundary and not spacing, boundary, spacing)


def decode_genome(genome, scenario, boundary_weight=DEFAULT_PENALTY_WEIGHT,
                  spacing_weight=DEFAULT_PENALTY_WEIGHT):
    """Consecutive genome pairs become (x, y); returns (layout, penalty).

    The penalty is the weighted sum of violation meters, zero exactly when
    the layout is feasible.
    """
    genome = np.asarray(genome, dtype=float)
    expected = 2 * scenario.n_turbines
    if genome.shape != (expected,):
        raise ValueError("genome must have length %d, got %s" % (expected, genome.shape))
    layout = genome.reshape(scenario.n_turbines, 2)
    report = check_feasibility(layout, scenario)
    penalty = boundary_weight * sum(m for _, m in report.boundary_violations) \
        + spacing_weight * sum(m for _, _, m in report.spacing_violations)
    return layout, penalty


def windfarm_objective(scenario, boundary_weight=DEFAULT_PENALTY_WEIGHT,
                       spacing_weight=DEFAULT_PENALTY_WEIGHT):
    """Penalized negative AEP as a minimization objective over the square box."""
    def evaluate(genome):
        layout, penalty = decode_genome(genome, scenario, boundary_weight,
                                        spacing_weight)
        return -aep(layout, scenario.rose, scenario.turbine) + penalty

    r = scenario.boundary_radius
    return BoundedObjective("windfarm", 2 * scenario.n_turbines, -r, r, evaluate)


def cauchy_local_search(objective, genome, budget, rng, step_scale=10.0,
                        genome_value=None):
    """Hill-climb with per-component Cauchy steps, accepting strict improvements.

    Spends exactly ``budget`` objective evaluations (plus one for the
    incumbent when its value is not supplied) and never returns anything
    worse than its input.
    """
    if budget < 1:
        raise ConfigurationError("local search budget must be >= 1")
    best = np.asarray(genome, dtype=float).copy()
    best_value = objective.evaluate(best) if genome_value is None else float(genome_value)
    for _ in range(budget):
        candidate = objective.clamp(best + step_scale * rng.standard_cauchy(best.size))
        value = objective.evaluate(candidate)
        if value < best_value:
            best, best_value = candidate, value
    return best, best_value


def write_layout_csv(layout, path):
    """Layout export with header i,x,y; indices are 1-based, units meters."""
    xy = np.asarray(layout, dtype=float)
    with open(path, "w") as f:
        f.write("i,x,y\n")
        for i, (x, y) in enumerate(xy, start=1):
            f.write("%d,%r,%r\n" % (i, float(x), float(y)))
