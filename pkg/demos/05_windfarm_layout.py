"""The turbine-layout objective end to end: scoring, feasibility, optimizing.

Run:  python3 demos/05_windfarm_layout.py     (about 20 s)
"""

import numpy as np

from reefopt import (
    ExperimentConfig,
    aep,
    check_feasibility,
    decode_genome,
    default_scenario,
    run_experiment,
    wake_free_bound,
    write_layout_csv,
)

scenario = default_scenario()
bound = wake_free_bound(scenario)
print("site: radius %g m, %d turbines, min separation %g m"
      % (scenario.boundary_radius, scenario.n_turbines, scenario.min_separation))
print("wake-free bound: %.0f MWh/yr (every turbine at the free stream)\n" % bound)

# a published high-quality layout for this site, as a scoring reference
reference = np.array([
    [-335.6, 1255.7], [1273.3, -261.8], [1210.0, 356.3], [-521.1, 98.0],
    [-798.7, -1003.0], [-226.9, -1125.9], [124.6, 548.6], [1018.1, -798.7],
    [-1233.3, -375.5], [-975.6, 831.4], [805.6, 1019.8], [676.7, 684.4],
    [-1098.8, 237.8], [549.4, -109.7], [353.1, -1250.9], [-98.7, -556.0],
])
report = check_feasibility(reference, scenario)
value = aep(reference, scenario.rose, scenario.turbine)
print("reference layout: feasible=%s, AEP %.1f MWh/yr (%.1f%% of the bound)\n"
      % (report.feasible, value, 100 * value / bound))

print("optimizing with the adaptive ensemble (20k evaluations)...")
config = ExperimentConfig.from_dict({
    "objective": {"scenario": "default"},
    "variant": "dpcro-sl",
    "budget": 20_000,
    "repetitions": 1,
    "base_seed": 7,
})
summary, _ = run_experiment(config)
layout, penalty = decode_genome(summary.best_genome, scenario)
found = aep(layout, scenario.rose, scenario.turbine)
print("found: feasible=%s (penalty %g), AEP %.1f MWh/yr (%.1f%% of the bound)"
      % (check_feasibility(layout, scenario).feasible, penalty, found,
         100 * found / bound))

write_layout_csv(layout, "windfarm_layout.csv")
print("\nwrote windfarm_layout.csv (columns i,x,y in meters)")
print("longer budgets close in on the reference; the run above is a taste.")
