"""Each substrate operator applied to the same parent, side by side.

Run:  python3 demos/02_operator_bank.py
"""

import numpy as np

from reefopt import OperatorParams, SubstrateBank

LOWER, UPPER = -10.0, 10.0

rng = np.random.default_rng(3)
genomes = rng.uniform(LOWER, UPPER, (8, 5))
fitnesses = np.array([np.sum(g * g) for g in genomes])
parent = int(np.argmax(fitnesses))  # mutate the worst coral

params = OperatorParams.for_domain(LOWER, UPPER)
bank = SubstrateBank(
    ["de/best/1", "de/best/2", "de/current-to-best/1", "de/current-to-pbest/1",
     "de/rand/2", "firefly", "2px", "blx", "gaussian", "cauchy"],
    params, LOWER, UPPER)

print("population of 8, dim 5, parent = worst row (index %d)" % parent)
print("parent: %s\n" % np.array2string(genomes[parent], precision=2))

print("%-22s %s" % ("substrate", "child genome"))
for tag, name in enumerate(bank.names):
    child = bank.produce(tag, parent, genomes, fitnesses, generation=0,
                         total_generations=100, rng=np.random.default_rng(42))
    print("%-22s %s" % (name, np.array2string(child, precision=2)))

print("""
Notes
-----
- The DE variants recombine the mutant with the parent column-wise, so some
  components stay the parent's (compare against the parent row above).
- The firefly move pulls the parent toward a brighter sample; the gaussian
  mutation at generation 0 uses its widest step (0.2 of the box width).
- Every child respects the box [%g, %g] exactly.
""" % (LOWER, UPPER))
