"""Tour of the benchmark suite: the registry, notable points, and counting.

Run:  python3 demos/01_benchmark_suite.py
"""

import numpy as np

from reefopt import BENCHMARKS, make_benchmark

N = 30

print("The registry exposes fifteen box-bounded minimization problems:\n")
for name, (func, label) in BENCHMARKS.items():
    print("  %-4s %-28s f(0) = %.6g" % (name, label, func(np.zeros(N))))

print("""
Known anchor points (N = %d):
""" % N)
anchors = [
    ("F1", np.zeros(N), "origin minimum"),
    ("F5", np.ones(N), "all-ones valley floor"),
    ("F12", -np.ones(N), "norm^2 = N cancellation"),
    ("F7", np.zeros(N), "each series term hits a cosine trough"),
    ("F11", np.zeros(N), "every product factor collapses to 1"),
]
for name, point, note in anchors:
    value = BENCHMARKS[name][0](point)
    print("  %-4s at %-9s -> %-12.6g (%s)" % (
        name, "0" if not point.any() else ("1" if point[0] > 0 else "-1"),
        value, note))

print("""
Objectives wrap the raw functions with a box and an evaluation counter,
which is what the reef's budget accounting runs on:
""")
objective = make_benchmark("F9", dim=10, lower=-5, upper=5)
rng = np.random.default_rng(0)
for _ in range(5):
    objective.evaluate(objective.random_point(rng))
print("  %r used %d evaluations" % (objective, objective.evaluations))
