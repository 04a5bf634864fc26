"""Straight-from-the-formula oracle for the DE variants.

Everything is computed with plain scalar loops from the mutation and
crossover definitions; only the generator calls mirror the library's
documented draw protocol, so a run with an identically seeded generator
must reproduce the library output bit for bit.
"""

import math


def oracle_de_variant(variant, parent_index, genomes, fitnesses, params,
                      lower, upper, rng):
    n, dim = genomes.shape
    k = {"best/1": 2, "best/2": 4, "current-to-best/1": 2,
         "current-to-pbest/1": 2, "rand/2": 5}[variant]

    # draw protocol: rejection-sample distinct rows, then variant extras,
    # then the forced column and the recombination coins
    picks = []
    while len(picks) < k:
        c = int(rng.integers(n))
        if c != parent_index and c not in picks:
            picks.append(c)

    f = params.de_scale
    x = genomes[parent_index]

    best = 0
    for i in range(1, n):
        if fitnesses[i] < fitnesses[best]:
            best = i

    v = [0.0] * dim
    if variant == "best/1":
        a, b = picks
        for j in range(dim):
            v[j] = genomes[best][j] + f * (genomes[a][j] - genomes[b][j])
    elif variant == "best/2":
        a, b, c, d = picks
        for j in range(dim):
            v[j] = (genomes[best][j] + f * (genomes[a][j] - genomes[b][j])
                    + f * (genomes[c][j] - genomes[d][j]))
    elif variant == "current-to-best/1":
        a, b = picks
        u = rng.random()
        for j in range(dim):
            v[j] = (x[j] + u * (genomes[best][j] - x[j])
                    + f * (genomes[a][j] - genomes[b][j]))
    elif variant == "current-to-pbest/1":
        a, b = picks
        n_top = max(1, math.ceil(params.pbest_fraction * n))
        order = sorted(range(n), key=lambda i: fitnesses[i])  # stable
        pbest = order[int(rng.integers(n_top))]
        for j in range(dim):
            v[j] = (x[j] + f * (genomes[pbest][j] - x[j])
                    + f * (genomes[a][j] - genomes[b][j]))
    else:  # rand/2
        a, b, c, d, e = picks
        for j in range(dim):
            v[j] = (genomes[a][j] + f * (genomes[b][j] - genomes[c][j])
                    + f * (genomes[d][j] - genomes[e][j]))

    j_rand = int(rng.integers(dim))
    coins = rng.random(dim)
    trial = [0.0] * dim
    for j in range(dim):
        source = v[j] if (coins[j] < params.de_cross or j == j_rand) else x[j]
        trial[j] = min(max(source, lower), upper)
    return trial
