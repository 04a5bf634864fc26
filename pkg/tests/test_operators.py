import numpy as np
import pytest

from reefopt.errors import ConfigurationError, OperatorInapplicableError
from reefopt.operators import (
    DE_VARIANTS,
    OperatorParams,
    SubstrateBank,
    blx,
    cauchy,
    de_variant,
    draw_distinct_rows,
    firefly,
    gaussian,
    gaussian_sigma,
    splice,
    two_point,
)

from de_oracle import oracle_de_variant

LOWER, UPPER = -100.0, 100.0


def random_population(rng, n, dim):
    genomes = rng.uniform(LOWER, UPPER, (n, dim))
    fitnesses = rng.uniform(-10, 10, n)
    return genomes, fitnesses


def test_de_matches_formula_oracle_bitwise():
    pool_rng = np.random.default_rng(2024)
    params = OperatorParams.for_domain(LOWER, UPPER)
    for trial in range(200):
        n = int(pool_rng.integers(6, 12))
        dim = int(pool_rng.integers(2, 7))
        genomes, fitnesses = random_population(pool_rng, n, dim)
        parent = int(pool_rng.integers(n))
        for variant in DE_VARIANTS:
            seed = 10_000 + trial
            got = de_variant(variant, parent, genomes, fitnesses, params,
                             LOWER, UPPER, np.random.default_rng(seed))
            want = oracle_de_variant(variant, parent, genomes, fitnesses, params,
                                     LOWER, UPPER, np.random.default_rng(seed))
            assert np.array_equal(got, np.array(want)), variant


def test_best1_arithmetic_example():
    # population rows: parent, best=(1,1), (2,0), (0,2); with picks (2,3)
    # the mutant is (1,1) + 0.5*((2,0)-(0,2)) = (2,0)
    genomes = np.array([[9.0, 9.0], [1.0, 1.0], [2.0, 0.0], [0.0, 2.0]])
    fitnesses = np.array([9.0, 0.0, 1.0, 2.0])
    params = OperatorParams(de_scale=0.5, de_cross=1.0)
    seen = set()
    for seed in range(60):
        rng = np.random.default_rng(seed)
        picks = tuple(draw_distinct_rows(0, 4, 2, np.random.default_rng(seed)))
        out = de_variant("best/1", 0, genomes, fitnesses, params, LOWER, UPPER, rng)
        if picks == (2, 3):
            assert np.array_equal(out, [2.0, 0.0])
            seen.add(picks)
    assert (2, 3) in seen


def test_crossover_rate_boundaries():
    rng = np.random.default_rng(5)
    genomes = np.vstack([np.full(8, 50.0), rng.uniform(-1, 1, (5, 8))])
    fitnesses = np.array([9.0, 0.0, 1.0, 2.0, 3.0, 4.0])
    full = OperatorParams(de_cross=1.0)
    none = OperatorParams(de_cross=0.0)
    for seed in range(50):
        trial = de_variant("best/1", 0, genomes, fitnesses, full, LOWER, UPPER,
                           np.random.default_rng(seed))
        assert not np.any(trial == 50.0)  # every component from the mutant
        trial = de_variant("best/1", 0, genomes, fitnesses, none, LOWER, UPPER,
                           np.random.default_rng(seed))
        assert np.sum(trial != 50.0) == 1  # only the forced column


def test_de_population_too_small():
    genomes, fitnesses = random_population(np.random.default_rng(0), 5, 3)
    params = OperatorParams()
    with pytest.raises(OperatorInapplicableError):
        de_variant("rand/2", 0, genomes, fitnesses, params, LOWER, UPPER,
                   np.random.default_rng(1))
    with pytest.raises(OperatorInapplicableError):
        de_variant("best/2", 0, genomes[:4], fitnesses[:4], params, LOWER, UPPER,
                   np.random.default_rng(1))


def test_distinct_row_draws():
    rng = np.random.default_rng(123)
    for _ in range(300):
        n = int(rng.integers(6, 15))
        parent = int(rng.integers(n))
        picks = draw_distinct_rows(parent, n, 5, rng)
        assert len(set(picks)) == 5
        assert parent not in picks


def test_firefly_full_step_when_gamma_zero():
    genomes = np.array([[0.0, 0.0], [1.0, 1.0]])
    fitnesses = np.array([1.0, 0.0])
    params = OperatorParams(firefly_gamma=0.0, firefly_alpha=0.0)
    out = firefly(0, genomes, fitnesses, params, LOWER, UPPER,
                  np.random.default_rng(0))
    assert np.array_equal(out, [1.0, 1.0])


def test_firefly_vanishing_attraction_at_high_gamma():
    genomes = np.array([[0.0, 0.0], [50.0, 50.0]])
    fitnesses = np.array([1.0, 0.0])
    params = OperatorParams(firefly_gamma=1e12, firefly_alpha=0.0)
    out = firefly(0, genomes, fitnesses, params, LOWER, UPPER,
                  np.random.default_rng(0))
    assert np.array_equal(out, [0.0, 0.0])


def test_firefly_best_parent_only_random_walk():
    genomes = np.array([[3.0, -4.0], [50.0, 50.0], [-20.0, 10.0]])
    fitnesses = np.array([0.0, 1.0, 2.0])
    params = OperatorParams(firefly_alpha=0.0)
    out = firefly(0, genomes, fitnesses, params, LOWER, UPPER,
                  np.random.default_rng(3))
    assert np.array_equal(out, genomes[0])


def test_firefly_attractor_is_strictly_better():
    genomes = np.array([[0.0, 0.0], [10.0, 10.0], [-10.0, -10.0]])
    fitnesses = np.array([1.0, 1.0, 0.5])  # only row 2 is brighter
    params = OperatorParams(firefly_alpha=0.0, firefly_gamma=0.0, firefly_beta0=0.5)
    out = firefly(0, genomes, fitnesses, params, LOWER, UPPER,
                  np.random.default_rng(0))
    assert np.array_equal(out, [-5.0, -5.0])


def test_two_point_splice_examples():
    parent = np.array([1.0, 2.0, 3.0, 4.0, 5.0])
    mate = np.array([6.0, 7.0, 8.0, 9.0, 10.0])
    assert np.array_equal(splice(parent, mate, 1, 3), [1.0, 7.0, 8.0, 4.0, 5.0])
    assert np.array_equal(splice(parent, mate, 0, 5), mate)
    assert np.array_equal(splice(parent, parent, 1, 4), parent)


def test_two_point_cut_distribution_and_replay():
    parent = np.arange(6, dtype=float)
    mate = 10.0 + np.arange(6, dtype=float)
    for seed in range(100):
        cuts = np.sort(np.random.default_rng(seed).choice(7, size=2, replace=False))
        child = two_point(parent, mate, np.random.default_rng(seed))
        assert cuts[0] < cuts[1]
        assert np.array_equal(child, splice(parent, mate, int(cuts[0]), int(cuts[1])))
    with pytest.raises(OperatorInapplicableError):
        two_point(np.array([1.0]), np.array([2.0]), np.random.default_rng(0))


def test_blx_interval():
    params = OperatorParams(blx_alpha=0.5)
    parent = np.zeros(2000)
    mate = np.ones(2000)
    child = blx(parent, mate, params, LOWER, UPPER, np.random.default_rng(8))
    assert np.all(child >= -0.5) and np.all(child <= 1.5)
    assert np.any(child < 0.0) and np.any(child > 1.0)  # widened beyond parents


def test_blx_degenerate_and_contained():
    params0 = OperatorParams(blx_alpha=0.0)
    rng = np.random.default_rng(1)
    parent = rng.uniform(-50, 50, 30)
    same = blx(parent, parent, OperatorParams(), LOWER, UPPER, rng)
    assert np.array_equal(same, parent)
    mate = rng.uniform(-50, 50, 30)
    child = blx(parent, mate, params0, LOWER, UPPER, rng)
    assert np.all(child >= np.minimum(parent, mate))
    assert np.all(child <= np.maximum(parent, mate))


def test_gaussian_sigma_schedule():
    # box [-5, 5]: width 10, so the schedule runs 2.0 -> 0.2
    params = OperatorParams.for_domain(-5.0, 5.0)
    assert params.gm_sigma_start == 2.0
    assert params.gm_sigma_end == pytest.approx(0.2)
    assert gaussian_sigma(0, 100, 2.0, 0.2) == 2.0
    assert gaussian_sigma(100, 100, 2.0, 0.2) == pytest.approx(0.2)
    assert gaussian_sigma(50, 100, 2.0, 0.2) == pytest.approx(1.1)
    assert gaussian_sigma(250, 100, 2.0, 0.2) == pytest.approx(0.2)  # clamped late
    with pytest.raises(ConfigurationError):
        gaussian_sigma(0, 0, 2.0, 0.2)


def test_gaussian_perturbs_every_component():
    params = OperatorParams.for_domain(LOWER, UPPER)
    parent = np.zeros(50)
    out = gaussian(parent, 0, 10, params, LOWER, UPPER, np.random.default_rng(2))
    assert np.all(out != parent)
    assert np.all(out >= LOWER) and np.all(out <= UPPER)


def test_cauchy_zero_scale_is_identity():
    params = OperatorParams(cauchy_scale=0.0)
    parent = np.linspace(-5, 5, 20)
    out = cauchy(parent, params, LOWER, UPPER, np.random.default_rng(0))
    assert np.array_equal(out, parent)


def test_cauchy_median_and_tails():
    params = OperatorParams(cauchy_scale=1.0, cauchy_t=1.0)
    big = 1e18
    rng = np.random.default_rng(77)
    parent = np.zeros(1000)
    draws = np.concatenate([
        cauchy(parent, params, -big, big, rng) for _ in range(1000)
    ])
    lengths = np.abs(draws)
    assert abs(np.median(lengths) - 1.0) < 0.05  # |Cauchy| median equals t
    assert abs(np.mean(lengths > 10.0) - 0.0635) < 0.005


def test_all_operators_respect_bounds():
    lower, upper = -1.0, 1.0
    params = OperatorParams.for_domain(lower, upper, de_scale=1.9, blx_alpha=2.0)
    bank = SubstrateBank(
        ["de/best/1", "de/best/2", "de/current-to-best/1", "de/current-to-pbest/1",
         "de/rand/2", "firefly", "2px", "blx", "gaussian", "cauchy"],
        params, lower, upper)
    rng = np.random.default_rng(4)
    for _ in range(40):
        genomes = rng.uniform(lower, upper, (8, 5))
        fitnesses = rng.uniform(0, 1, 8)
        for tag in range(bank.n_substrates):
            out = bank.produce(tag, 0, genomes, fitnesses, 3, 10, rng)
            assert np.all(out >= lower) and np.all(out <= upper)


@pytest.mark.parametrize("dim", [2, 3, 4, 5, 6])
def test_crossover_keeps_at_least_one_mutant_component(dim):
    genomes = np.vstack([np.full(dim, 50.0), np.zeros(dim), np.ones(dim),
                         2.0 * np.ones(dim)])
    fitnesses = np.array([3.0, 0.0, 1.0, 2.0])
    for cr, exact in ((0.0, True), (0.3, False), (0.7, False)):
        params = OperatorParams(de_cross=cr)
        for seed in range(200):
            trial = de_variant("best/1", 0, genomes, fitnesses, params, LOWER,
                               UPPER, np.random.default_rng(seed))
            changed = int(np.sum(trial != 50.0))
            assert changed >= 1
            if exact:
                assert changed == 1  # only the forced column at CR=0


def test_operators_pure_given_rng_state():
    params = OperatorParams.for_domain(LOWER, UPPER)
    bank = SubstrateBank(["de/rand/2", "firefly", "2px", "blx", "gaussian", "cauchy"],
                         params, LOWER, UPPER)
    genomes, fitnesses = random_population(np.random.default_rng(9), 10, 6)
    for tag in range(bank.n_substrates):
        a = bank.produce(tag, 2, genomes, fitnesses, 1, 10, np.random.default_rng(55))
        b = bank.produce(tag, 2, genomes, fitnesses, 1, 10, np.random.default_rng(55))
        assert np.array_equal(a, b)


def test_operator_params_validation():
    with pytest.raises(ConfigurationError):
        OperatorParams(de_scale=2.5)
    with pytest.raises(ConfigurationError):
        OperatorParams(de_cross=1.5)
    with pytest.raises(ConfigurationError):
        OperatorParams(pbest_fraction=0.0)
    with pytest.raises(ConfigurationError):
        OperatorParams(gm_sigma_start=0.01, gm_sigma_end=0.02)
    with pytest.raises(ConfigurationError):
        SubstrateBank(["nope"], OperatorParams(), LOWER, UPPER)
    with pytest.raises(ConfigurationError):
        SubstrateBank([], OperatorParams(), LOWER, UPPER)
