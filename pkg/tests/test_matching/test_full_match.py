import numpy as np
import pytest
from scipy.special import expit, logit

from confsel.errors import ContractError, MatchingError
from confsel.ir import Dataset
from confsel.matching import (FullMatch, MatchingConfig, distance_matrix, full_match,
                              ps_for_subset)


def test_one_treated_two_controls():
    ps = np.array([0.5, 0.4, 0.7])
    treatment = np.array([1., 0., 0.])
    match = full_match(ps, treatment)
    assert match.strata == ((0, 1, 2),)
    expected = abs(logit(0.5) - logit(0.4)) + abs(logit(0.5) - logit(0.7))
    assert match.total_distance == pytest.approx(expected)

def test_two_pairs():
    ps = expit(np.array([2.0, -2.0, 1.9, -1.9]))
    treatment = np.array([1., 1., 0., 0.])
    match = full_match(ps, treatment)
    assert match.strata == ((0, 2), (1, 3))
    assert list(match.stratum_of) == [0, 1, 0, 1]
    assert match.total_distance == pytest.approx(0.2)

def test_optimal_against_enumeration(random_instances, brute_force):
    config = MatchingConfig()
    for ps, treatment in random_instances:
        match = full_match(ps, treatment, config=config)
        distances, _, _ = distance_matrix(ps, treatment)
        costs = np.rint(distances * config.cost_scale).astype(np.int64)
        assert match.total_cost == brute_force(costs, treatment)
        match.check_structure(treatment)

def test_equal_cost_keeps_earliest_pairs():
    match = full_match(np.array([0.5, 0.5, 0.4, 0.6]), np.array([1., 1., 0., 0.]))
    assert match.strata == ((0, 2), (1, 3))

    match = full_match(np.array([0.4, 0.5, 0.6, 0.5]), np.array([0., 1., 0., 1.]))
    assert match.strata == ((0, 1), (2, 3))

def test_optimal_with_tied_scores(brute_force):
    rng = np.random.default_rng(2024)
    config = MatchingConfig()
    checked = 0
    while checked < 40:
        n = int(rng.integers(3, 8))
        treatment = (rng.random(n) < 0.5).astype(float)
        if treatment.min() == treatment.max():
            continue
        ps = rng.choice([0.3, 0.5, 0.7], n)
        match = full_match(ps, treatment, config=config)
        distances, _, _ = distance_matrix(ps, treatment)
        costs = np.rint(distances * config.cost_scale).astype(np.int64)
        assert match.total_cost == brute_force(costs, treatment)
        match.check_structure(treatment)
        assert match.strata == full_match(ps, treatment, config=config).strata
        checked += 1

def test_structure_on_larger_instances():
    rng = np.random.default_rng(77)
    for _ in range(10):
        n = int(rng.integers(20, 60))
        treatment = (rng.random(n) < 0.3).astype(float)
        treatment[:2] = [1., 0.]
        match = full_match(rng.uniform(0.01, 0.99, n), treatment)
        match.check_structure(treatment)
        assert sorted(i for s in match.strata for i in s) == list(range(n))

def test_affine_invariance(random_instances):
    for ps, treatment in random_instances[:30]:
        shifted = expit(2.0 * logit(ps) + 0.7)
        assert full_match(ps, treatment).strata == full_match(shifted, treatment).strata

def test_deterministic(random_instances):
    ps, treatment = random_instances[0]
    first = full_match(ps, treatment)
    second = full_match(ps, treatment)
    assert first.strata == second.strata
    assert first.total_cost == second.total_cost

def test_abs_ps_distance():
    ps = np.array([0.5, 0.4, 0.9, 0.85])
    treatment = np.array([1., 0., 1., 0.])
    match = full_match(ps, treatment, distance_kind='abs_ps')
    assert match.distance_kind == 'abs_ps'
    assert match.strata == ((0, 1), (2, 3))
    assert match.total_distance == pytest.approx(0.15)

def test_ratio_limits():
    ps = np.array([0.5, 0.4, 0.45, 0.6])
    treatment = np.array([1., 0., 0., 0.])
    with pytest.raises(MatchingError):
        full_match(ps, treatment, config=MatchingConfig(max_controls=2))
    match = full_match(ps, treatment, config=MatchingConfig(max_controls=3))
    assert match.R == 1

def test_clipping():
    ps = np.array([1.0, 0.0, 0.5])
    treatment = np.array([1., 0., 0.])
    distances, treated, controls = distance_matrix(ps, treatment, clip=1e-6)
    assert np.all(np.isfinite(distances))
    assert list(treated) == [0]
    assert list(controls) == [1, 2]
    assert distances[0, 0] == pytest.approx(2. * logit(1. - 1e-6))

def test_needs_both_classes():
    with pytest.raises(MatchingError):
        full_match(np.array([0.3, 0.4]), np.array([1., 1.]))
    with pytest.raises(ContractError):
        full_match(np.array([0.3, 1.4]), np.array([1., 0.]))

def test_check_structure_rejects_bad_strata():
    treatment = np.array([1., 1., 0., 0.])
    with pytest.raises(MatchingError):
        FullMatch.from_stratum_ids([0, 0, 0, 0]).check_structure(treatment)
    with pytest.raises(MatchingError):
        FullMatch.from_stratum_ids([0, 0, 1, 1]).check_structure(treatment)
    FullMatch.from_stratum_ids([0, 1, 0, 1]).check_structure(treatment)

def test_ps_for_empty_subset():
    data = Dataset(
        covariates=np.arange(10, dtype=float).reshape(5, 2),
        covariate_labels=['a', 'b'],
        treatment=[1., 0., 0., 1., 0.],
        outcome=np.zeros(5),
    )
    assert np.allclose(ps_for_subset(data, []), 0.4)
