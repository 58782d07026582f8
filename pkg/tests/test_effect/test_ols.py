import numpy as np
import pytest

from confsel.effect import EffectConfig, estimate_orbits, ols_effect
from confsel.errors import ContractError, DegenerateDesignError
from confsel.ir import Dataset


def test_matches_direct_regression(confounded_data):
    data = confounded_data
    estimate = ols_effect(data, [0, 1])
    design = np.column_stack([np.ones(data.n), data.treatment, data.covariates[:, :2]])
    expected = np.linalg.lstsq(design, data.outcome, rcond=None)[0][1]
    assert estimate.psi_hat == pytest.approx(expected, rel=1e-8)
    assert estimate.weights_used is None
    assert np.isnan(estimate.max_weight)

def test_perfect_fit(confounded_data):
    data = Dataset(
        covariates=confounded_data.covariates,
        covariate_labels=confounded_data.covariate_labels,
        treatment=confounded_data.treatment,
        outcome=2. * confounded_data.treatment,
    )
    estimate = ols_effect(data, [0])
    assert estimate.psi_hat == pytest.approx(2.)
    assert np.max(np.abs(estimate.influence)) < 1e-8

def test_influence_centered_small():
    rng = np.random.default_rng(8)
    data = Dataset(
        covariates=rng.standard_normal((8, 1)),
        covariate_labels=['L'],
        treatment=[0., 1., 0., 1., 1., 0., 1., 0.],
        outcome=rng.standard_normal(8),
    )
    estimate = ols_effect(data, [0])
    assert abs(estimate.influence.mean()) < 1e-8

def test_binary_outcome_rejected(confounded_data):
    data = Dataset(
        covariates=confounded_data.covariates,
        covariate_labels=confounded_data.covariate_labels,
        treatment=confounded_data.treatment,
        outcome=(confounded_data.outcome > 1.).astype(float),
        outcome_kind='binary',
    )
    with pytest.raises(ContractError):
        ols_effect(data, [0])
    with pytest.raises(ContractError):
        estimate_orbits(data, [[0]], EffectConfig(estimator_kind='ols_linear'))

def test_treatment_explained_by_covariates(confounded_data):
    covariates = np.column_stack([confounded_data.covariates, confounded_data.treatment])
    data = Dataset(
        covariates=covariates,
        covariate_labels=confounded_data.covariate_labels + ['A_copy'],
        treatment=confounded_data.treatment,
        outcome=confounded_data.outcome,
    )
    with pytest.raises(DegenerateDesignError):
        ols_effect(data, [3])
