import numpy as np
import pytest

from confsel.effect import (EffectConfig, EffectEstimate, EstimatorRegistry, diff_variance,
                            dr_effect, estimate_orbits)
from confsel.errors import ContractError


def _estimate(psi, influence, kind='doubly_robust_standardization', orbit=1):
    return EffectEstimate(orbit_index=orbit, psi_hat=psi, influence=influence, estimator_kind=kind)


def test_hand_variance():
    e_j = _estimate(1.5, [1., -1., 1., -1.], orbit=1)
    e_k = _estimate(0.5, [0., 0., 0., 0.], orbit=2)
    result = diff_variance(e_j, e_k)
    assert result.variance == pytest.approx(4. / 3.)
    assert result.difference == pytest.approx(1.)
    assert result.std_diff == pytest.approx(1. / np.sqrt(4. / 3. / 4.))
    assert result.defined

def test_same_orbit_undefined():
    e = _estimate(1., [0.5, -0.2, -0.3], orbit=3)
    result = diff_variance(e, e)
    assert result.variance == 0.
    assert not result.defined
    assert np.isnan(result.std_diff)

def test_reduces_to_own_variance(confounded_data):
    e = dr_effect(confounded_data, [0])
    zero = _estimate(0., np.zeros(confounded_data.n))
    assert diff_variance(e, zero).variance == pytest.approx(e.variance)

def test_contract():
    with pytest.raises(ContractError):
        diff_variance(_estimate(0., [1., -1.]), _estimate(0., [1., -1.], kind='ols_linear'))
    with pytest.raises(ContractError):
        diff_variance(_estimate(0., [1., -1.]), _estimate(0., [1., 0., -1.]))

def test_estimate_orbits_indexes(confounded_data):
    estimates = estimate_orbits(confounded_data, [[0], [0, 1], [0, 1, 2]])
    assert [e.orbit_index for e in estimates] == [1, 2, 3]
    assert [e.subset for e in estimates] == [(0,), (0, 1), (0, 1, 2)]
    ols = estimate_orbits(confounded_data, [[0]], EffectConfig(estimator_kind='ols_linear'))
    assert ols[0].estimator_kind == 'ols_linear'

def test_registry():
    assert EstimatorRegistry.all_estimators() == ['doubly_robust_standardization', 'ols_linear']
    with pytest.raises(ValueError):
        EstimatorRegistry.register('ols_linear')(lambda *args, **kwargs: None)
    with pytest.raises(ValueError):
        EstimatorRegistry.get('no_such_estimator')


@pytest.mark.slow
def test_std_diff_standard_normal():
    from scipy.stats import kstest

    from confsel.ir import Dataset

    rng = np.random.default_rng(99)
    values = []
    for _ in range(1000):
        n = 400
        L = rng.standard_normal((n, 2))
        A = (rng.random(n) < 1. / (1. + np.exp(-0.5 * L[:, 0]))).astype(float)
        Y = 1. + L[:, 0] + rng.standard_normal(n)
        data = Dataset(covariates=L, covariate_labels=['a', 'b'], treatment=A, outcome=Y)
        first, second = estimate_orbits(data, [[0], [0, 1]])
        values.append(diff_variance(first, second).std_diff)
    assert kstest(values, 'norm').pvalue > 0.01
