import numpy as np
import pytest

from confsel.ir import Dataset


def _signal_dataset(seed=11, n=200):
    rng = np.random.default_rng(seed)
    treatment = (rng.random(n) < 0.5).astype(float)
    treatment[:2] = [0., 1.]
    covariates = rng.standard_normal((n, 5))
    covariates[:, 2] = treatment + 0.3 * rng.standard_normal(n)
    outcome = rng.standard_normal(n)
    return Dataset(
        covariates=covariates,
        covariate_labels=['c{}'.format(k) for k in range(5)],
        treatment=treatment,
        outcome=outcome,
    )


@pytest.fixture(scope='function', name='signal_data')
def signal_data():
    return _signal_dataset()

@pytest.fixture(scope='function', name='single_covariate_data')
def single_covariate_data():
    data = _signal_dataset()
    return Dataset(
        covariates=data.covariates[:, [0]],
        covariate_labels=['only'],
        treatment=data.treatment,
        outcome=data.outcome,
    )
