import numpy as np
import pytest

from confsel.ir import Dataset


@pytest.fixture(scope='function', name='tiny_data')
def tiny_data():
    return Dataset(
        covariates=np.array([[-1.0], [0.5], [0.2], [1.5], [-0.3], [0.8]]),
        covariate_labels=['L'],
        treatment=np.array([0., 1., 0., 1., 1., 0.]),
        outcome=np.array([1.2, 3.4, 0.7, 4.1, 2.2, 1.9]),
    )

@pytest.fixture(scope='function', name='confounded_data')
def confounded_data():
    rng = np.random.default_rng(2024)
    n = 300
    covariates = rng.standard_normal((n, 3))
    treatment = (rng.random(n) < 1. / (1. + np.exp(-0.7 * covariates[:, 0]))).astype(float)
    outcome = 1. + 0.5 * treatment + covariates[:, 0] - 0.5 * covariates[:, 1] + rng.standard_normal(n)
    return Dataset(
        covariates=covariates,
        covariate_labels=['x0', 'x1', 'x2'],
        treatment=treatment,
        outcome=outcome,
    )
