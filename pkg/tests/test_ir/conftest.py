import numpy as np
import pytest


@pytest.fixture(scope='session', name='columns')
def columns():
    rng = np.random.default_rng(5)
    return {
        'covariates': rng.normal(size=(6, 2)),
        'covariate_labels': ['age', 'bmi'],
        'treatment': [0, 1, 0, 1, 1, 0],
        'outcome': rng.normal(size=6),
    }
