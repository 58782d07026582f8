import numpy as np
import pytest

from confsel.glm import DesignMatrix


@pytest.fixture(scope='function', name='random_linear')
def random_linear():
    rng = np.random.default_rng(20240601)
    instances = []
    for _ in range(20):
        n = int(rng.integers(10, 51))
        q = int(rng.integers(2, 7))
        columns = rng.standard_normal((n, q - 1))
        X = DesignMatrix.from_columns(columns, ['x{}'.format(k) for k in range(q - 1)])
        y = X.values.dot(rng.standard_normal(q)) + rng.standard_normal(n)
        instances.append((y, X))
    return instances

@pytest.fixture(scope='function', name='logistic_data')
def logistic_data():
    rng = np.random.default_rng(7)
    n = 200
    columns = rng.standard_normal((n, 2))
    X = DesignMatrix.from_columns(columns, ['x0', 'x1'])
    eta = X.values.dot([-0.3, 0.8, -0.5])
    y = (rng.random(n) < 1. / (1. + np.exp(-eta))).astype(float)
    return y, X
