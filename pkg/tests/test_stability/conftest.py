import numpy as np
import pytest

from confsel.effect import EffectEstimate


def make_estimates(psi_hats, influences):
    return [
        EffectEstimate(orbit_index=j, psi_hat=psi, influence=phi,
                       estimator_kind='doubly_robust_standardization')
        for j, (psi, phi) in enumerate(zip(psi_hats, influences), 1)
    ]


@pytest.fixture(scope='session', name='make_estimates')
def make_estimates_fixture():
    return make_estimates


@pytest.fixture(scope='function', name='ten_orbits')
def ten_orbits():
    rng = np.random.default_rng(31)
    n = 40
    psi_hats = [2.0, 1.4, 1.1, 0.9, 0.95, 1.0, 0.97, 1.02, 1.05, 1.0]
    influences = []
    for _ in psi_hats:
        phi = rng.standard_normal(n)
        influences.append(phi - phi.mean())
    return make_estimates(psi_hats, influences)
