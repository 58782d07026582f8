import numpy as np
import pytest

from confsel.matching import FullMatch


@pytest.fixture(scope='function', name='four_units')
def four_units():
    match = FullMatch.from_stratum_ids([0, 0, 0, 0])
    treatment = np.array([1., 1., 0., 0.])
    outcome = np.array([10., 0., 0., 0.])
    return match, treatment, outcome

@pytest.fixture(scope='function', name='two_strata')
def two_strata():
    match = FullMatch.from_stratum_ids([0, 0, 1, 1, 1])
    treatment = np.array([1., 0., 0., 1., 0.])
    outcome = np.array([1.5, -0.5, 2.0, 3.0, 0.25])
    return match, treatment, outcome
