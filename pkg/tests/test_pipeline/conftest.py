import pytest

from confsel.pipeline import PipelineConfig
from confsel.simulate import Scenario, generate


@pytest.fixture(scope='module', name='simulated_data')
def simulated_data():
    return generate(Scenario(name='pipeline', n=80, p=7), 2718)

@pytest.fixture(scope='function', name='fast_config')
def fast_config():
    return PipelineConfig(seed=99, draws=199)
