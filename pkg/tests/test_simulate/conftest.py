import pytest

from confsel.pipeline import PipelineConfig
from confsel.randtest import RandTestConfig
from confsel.simulate import Scenario, StudyConfig


@pytest.fixture(scope='function', name='small_scenario')
def small_scenario():
    return Scenario(name='small', n=60, p=8)

@pytest.fixture(scope='function', name='quick_configs')
def quick_configs():
    study = StudyConfig(n_replicates=4, n_jobs=1)
    pipeline = PipelineConfig(seed=1, randtest=RandTestConfig(draws=99))
    return study, pipeline
