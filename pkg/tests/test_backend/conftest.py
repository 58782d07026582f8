import pytest

from confsel.pipeline import PipelineConfig, run_pipeline
from confsel.randtest import RandTestConfig
from confsel.simulate import Scenario, StudyConfig, generate, run_study


@pytest.fixture(scope='module', name='report')
def report():
    data = generate(Scenario(name='backend', n=60, p=6), 31)
    return run_pipeline(data, PipelineConfig(seed=5, draws=99))

@pytest.fixture(scope='module', name='study')
def study():
    return run_study(
        Scenario(name='backend', n=60, p=6), 3, ['target_ps', 'empty_ps'], 8,
        config=StudyConfig(n_replicates=3, n_jobs=1),
        pipeline_config=PipelineConfig(seed=8, randtest=RandTestConfig(draws=49)),
    )
