import pandas as pd
import pytest

from confsel.simulate import Scenario, generate


@pytest.fixture(scope='function', name='workdir')
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path

@pytest.fixture(scope='function', name='data_file')
def data_file(workdir):
    data = generate(Scenario(name='cli', n=60, p=6), 7)
    frame = pd.DataFrame(data.covariates, columns=data.covariate_labels)
    frame['treat'] = data.treatment.astype(int)
    frame['y'] = data.outcome
    path = workdir / 'data.csv'
    frame.to_csv(str(path), index=False)
    return str(path)
