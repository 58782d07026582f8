import numpy as np
import pytest

from confsel.errors import ContractError
from confsel.ir import Dataset


def test_properties(columns):
    data = Dataset(**columns)
    assert data.n == 6
    assert data.J == 2
    assert data.column_index('bmi') == 1
    assert data.column_index(0) == 0
    assert data.labels_of([1, 0]) == ['bmi', 'age']
    assert data.subset_columns([]).shape == (6, 0)
    assert repr(data) == "Dataset(n=6, J=2, outcome_kind='continuous')"

def test_take(columns):
    data = Dataset(**columns)
    rows = [5, 4, 3, 2, 1, 0]
    taken = data.take(rows)
    assert np.array_equal(taken.covariates, data.covariates[::-1])
    assert np.array_equal(taken.treatment, data.treatment[::-1])

@pytest.mark.parametrize('change', [
    {'treatment': [0, 1, 0, 2, 1, 0]},
    {'treatment': [1, 1, 1, 1, 1, 1]},
    {'outcome': [0., 1., np.nan, 0., 1., 1.]},
    {'covariate_labels': ['age', 'age']},
    {'covariate_labels': ['age']},
    {'outcome': [0., 1., 2.]},
])
def test_contract(columns, change):
    kwargs = dict(columns)
    kwargs.update(change)
    with pytest.raises(ContractError):
        Dataset(**kwargs)

def test_binary_outcome(columns):
    kwargs = dict(columns, outcome_kind='binary')
    with pytest.raises(ContractError):
        Dataset(**kwargs)
    kwargs['outcome'] = [0, 1, 1, 0, 1, 0]
    assert Dataset(**kwargs).outcome_kind == 'binary'

def test_unknown_column(columns):
    data = Dataset(**columns)
    with pytest.raises(ContractError):
        data.column_index('weight')
    with pytest.raises(ContractError):
        data.column_index(2)
