import numpy as np
import pytest

from confsel.errors import ContractError, OrderingError
from confsel.glm import DesignMatrix, fit_linear, fit_logistic, wald_test
from confsel.ir import Dataset
from confsel.ordering import OrderingConfig, order_covariates, nested_subsets


def _orbit_one_oracle(data):
    best = None
    for k in range(data.J):
        column = data.covariates[:, [k]]
        treatment_fit = fit_logistic(data.treatment, DesignMatrix.from_columns(column, ['k']))
        outcome_design = DesignMatrix.from_columns(np.column_stack([data.treatment, column]), ['A', 'k'])
        outcome_fit = fit_linear(data.outcome, outcome_design)
        low, high = sorted([wald_test(treatment_fit, 1).p_value, wald_test(outcome_fit, 2).p_value])
        if best is None or (low, high, k) < best:
            best = (low, high, k)
    return best[2]


def test_single_covariate(single_covariate_data):
    ordering = order_covariates(single_covariate_data)
    assert ordering.order == (0,)
    assert ordering.ordered_labels == ['only']

def test_signal_first(signal_data):
    ordering = order_covariates(signal_data)
    assert ordering.order[0] == 2
    assert ordering.per_orbit[0].label == 'c2'
    assert ordering.per_orbit[0].min_pvalue < 1e-6
    assert nested_subsets(ordering)[0] == [2]

def test_orbit_one_oracle(signal_data):
    rng = np.random.default_rng(5)
    for _ in range(3):
        columns = rng.permutation(signal_data.J)
        data = Dataset(
            covariates=signal_data.covariates[:, columns],
            covariate_labels=[signal_data.covariate_labels[k] for k in columns],
            treatment=signal_data.treatment,
            outcome=signal_data.outcome,
        )
        assert order_covariates(data).order[0] == _orbit_one_oracle(data)

def test_permutation(signal_data):
    ordering = order_covariates(signal_data)
    assert sorted(ordering.order) == list(range(signal_data.J))
    assert [s.orbit_index for s in ordering.per_orbit] == list(range(1, signal_data.J + 1))

def test_deterministic(signal_data):
    first = order_covariates(signal_data)
    second = order_covariates(signal_data)
    assert first.order == second.order
    assert [s.pv_treatment for s in first.per_orbit] == [s.pv_treatment for s in second.per_orbit]

def test_column_order_invariance(signal_data):
    reverse = list(range(signal_data.J))[::-1]
    data = Dataset(
        covariates=signal_data.covariates[:, reverse],
        covariate_labels=[signal_data.covariate_labels[k] for k in reverse],
        treatment=signal_data.treatment,
        outcome=signal_data.outcome,
    )
    assert order_covariates(data).ordered_labels == order_covariates(signal_data).ordered_labels

def test_pinned_high(signal_data):
    free = order_covariates(signal_data)
    weakest = free.ordered_labels[-1]
    ordering = order_covariates(signal_data, OrderingConfig(pinned_high=[weakest]))
    assert ordering.ordered_labels[0] == weakest
    assert ordering.per_orbit[0].pinned == 'high'
    assert ordering.per_orbit[1].pinned is None

def test_pinned_low(signal_data):
    ordering = order_covariates(signal_data, OrderingConfig(pinned_low=['c2', 'c0']))
    assert set(ordering.ordered_labels[-2:]) == {'c2', 'c0'}
    assert ordering.ordered_labels[-2] == 'c2'
    assert all(s.pinned == 'low' for s in ordering.per_orbit[-2:])

def test_pin_conflicts(signal_data):
    with pytest.raises(ContractError):
        order_covariates(signal_data, OrderingConfig(pinned_high=['c1'], pinned_low=['c1']))
    with pytest.raises(ContractError):
        order_covariates(signal_data, OrderingConfig(pinned_high=['c1', 'c1']))
    with pytest.raises(ContractError):
        order_covariates(signal_data, OrderingConfig(pinned_high=['no_such_column']))

def test_only_collinear_candidates_left(signal_data):
    covariates = np.column_stack([signal_data.covariates, signal_data.covariates[:, 0]])
    data = Dataset(
        covariates=covariates,
        covariate_labels=signal_data.covariate_labels + ['c0_copy'],
        treatment=signal_data.treatment,
        outcome=signal_data.outcome,
    )
    with pytest.raises(OrderingError):
        order_covariates(data)

def test_no_covariates(signal_data):
    data = Dataset(
        covariates=np.zeros((signal_data.n, 0)),
        covariate_labels=[],
        treatment=signal_data.treatment,
        outcome=signal_data.outcome,
    )
    ordering = order_covariates(data)
    assert ordering.J == 0
    assert nested_subsets(ordering) == []

def test_nested_subsets():
    assert nested_subsets([3, 1, 2]) == [[3], [3, 1], [3, 1, 2]]
    assert nested_subsets([]) == []
