# -*- coding:utf8 -*-
import numpy as np

from confsel.errors import ContractError, DegenerateDesignError
from confsel.glm import DesignMatrix, fit_linear

from .base import EffectEstimate, EstimatorRegistry

__all__ = ['ols_effect']


@EstimatorRegistry.register('ols_linear')
def ols_effect(data, subset, config=None, orbit_index=0):
  """
  OLS coefficient of the treatment with linear treatment and outcome models

  The influence value of unit i is
  :math:`r^A_i r^Y_i / (n^{-1}\\sum_i A_i r^A_i)` with :math:`r^A` the
  residuals of A on the subset and :math:`r^Y` those of Y on A and the
  subset.

  :rtype: :class:`.EffectEstimate`
  """
  if data.outcome_kind != 'continuous':
    raise ContractError('ols_linear needs a continuous outcome, get {}'.format(data.outcome_kind))
  subset = [int(k) for k in subset]
  covariates = data.subset_columns(subset)
  labels = data.labels_of(subset)
  treatment_design = DesignMatrix.from_columns(covariates, labels)
  treatment_fit = fit_linear(data.treatment, treatment_design)
  resid_treatment = data.treatment - treatment_fit.predict(treatment_design.values)
  denominator = float(np.mean(data.treatment * resid_treatment))
  if abs(denominator) <= 1e-12 * max(1., float(np.mean(data.treatment ** 2))):
    raise DegenerateDesignError(
      'treatment is (almost) a linear function of {}'.format(labels or 'the intercept')
    )

  outcome_design = DesignMatrix.from_columns(
    np.column_stack([data.treatment, covariates]), ['A'] + labels
  )
  outcome_fit = fit_linear(data.outcome, outcome_design)
  resid_outcome = data.outcome - outcome_fit.predict(outcome_design.values)

  influence = resid_treatment * resid_outcome / denominator
  return EffectEstimate(
    orbit_index=orbit_index,
    psi_hat=outcome_fit.coefficients[1],
    influence=influence - influence.mean(),
    estimator_kind='ols_linear',
    subset=subset,
  )
