# -*- coding:utf8 -*-
r"""
Doubly robust standardization

.. math::

  \hat\psi = n^{-1}\sum_i (2A_i-1)\hat W_i\{Y_i - \hat E(Y|A_i,L_i)\}
    + \hat E(Y|1,L_i) - \hat E(Y|0,L_i)

with the outcome regression fitted under the weights :math:`\hat W`.
"""
import numpy as np

from confsel.errors import NonFiniteWeightError
from confsel.glm import DesignMatrix, fit_glm, fit_logistic
from confsel.logger import logger

from .base import EffectConfig, EffectEstimate, EstimatorRegistry

__all__ = ['ipt_weights', 'dr_effect']

_OUTCOME_LINKS = {'continuous': 'identity', 'binary': 'logit'}


def ipt_weights(treatment, ps):
  """
  Inverse probability of treatment weights

  :param treatment: 0/1 treatment
  :param ps: propensity scores strictly inside (0, 1)

  :rtype: numpy.ndarray
  """
  treatment = np.asarray(treatment, dtype=float).ravel()
  ps = np.asarray(ps, dtype=float).ravel()
  bad = np.flatnonzero(~np.isfinite(ps) | (ps <= 0.) | (ps >= 1.))
  if bad.size:
    unit = int(bad[0])
    raise NonFiniteWeightError(unit, ps[unit])
  return np.where(treatment == 1., 1. / ps, 1. / (1. - ps))


def _with_treatment(values, a):
  values = values.copy()
  values[:, 1] = a
  return values


@EstimatorRegistry.register('doubly_robust_standardization')
def dr_effect(data, subset, config=None, orbit_index=0):
  """
  Doubly robust marginal effect adjusting for the columns in ``subset``

  :param data: the dataset
  :type data: :class:`confsel.ir.Dataset`
  :param subset: 0-based covariate columns
  :param orbit_index: recorded on the result

  :rtype: :class:`.EffectEstimate`
  """
  config = config or EffectConfig()
  subset = [int(k) for k in subset]
  covariates = data.subset_columns(subset)
  labels = data.labels_of(subset)
  treatment_design = DesignMatrix.from_columns(covariates, labels)
  ps = fit_logistic(data.treatment, treatment_design).predict(treatment_design.values)
  weights = ipt_weights(data.treatment, ps)
  max_weight = float(weights.max())
  if max_weight > config.weight_warn_threshold:
    logger.warning(
      'large inverse probability weight %.4g on %s covariate(s) (threshold %.4g)',
      max_weight, len(subset), config.weight_warn_threshold
    )

  outcome_design = DesignMatrix.from_columns(
    np.column_stack([data.treatment, covariates]), ['A'] + labels
  )
  outcome_fit = fit_glm(
    _OUTCOME_LINKS[data.outcome_kind], data.outcome, outcome_design, weights=weights
  )
  fitted = outcome_fit.predict(outcome_design.values)
  mean_treated = outcome_fit.predict(_with_treatment(outcome_design.values, 1.))
  mean_control = outcome_fit.predict(_with_treatment(outcome_design.values, 0.))
  terms = ((2. * data.treatment - 1.) * weights * (data.outcome - fitted)
           + mean_treated - mean_control)
  psi_hat = float(np.mean(terms))
  return EffectEstimate(
    orbit_index=orbit_index,
    psi_hat=psi_hat,
    influence=terms - psi_hat,
    estimator_kind='doubly_robust_standardization',
    weights_used=weights,
    max_weight=max_weight,
    subset=subset,
  )
