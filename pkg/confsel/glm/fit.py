# -*- coding: utf8 -*-
import numpy as np
from scipy import linalg
from scipy.special import expit
from scipy.stats import norm

from confsel.errors import (ContractError, DegenerateResponseError,
                            SingularDesignError)
from confsel.logger import logger

from .base import DesignMatrix, FittedGlm, GlmConfig, WaldTest

__all__ = ['fit_linear', 'fit_logistic', 'wald_test', 'check_rank']


def _prepare(y, X, weights):
  if not isinstance(X, DesignMatrix):
    raise TypeError('expecting {}, get {}'.format(DesignMatrix, type(X)))
  y = np.asarray(y, dtype=float).ravel()
  if y.shape[0] != X.n:
    raise ContractError('response has {} units, design has {}'.format(y.shape[0], X.n))
  if weights is None:
    weights = np.ones(X.n)
  else:
    weights = np.asarray(weights, dtype=float).ravel()
    if weights.shape[0] != X.n:
      raise ContractError('weights have {} units, design has {}'.format(weights.shape[0], X.n))
    if not np.all(np.isfinite(weights)) or np.any(weights < 0):
      raise ContractError('weights must be finite and nonnegative')
  n_eff = int(np.count_nonzero(weights))
  if n_eff < X.q:
    raise ContractError('fitting needs n >= q, get n={} q={}'.format(n_eff, X.q))
  return y, weights


def _rank(values, tol):
  r = linalg.qr(values, mode='r', pivoting=True)[0]
  r_diag = np.abs(np.diag(r))
  if r_diag.size == 0 or r_diag[0] == 0:
    return 0
  return int(np.sum(r_diag > tol * r_diag[0]))


def _dependent_columns(values, tol):
  # left to right, so earlier columns (intercept first) are kept
  kept = []
  dependent = []
  for k in range(values.shape[1]):
    trial = kept + [k]
    if _rank(values[:, trial], tol) == len(trial):
      kept.append(k)
    else:
      dependent.append(k)
  return dependent


def check_rank(X, weights=None, tol=1e-10):
  """
  Raise :class:`.SingularDesignError` if the (weighted) design is rank deficient

  :param X: the design
  :type X: :class:`.DesignMatrix`

  :rtype: None
  """
  values = X.values
  if weights is not None:
    values = values * np.sqrt(weights)[:, None]
  if _rank(values, tol) < X.q:
    dependent = _dependent_columns(values, tol)
    raise SingularDesignError([X.column_labels[k] for k in dependent])


def fit_linear(y, X, weights=None, config=None):
  """
  (Weighted) least squares with model-based covariance

  :param y: response of length n
  :param X: the design, intercept first
  :type X: :class:`.DesignMatrix`
  :param weights: optional nonnegative weights of length n

  :rtype: :class:`.FittedGlm`

  The covariance is :math:`(X'WX)^{-1}\\hat\\sigma^2` with
  :math:`\\hat\\sigma^2 = \\sum_i w_i r_i^2 / (n - q)`; without residual
  degrees of freedom the covariance is infinite.
  """
  config = config or GlmConfig()
  y, weights = _prepare(y, X, weights)
  sw = np.sqrt(weights)
  xw = X.values * sw[:, None]
  yw = y * sw
  q_mat, r_mat, pivot = linalg.qr(xw, mode='economic', pivoting=True)
  r_diag = np.abs(np.diag(r_mat))
  if r_diag[0] == 0 or np.sum(r_diag > config.rank_tolerance * r_diag[0]) < X.q:
    dependent = _dependent_columns(xw, config.rank_tolerance)
    raise SingularDesignError([X.column_labels[k] for k in dependent])
  coef_p = linalg.solve_triangular(r_mat, q_mat.T.dot(yw))
  coefficients = np.empty(X.q)
  coefficients[pivot] = coef_p

  resid = y - X.values.dot(coefficients)
  rss = float(np.sum(weights * resid ** 2))
  df_resid = int(np.count_nonzero(weights)) - X.q
  r_inv = linalg.solve_triangular(r_mat, np.eye(X.q))
  cov_p = r_inv.dot(r_inv.T)
  covariance = np.empty_like(cov_p)
  covariance[np.ix_(pivot, pivot)] = cov_p
  if df_resid > 0:
    covariance = covariance * (rss / df_resid)
  else:
    covariance = np.full_like(covariance, np.inf)
  covariance = (covariance + covariance.T) / 2.
  return FittedGlm(
    link='identity',
    coefficients=coefficients,
    covariance=covariance,
    converged=True,
    iterations=1,
    deviance=rss,
    column_labels=X.column_labels,
  )


def _binomial_deviance(y, eta, weights):
  log_p = -np.logaddexp(0., -eta)
  log_1mp = -np.logaddexp(0., eta)
  return float(-2. * np.sum(weights * (y * log_p + (1. - y) * log_1mp)))


def _newton_direction(info, score):
  try:
    return linalg.solve(info, score, assume_a='pos')
  except (linalg.LinAlgError, ValueError):
    return linalg.lstsq(info, score)[0]


def _inverse_information(info, separated):
  if not separated:
    try:
      c_and_lower = linalg.cho_factor(info)
      return linalg.cho_solve(c_and_lower, np.eye(info.shape[0]))
    except linalg.LinAlgError:
      pass
  return linalg.pinvh(info)


def fit_logistic(y, X, weights=None, config=None):
  """
  Logistic regression by iteratively reweighted least squares

  Newton steps are halved while the deviance increases. A fit whose
  coefficients run past ``config.separation_cap`` (or whose fitted
  probabilities collapse onto 0/1 without converging) is returned with
  ``separation=True`` instead of raising.

  :param y: 0/1 response of length n
  :param X: the design, intercept first
  :type X: :class:`.DesignMatrix`
  :param weights: optional nonnegative weights

  :rtype: :class:`.FittedGlm`
  """
  config = config or GlmConfig()
  y, weights = _prepare(y, X, weights)
  if not np.all(np.isin(y, (0., 1.))):
    raise ContractError('logistic response must be coded 0/1')
  observed = y[weights > 0]
  if observed.min() == observed.max():
    raise DegenerateResponseError(
      'logistic response has a single class: {:g}'.format(observed[0])
    )
  check_rank(X, weights, config.rank_tolerance)

  values = X.values
  coefficients = np.zeros(X.q)
  eta = np.zeros(X.n)
  deviance = _binomial_deviance(y, eta, weights)
  converged = False
  capped = False
  iterations = 0
  for iterations in range(1, config.max_iterations + 1):
    p = expit(eta)
    score = values.T.dot(weights * (y - p))
    info = values.T.dot(values * (weights * p * (1. - p))[:, None])
    direction = _newton_direction(info, score)
    step = 1.
    for _ in range(config.max_step_halvings):
      candidate = coefficients + step * direction
      cand_eta = values.dot(candidate)
      cand_deviance = _binomial_deviance(y, cand_eta, weights)
      if cand_deviance <= deviance + 1e-12 * (abs(deviance) + 1.):
        break
      step /= 2.
    change = np.max(np.abs(candidate - coefficients))
    coefficients, eta, deviance = candidate, cand_eta, cand_deviance
    if np.max(np.abs(coefficients)) > config.separation_cap:
      capped = True
      break
    if change < config.tolerance:
      converged = True
      break

  p = expit(eta)
  separation = False
  if not converged:
    extreme = np.minimum(p, 1. - p)[weights > 0].min() < 1e-8
    separation = capped or extreme
    if separation:
      logger.warning(
        'separation detected after %s iterations (max |coef| = %.3g)',
        iterations, np.max(np.abs(coefficients))
      )
    else:
      logger.warning('IRLS did not converge in %s iterations', iterations)
  info = values.T.dot(values * (weights * p * (1. - p))[:, None])
  covariance = _inverse_information(info, separation)
  covariance = (covariance + covariance.T) / 2.
  return FittedGlm(
    link='logit',
    coefficients=coefficients,
    covariance=covariance,
    converged=converged,
    iterations=iterations,
    deviance=deviance,
    column_labels=X.column_labels,
    separation=bool(separation),
  )


def wald_test(fit, coef_index):
  """
  Two-sided Wald test of a single coefficient against the standard normal

  A zero standard error gives p-value 0 for a nonzero estimate and 1
  otherwise; an infinite one gives p-value 1. Both set ``degenerate``.

  :rtype: :class:`.WaldTest`
  """
  q = fit.coefficients.shape[0]
  if not 0 <= coef_index < q:
    raise ContractError('coefficient index {} out of range for q={}'.format(coef_index, q))
  estimate = float(fit.coefficients[coef_index])
  variance = float(fit.covariance[coef_index, coef_index])
  if np.isnan(variance):
    raise ContractError('undefined variance for coefficient {}'.format(coef_index))
  std_error = np.sqrt(max(variance, 0.))
  if np.isinf(std_error):
    return WaldTest(estimate=estimate, std_error=std_error, z=0., p_value=1., degenerate=True)
  if std_error == 0.:
    if estimate != 0.:
      return WaldTest(estimate=estimate, std_error=0., z=np.copysign(np.inf, estimate),
                      p_value=0., degenerate=True)
    return WaldTest(estimate=0., std_error=0., z=0., p_value=1., degenerate=True)
  z = estimate / std_error
  return WaldTest(estimate=estimate, std_error=std_error, z=z,
                  p_value=min(1., 2. * norm.sf(abs(z))))
