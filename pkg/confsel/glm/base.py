# -*- coding: utf8 -*-
import attr
import numpy as np
from attr.validators import in_, instance_of
from scipy.special import expit

from confsel.config import ConfigPart
from confsel.errors import ContractError

__all__ = ['LINKS', 'DesignMatrix', 'FittedGlm', 'WaldTest', 'GlmConfig']

LINKS = ('identity', 'logit')


@attr.s(eq=False, repr=False)
class DesignMatrix(object):
  """
  :param values: n x q matrix, first column the intercept
  :type values: numpy.ndarray

  :param column_labels: q labels, ``'(Intercept)'`` first
  :type column_labels: List[str]
  """
  values = attr.ib(converter=lambda v: np.asarray(v, dtype=float))
  column_labels = attr.ib(converter=list)

  @values.validator
  def check(self, attrib, values):
    if values.ndim != 2 or values.shape[1] == 0:
      raise ContractError('design must be a non-empty matrix, get shape {}'.format(values.shape))
    if not np.all(values[:, 0] == 1.):
      raise ContractError('first design column must be the intercept')
    zero_cols = np.flatnonzero(np.all(values == 0., axis=0))
    if zero_cols.size:
      raise ContractError('identically zero design column(s): {}'.format(zero_cols.tolist()))

  def __attrs_post_init__(self):
    if len(self.column_labels) != self.values.shape[1]:
      raise ContractError(
        'expecting {} column labels, get {}'.format(self.values.shape[1], len(self.column_labels))
      )

  @classmethod
  def from_columns(cls, columns, labels):
    """prepend an intercept to ``columns``"""
    columns = np.asarray(columns, dtype=float)
    n = columns.shape[0]
    if columns.ndim == 1:
      columns = columns.reshape(n, 1)
    values = np.hstack([np.ones((n, 1)), columns])
    return cls(values=values, column_labels=['(Intercept)'] + list(labels))

  @property
  def n(self):
    return self.values.shape[0]

  @property
  def q(self):
    return self.values.shape[1]

  def __repr__(self):
    return 'DesignMatrix(n={}, columns={})'.format(self.n, self.column_labels)


@attr.s(eq=False, repr=False)
class FittedGlm(object):
  link = attr.ib(validator=in_(LINKS))
  coefficients = attr.ib(converter=lambda v: np.asarray(v, dtype=float))
  covariance = attr.ib(converter=lambda v: np.asarray(v, dtype=float))
  converged = attr.ib(validator=instance_of(bool))
  iterations = attr.ib(validator=instance_of(int))
  deviance = attr.ib(converter=float)
  column_labels = attr.ib(factory=list, converter=list)
  separation = attr.ib(default=False, validator=instance_of(bool))

  def linear_predictor(self, values):
    return np.asarray(values, dtype=float).dot(self.coefficients)

  def predict(self, values):
    """fitted mean for the design rows ``values``"""
    eta = self.linear_predictor(values)
    if self.link == 'logit':
      return expit(eta)
    return eta

  def coef_index(self, label):
    return self.column_labels.index(label)

  def __repr__(self):
    return 'FittedGlm(link={!r}, coefficients={}, converged={}, separation={})'.format(
      self.link, np.round(self.coefficients, 6).tolist(), self.converged, self.separation
    )


@attr.s(frozen=True)
class WaldTest(object):
  estimate = attr.ib(converter=float)
  std_error = attr.ib(converter=float)
  z = attr.ib(converter=float)
  p_value = attr.ib(converter=float)
  degenerate = attr.ib(default=False)


@attr.s(frozen=True)
class GlmConfig(ConfigPart):
  """
  Solver controls

  :param max_iterations: IRLS iteration cap
  :param tolerance: convergence when the largest absolute coefficient
    change falls below this value
  :param rank_tolerance: relative tolerance of the pivoted QR rank check
  :param separation_cap: coefficient magnitude beyond which a logistic fit
    stops and is flagged as separated
  :param max_step_halvings: deviance-increase backtracking limit
  """
  PART = 'glm'

  max_iterations = attr.ib(default=50)
  tolerance = attr.ib(default=1e-8)
  rank_tolerance = attr.ib(default=1e-10)
  separation_cap = attr.ib(default=30.0)
  max_step_halvings = attr.ib(default=30)
