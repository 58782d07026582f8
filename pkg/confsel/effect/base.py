# -*- coding:utf8 -*-
import attr
import numpy as np
from attr.validators import in_, instance_of, optional

from confsel.config import ConfigPart

__all__ = ['ESTIMATOR_KINDS', 'EffectEstimate', 'DiffVariance', 'EffectConfig',
           'EstimatorRegistry']

ESTIMATOR_KINDS = ('doubly_robust_standardization', 'ols_linear')


def _optional_vector(value):
  if value is None:
    return None
  return np.asarray(value, dtype=float).ravel()


@attr.s(eq=False, repr=False)
class EffectEstimate(object):
  """
  Marginal treatment effect on one adjustment set

  :param orbit_index: the orbit the subset belongs to (0 for the empty set)
  :param psi_hat: the effect estimate, outcome units
  :param influence: per-unit estimated influence values, centered
  :param estimator_kind: one of :data:`ESTIMATOR_KINDS`
  :param weights_used: inverse probability of treatment weights
    (``None`` for ``ols_linear``)
  :param max_weight: largest weight, ``nan`` without weights
  :param subset: 0-based covariate columns adjusted for
  """
  orbit_index = attr.ib(validator=instance_of(int))
  psi_hat = attr.ib(converter=float)
  influence = attr.ib(converter=lambda v: np.asarray(v, dtype=float).ravel())
  estimator_kind = attr.ib(validator=in_(ESTIMATOR_KINDS))
  weights_used = attr.ib(default=None, converter=_optional_vector)
  max_weight = attr.ib(default=float('nan'), converter=float)
  subset = attr.ib(factory=tuple, converter=tuple)

  @property
  def n(self):
    return self.influence.shape[0]

  @property
  def variance(self):
    """estimated variance of :math:`\\sqrt{n}(\\hat\\psi - \\psi)`"""
    return float(np.sum(self.influence ** 2) / (self.n - 1))

  @property
  def std_error(self):
    return float(np.sqrt(self.variance / self.n))

  def __repr__(self):
    return 'EffectEstimate(orbit={}, psi_hat={:.6g}, se={:.6g}, kind={!r})'.format(
      self.orbit_index, self.psi_hat, self.std_error, self.estimator_kind
    )


@attr.s(frozen=True)
class DiffVariance(object):
  orbit_j = attr.ib()
  orbit_k = attr.ib()
  difference = attr.ib(converter=float)
  variance = attr.ib(converter=float)
  std_diff = attr.ib(converter=float)
  defined = attr.ib(validator=instance_of(bool))


@attr.s(frozen=True)
class EffectConfig(ConfigPart):
  """
  :param estimator_kind: ``doubly_robust_standardization`` (default) or
    ``ols_linear``, the latter only for continuous outcomes
  :param weight_warn_threshold: warn when an inverse probability weight
    exceeds this value; weights are never truncated
  :param n_jobs: workers for the per-orbit estimates
  """
  PART = 'effect'

  estimator_kind = attr.ib(default='doubly_robust_standardization',
                           validator=in_(ESTIMATOR_KINDS))
  weight_warn_threshold = attr.ib(default=50.0, converter=float)
  n_jobs = attr.ib(default=None, validator=optional(instance_of(int)))


class EstimatorRegistry(object):

  ESTIMATOR_MAP = {}

  @classmethod
  def register(cls, kind, overwrite=False):
    if kind not in ESTIMATOR_KINDS:
      raise ValueError('unknown estimator kind: {}, expecting one of {}'.format(kind, ESTIMATOR_KINDS))

    def register(func):
      if not callable(func):
        raise TypeError('expecting a callable, get {}'.format(func))
      if not overwrite and kind in cls.ESTIMATOR_MAP:
        raise ValueError('duplicate estimator registered: {}'.format(kind))
      cls.ESTIMATOR_MAP[kind] = func
      return func
    return register

  @classmethod
  def get(cls, kind):
    estimator = cls.ESTIMATOR_MAP.get(kind)
    if estimator is None:
      raise ValueError(
        'unknown estimator: {}, registered: {}'.format(kind, sorted(cls.ESTIMATOR_MAP))
      )
    return estimator

  @classmethod
  def all_estimators(cls):
    return sorted(cls.ESTIMATOR_MAP.keys())
