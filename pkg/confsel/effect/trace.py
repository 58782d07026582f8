# -*- coding:utf8 -*-
from functools import partial

import attr

from confsel.errors import ContractError
from confsel.logger import logger
from confsel.ordering import CovariateOrdering, nested_subsets
from confsel.utils import parallel_map

from .base import EffectConfig, EstimatorRegistry

__all__ = ['OrbitTrace', 'estimate_orbits', 'trace_orbits']


@attr.s(frozen=True)
class OrbitTrace(object):
  """
  The effect trajectory along a covariate ordering

  :param ordering: the ordering the orbits follow
  :type ordering: :class:`confsel.ordering.CovariateOrdering`

  :param estimates: one estimate per orbit, orbit 1 first
  :type estimates: List[:class:`.EffectEstimate`]
  """
  ordering = attr.ib(validator=attr.validators.instance_of(CovariateOrdering))
  estimates = attr.ib(converter=tuple)

  @property
  def J(self):
    return len(self.estimates)

  @property
  def psi_hats(self):
    return [est.psi_hat for est in self.estimates]


def _estimate(estimator, data, config, indexed_subset):
  orbit_index, subset = indexed_subset
  return estimator(data, subset, config=config, orbit_index=orbit_index)


def estimate_orbits(data, subsets, config=None):
  """
  Effect estimate on each subset, ``orbit_index`` numbered from 1

  :rtype: List[:class:`.EffectEstimate`]
  """
  config = config or EffectConfig()
  if config.estimator_kind == 'ols_linear' and data.outcome_kind != 'continuous':
    raise ContractError('ols_linear is only available for continuous outcomes')
  estimator = EstimatorRegistry.get(config.estimator_kind)
  logger.debug('estimating %s orbits with %s', len(subsets), config.estimator_kind)
  return parallel_map(
    partial(_estimate, estimator, data, config),
    [(j, list(subset)) for j, subset in enumerate(subsets, 1)],
    n_jobs=config.n_jobs,
  )


def trace_orbits(data, ordering, config=None):
  """
  :type ordering: :class:`confsel.ordering.CovariateOrdering`
  :rtype: :class:`OrbitTrace`
  """
  estimates = estimate_orbits(data, nested_subsets(ordering), config)
  return OrbitTrace(ordering=ordering, estimates=estimates)
