# -*- coding:utf8 -*-
r"""
Randomization inference for the sharp null of no effect within strata

The statistic is

.. math::

  \hat\tau(a) = n^{-1} \sum_r n_r \sum_{i: X_i = r} a_i Y_i

and its reference distribution re-draws, within every stratum, which
units are treated while holding the stratum's treated count fixed.
"""
from itertools import combinations

import attr
import numpy as np
from attr.validators import instance_of
from scipy.special import comb

from confsel.config import ConfigPart
from confsel.errors import ContractError, EnumerationTooLargeError
from confsel.logger import logger
from confsel.utils import derive_seed

__all__ = ['RandTestConfig', 'RandTestResult', 'test_statistic',
           'randomization_pvalue', 'exact_pvalue', 'assignment_count']

# |tau(a)| within this relative distance of |tau(A)| counts as a tie
_TIE_TOLERANCE = 1e-10


@attr.s(frozen=True)
class RandTestConfig(ConfigPart):
  """
  :param draws: Monte Carlo assignments C
  :param enumeration_cap: largest assignment space enumerated exactly
  :param block_size: assignments drawn per generator block
  """
  PART = 'randtest'

  draws = attr.ib(default=1000, validator=instance_of(int))
  enumeration_cap = attr.ib(default=1000000, validator=instance_of(int))
  block_size = attr.ib(default=1000, validator=instance_of(int))


@attr.s(frozen=True)
class RandTestResult(object):
  observed_stat = attr.ib(converter=float)
  p_value = attr.ib(converter=float)
  draws = attr.ib()
  seed = attr.ib()
  per_stratum_treated_counts = attr.ib(converter=tuple)
  exact = attr.ib(default=False)


def _check_inputs(match, treatment, y):
  treatment = np.asarray(treatment, dtype=float).ravel()
  y = np.asarray(y, dtype=float).ravel()
  if treatment.shape[0] != match.n or y.shape[0] != match.n:
    raise ContractError(
      'matching covers {} units, get {} treatment and {} outcome values'.format(
        match.n, treatment.shape[0], y.shape[0]
      )
    )
  if not np.all(np.isin(treatment, (0., 1.))):
    raise ContractError('treatment must be coded 0/1')
  return treatment, y


def _unit_contributions(match, y):
  # n_{X_i} Y_i / n
  sizes = match.stratum_sizes[match.stratum_of]
  return sizes * y / match.n


def _is_extreme(stats, observed):
  observed = abs(observed)
  return np.abs(stats) >= observed - _TIE_TOLERANCE * max(1., observed)


def test_statistic(match, treatment, y):
  """
  :type match: :class:`confsel.matching.FullMatch`
  :rtype: float
  """
  treatment, y = _check_inputs(match, treatment, y)
  return float(np.sum(_unit_contributions(match, y) * treatment))


# not a pytest test
test_statistic.__test__ = False


def assignment_count(match, treatment):
  """size of the assignment space, the product of binomial coefficients"""
  counts = match.treated_counts(treatment)
  total = 1
  for size, treated in zip(match.stratum_sizes, counts):
    total *= int(comb(int(size), treated, exact=True))
  return total


def _draw_block(contributions, stratum_of, treated_slots, seed, size):
  rng = np.random.default_rng(seed)
  keys = rng.random((size, stratum_of.shape[0])) + 2. * stratum_of[None, :]
  order = np.argsort(keys, axis=1)
  return contributions[order[:, treated_slots]].sum(axis=1)


def _treated_slots(match, counts):
  # sorted keys group the units by stratum; the first t_r slots of every
  # stratum's block are the treated ones
  slots = []
  start = 0
  for size, treated in zip(match.stratum_sizes, counts):
    slots.extend(range(start, start + treated))
    start += size
  return np.array(slots, dtype=int)


def randomization_pvalue(match, treatment, y, C=None, seed=None, config=None):
  """
  Monte Carlo two-sided randomization p-value

  ``p = (1 + #{|tau(a)| >= |tau(A)|}) / (C + 1)`` over C assignments drawn
  uniformly within strata. Block ``b`` of draws uses the generator seeded
  with ``derive_seed(seed, b)``.

  :param C: number of draws, defaults to ``config.draws``
  :param seed: master seed, required

  :rtype: :class:`RandTestResult`
  """
  config = config or RandTestConfig()
  C = config.draws if C is None else C
  if C < 1:
    raise ContractError('at least one draw is needed, get C={}'.format(C))
  if seed is None:
    raise ContractError('randomization_pvalue needs an explicit seed')
  treatment, y = _check_inputs(match, treatment, y)
  counts = match.treated_counts(treatment)
  contributions = _unit_contributions(match, y)
  observed = float(np.sum(contributions * treatment))
  slots = _treated_slots(match, counts)

  n_extreme = 0
  drawn = 0
  block = 0
  while drawn < C:
    size = min(config.block_size, C - drawn)
    stats = _draw_block(contributions, match.stratum_of, slots, derive_seed(seed, block), size)
    n_extreme += int(np.sum(_is_extreme(stats, observed)))
    drawn += size
    block += 1
  p_value = (1. + n_extreme) / (C + 1.)
  logger.debug('randomization test: tau=%.6g, p=%.4g over %s draws', observed, p_value, C)
  return RandTestResult(
    observed_stat=observed,
    p_value=p_value,
    draws=C,
    seed=seed,
    per_stratum_treated_counts=counts,
    exact=False,
  )


def exact_pvalue(match, treatment, y, config=None):
  """
  Two-sided randomization p-value over the whole assignment space

  :rtype: :class:`RandTestResult`
  """
  config = config or RandTestConfig()
  treatment, y = _check_inputs(match, treatment, y)
  size = assignment_count(match, treatment)
  if size > config.enumeration_cap:
    raise EnumerationTooLargeError(
      '{} assignments exceed the enumeration cap {}, use randomization_pvalue'.format(
        size, config.enumeration_cap
      )
    )
  counts = match.treated_counts(treatment)
  contributions = _unit_contributions(match, y)
  observed = float(np.sum(contributions * treatment))
  stats = np.zeros(1)
  for stratum, treated in zip(match.strata, counts):
    sums = np.array([contributions[list(chosen)].sum()
                     for chosen in combinations(stratum, treated)])
    stats = np.add.outer(stats, sums).ravel()
  p_value = float(np.mean(_is_extreme(stats, observed)))
  return RandTestResult(
    observed_stat=observed,
    p_value=p_value,
    draws=int(stats.shape[0]),
    seed=None,
    per_stratum_treated_counts=counts,
    exact=True,
  )
