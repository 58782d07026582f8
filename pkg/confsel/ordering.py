# -*- coding:utf8 -*-
r"""
Covariate ordering by double-selection priority

Orbit by orbit, every remaining candidate :math:`k` is scored by the
p-values of its coefficient in

* the treatment model :math:`\text{logit}\,P(A=1 \mid L^{j-1}, L_k)` and
* the outcome model :math:`h\{E(Y \mid A, L^{j-1}, L_k)\}`

and the candidate minimizing the smaller of the two is admitted next.
"""
from functools import partial

import attr
import numpy as np
from attr.validators import in_, instance_of, optional

from confsel.config import ConfigPart
from confsel.errors import ContractError, OrderingError, SingularDesignError
from confsel.glm import DesignMatrix, fit_glm, fit_logistic, wald_test
from confsel.logger import logger
from confsel.utils import parallel_map

__all__ = ['OrderingConfig', 'OrbitSelection', 'CovariateOrdering',
           'order_covariates', 'nested_subsets']

_OUTCOME_LINKS = {'continuous': 'identity', 'binary': 'logit'}


@attr.s(frozen=True)
class OrderingConfig(ConfigPart):
  """
  :param pinned_high: covariates (labels or column indices) forced to the
    front of the ordering
  :param pinned_low: covariates forced to the back
  :param treatment_link: only ``logit`` (binary treatment)
  :param outcome_link: ``identity``, ``logit`` or ``None`` to follow the
    outcome kind
  :param n_jobs: workers for the candidate fits within an orbit
  """
  PART = 'ordering'

  pinned_high = attr.ib(factory=list, converter=list)
  pinned_low = attr.ib(factory=list, converter=list)
  treatment_link = attr.ib(default='logit', validator=in_(['logit']))
  outcome_link = attr.ib(default=None, validator=optional(in_(['identity', 'logit'])))
  n_jobs = attr.ib(default=None)


@attr.s(frozen=True)
class OrbitSelection(object):
  orbit_index = attr.ib(validator=instance_of(int))
  selected_covariate = attr.ib(validator=instance_of(int))
  label = attr.ib()
  pv_treatment = attr.ib(converter=float)
  pv_outcome = attr.ib(converter=float)
  conditional_effect = attr.ib(converter=float)
  pinned = attr.ib(default=None, validator=optional(in_(['high', 'low'])))

  @property
  def min_pvalue(self):
    return min(self.pv_treatment, self.pv_outcome)


@attr.s(frozen=True)
class CovariateOrdering(object):
  """
  :param order: 0-based column indices by decreasing adjustment priority
  :param per_orbit: one :class:`OrbitSelection` per orbit
  """
  order = attr.ib(converter=tuple)
  per_orbit = attr.ib(converter=tuple)
  covariate_labels = attr.ib(converter=tuple)
  pinned_high = attr.ib(factory=tuple, converter=tuple)
  pinned_low = attr.ib(factory=tuple, converter=tuple)

  def __attrs_post_init__(self):
    if sorted(self.order) != list(range(len(self.order))):
      raise ValueError('ordering is not a permutation: {}'.format(self.order))

  @property
  def J(self):
    return len(self.order)

  @property
  def ordered_labels(self):
    return [self.covariate_labels[k] for k in self.order]


@attr.s(frozen=True)
class _CandidateScore(object):
  column = attr.ib()
  pv_treatment = attr.ib()
  pv_outcome = attr.ib()
  conditional_effect = attr.ib()
  failed = attr.ib(default=False)

  @property
  def key(self):
    low, high = sorted([self.pv_treatment, self.pv_outcome])
    return (low, high, self.column)


def _score_candidate(data, selected, outcome_link, column):
  labels = data.labels_of(selected + [column])
  covariates = data.subset_columns(selected + [column])
  treatment_design = DesignMatrix.from_columns(covariates, labels)
  outcome_design = DesignMatrix.from_columns(
    np.column_stack([data.treatment, covariates]), ['A'] + labels
  )
  try:
    treatment_fit = fit_logistic(data.treatment, treatment_design)
    outcome_fit = fit_glm(outcome_link, data.outcome, outcome_design)
  except SingularDesignError as err:
    logger.info(
      'candidate %s is collinear with the current subset (%s), p-values set to 1',
      data.covariate_labels[column], ', '.join(err.columns)
    )
    return _CandidateScore(column, 1., 1., np.nan, failed=True)
  last = treatment_design.q - 1
  return _CandidateScore(
    column=column,
    pv_treatment=wald_test(treatment_fit, last).p_value,
    pv_outcome=wald_test(outcome_fit, outcome_design.q - 1).p_value,
    conditional_effect=outcome_fit.coefficients[1],
  )


def _resolve_pins(data, config):
  high = [data.column_index(c) for c in config.pinned_high]
  low = [data.column_index(c) for c in config.pinned_low]
  overlap = set(high) & set(low)
  if overlap:
    raise ContractError(
      'covariates pinned both high and low: {}'.format(data.labels_of(sorted(overlap)))
    )
  if len(set(high)) != len(high) or len(set(low)) != len(low):
    raise ContractError('duplicate pinned covariates')
  return high, low


def order_covariates(data, config=None):
  """
  Forward double-selection ordering of all covariates

  Pinned-high covariates are ordered among themselves first, then the
  unpinned ones, then the pinned-low ones; every group is ordered by the
  same minimum-of-two-p-values rule conditional on all covariates already
  admitted. Ties go to the smaller partner p-value, then the lower column
  index.

  :param data: the dataset
  :type data: :class:`confsel.ir.Dataset`

  :param config: ordering configuration
  :type config: :class:`OrderingConfig`

  :rtype: :class:`CovariateOrdering`
  """
  config = config or OrderingConfig()
  outcome_link = config.outcome_link or _OUTCOME_LINKS[data.outcome_kind]
  high, low = _resolve_pins(data, config)
  pinned = set(high) | set(low)
  middle = [k for k in range(data.J) if k not in pinned]
  groups = [(sorted(high), 'high'), (middle, None), (sorted(low), 'low')]

  selected = []
  per_orbit = []
  for pool, pin in groups:
    remaining = list(pool)
    while remaining:
      orbit = len(selected) + 1
      scores = parallel_map(
        partial(_score_candidate, data, list(selected), outcome_link),
        remaining,
        n_jobs=config.n_jobs,
      )
      if all(score.failed for score in scores):
        raise OrderingError(
          'no fittable candidate at orbit {}: {}'.format(orbit, data.labels_of(remaining))
        )
      best = min(scores, key=lambda score: score.key)
      logger.debug(
        'orbit %s: %s (pv_treatment=%.3g, pv_outcome=%.3g)',
        orbit, data.covariate_labels[best.column], best.pv_treatment, best.pv_outcome
      )
      per_orbit.append(
        OrbitSelection(
          orbit_index=orbit,
          selected_covariate=best.column,
          label=data.covariate_labels[best.column],
          pv_treatment=best.pv_treatment,
          pv_outcome=best.pv_outcome,
          conditional_effect=best.conditional_effect,
          pinned=pin,
        )
      )
      selected.append(best.column)
      remaining.remove(best.column)
  return CovariateOrdering(
    order=selected,
    per_orbit=per_orbit,
    covariate_labels=data.covariate_labels,
    pinned_high=high,
    pinned_low=low,
  )


def nested_subsets(ordering):
  """
  The nested adjustment sets :math:`L^1 \\subset \\dots \\subset L^J`

  :param ordering: a covariate ordering, or any sequence of column indices
  :rtype: List[List[int]]
  """
  order = list(ordering.order) if isinstance(ordering, CovariateOrdering) else list(ordering)
  return [order[:j] for j in range(1, len(order) + 1)]
