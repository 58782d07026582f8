# -*- coding:utf8 -*-
import attr
import numpy as np
from attr.validators import in_, instance_of, optional

from confsel.config import ConfigPart
from confsel.errors import MatchingError

__all__ = ['DISTANCE_KINDS', 'FullMatch', 'MatchingConfig']

DISTANCE_KINDS = ('abs_logit_ps', 'abs_ps')


@attr.s(frozen=True)
class MatchingConfig(ConfigPart):
  """
  :param distance_kind: ``abs_logit_ps`` or ``abs_ps``
  :param max_controls: most controls sharing a stratum with a single
    treated unit, ``None`` for no limit
  :param max_treated: most treated units sharing a stratum with a single
    control, ``None`` for no limit
  :param clip: propensity scores are clipped to ``[clip, 1 - clip]`` for
    distances only
  :param cost_scale: distances are multiplied by this and rounded to
    integer costs
  """
  PART = 'matching'

  distance_kind = attr.ib(default='abs_logit_ps', validator=in_(DISTANCE_KINDS))
  max_controls = attr.ib(default=None, validator=optional(instance_of(int)))
  max_treated = attr.ib(default=None, validator=optional(instance_of(int)))
  clip = attr.ib(default=1e-6, converter=float)
  cost_scale = attr.ib(default=1e6, converter=float)


@attr.s(eq=False, repr=False)
class FullMatch(object):
  """
  A full matching: strata of one treated with several controls or one
  control with several treated

  :param strata: unit indices per stratum, ordered by smallest unit
  :param stratum_of: 0-based stratum id of every unit
  :param total_distance: sum of treated-control distances within strata
  :param total_cost: the same sum in integer-scaled costs
  :param distance_kind: one of :data:`DISTANCE_KINDS`
  """
  strata = attr.ib(converter=lambda v: tuple(tuple(int(i) for i in s) for s in v))
  stratum_of = attr.ib(converter=lambda v: np.asarray(v, dtype=int))
  total_distance = attr.ib(converter=float)
  total_cost = attr.ib(default=0, converter=int)
  distance_kind = attr.ib(default='abs_logit_ps', validator=in_(DISTANCE_KINDS))

  @classmethod
  def from_stratum_ids(cls, stratum_of, **kwargs):
    stratum_of = np.asarray(stratum_of, dtype=int)
    strata = [np.flatnonzero(stratum_of == r) for r in np.unique(stratum_of)]
    kwargs.setdefault('total_distance', float('nan'))
    return cls(strata=strata, stratum_of=stratum_of, **kwargs)

  @property
  def n(self):
    return self.stratum_of.shape[0]

  @property
  def R(self):
    return len(self.strata)

  @property
  def stratum_sizes(self):
    return np.array([len(s) for s in self.strata])

  def treated_counts(self, treatment):
    treatment = np.asarray(treatment, dtype=float)
    return [int(treatment[list(s)].sum()) for s in self.strata]

  def check_structure(self, treatment):
    """
    Raise :class:`.MatchingError` unless the strata partition the units,
    each holds both classes and none holds two or more of each
    """
    treatment = np.asarray(treatment, dtype=float)
    if treatment.shape[0] != self.n:
      raise MatchingError('expecting {} units, get {}'.format(self.n, treatment.shape[0]))
    units = sorted(i for s in self.strata for i in s)
    if units != list(range(self.n)):
      raise MatchingError('strata do not partition the units')
    for r, stratum in enumerate(self.strata):
      if any(self.stratum_of[i] != r for i in stratum):
        raise MatchingError('stratum_of disagrees with stratum {}'.format(r))
      n_treated = int(treatment[list(stratum)].sum())
      n_control = len(stratum) - n_treated
      if n_treated == 0 or n_control == 0:
        raise MatchingError('stratum {} lacks a treated or a control unit'.format(r))
      if n_treated >= 2 and n_control >= 2:
        raise MatchingError(
          'stratum {} is not minimal: {} treated, {} control'.format(r, n_treated, n_control)
        )

  def __repr__(self):
    return 'FullMatch(n={}, R={}, total_distance={:.6g})'.format(
      self.n, self.R, self.total_distance
    )
