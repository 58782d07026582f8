# -*- coding:utf8 -*-
"""
Data-generating scenarios under the null of no individual treatment effect

Covariates are standard normal. The propensity score is
``expit(gamma_confounder * L[s1] + gamma_instrument * L[s3])`` and the
outcome mean ``beta_signal * L[s1 + s2]``; the treatment never enters the
outcome. In collider mode the ``s3`` covariates are driven by two latent
factors, one feeding the treatment and the other the outcome.
"""
import attr
import numpy as np
from attr.validators import in_, instance_of
from scipy.special import expit

from confsel.errors import ContractError, UnknownScenarioError
from confsel.ir import OUTCOME_KINDS, Dataset
from confsel.logger import logger

__all__ = ['Scenario', 'ScenarioRegistry', 'generate']


def _index_tuple(value):
  return tuple(int(v) for v in value)


@attr.s(frozen=True)
class Scenario(object):
  """
  :param s1: confounders (0-based columns)
  :param s2: outcome-only predictors
  :param s3: instruments, or colliders in collider mode
  """
  name = attr.ib(default='custom')
  n = attr.ib(default=80, validator=instance_of(int))
  p = attr.ib(default=25, validator=instance_of(int))
  s1 = attr.ib(default=(0, 1), converter=_index_tuple)
  s2 = attr.ib(default=(2, 3), converter=_index_tuple)
  s3 = attr.ib(default=(4, 5), converter=_index_tuple)
  gamma_confounder = attr.ib(default=1.0)
  gamma_instrument = attr.ib(default=1.6)
  beta_signal = attr.ib(default=0.8)
  outcome_kind = attr.ib(default='continuous', validator=in_(OUTCOME_KINDS))
  outcome_sd = attr.ib(default=4.0)
  collider_mode = attr.ib(default=False)
  nu = attr.ib(default=2.0)
  beta0 = attr.ib(default=0.0)
  latent_var = attr.ib(default=1. / 16)
  collider_noise_var = attr.ib(default=0.5)
  max_redraws = attr.ib(default=100)

  def __attrs_post_init__(self):
    named = list(self.s1) + list(self.s2) + list(self.s3)
    if len(set(named)) != len(named):
      raise ContractError('scenario index sets overlap: {}'.format(named))
    if any(not 0 <= k < self.p for k in named):
      raise ContractError('scenario index out of range for p={}'.format(self.p))

  @property
  def s4(self):
    named = set(self.s1) | set(self.s2) | set(self.s3)
    return tuple(k for k in range(self.p) if k not in named)

  @property
  def labels(self):
    return ['L{}'.format(k + 1) for k in range(self.p)]

  @property
  def target_subset(self):
    """the confounders and the outcome-only predictors"""
    return tuple(sorted(self.s1 + self.s2))

  def describe(self):
    config = attr.asdict(self)
    config['s4'] = list(self.s4)
    for key in ('s1', 's2', 's3'):
      config[key] = list(config[key])
    return config


def _draw(scenario, rng):
  n, p = scenario.n, scenario.p
  covariates = rng.standard_normal((n, p))
  s1, s2, s3 = list(scenario.s1), list(scenario.s2), list(scenario.s3)
  gamma = np.zeros(p)
  gamma[s1] = scenario.gamma_confounder
  beta = np.zeros(p)
  beta[s1 + s2] = scenario.beta_signal
  ps_eta = np.zeros(n)
  outcome_mean = np.full(n, float(scenario.beta0))
  if scenario.collider_mode:
    latent = rng.normal(0., np.sqrt(scenario.latent_var), size=(n, 2))
    noise = rng.normal(0., np.sqrt(scenario.collider_noise_var), size=(n, len(s3)))
    covariates[:, s3] = 2. * latent[:, [0]] + 2. * latent[:, [1]] + noise
    ps_eta += scenario.nu * latent[:, 0]
    outcome_mean += scenario.nu * latent[:, 1]
  else:
    gamma[s3] = scenario.gamma_instrument
  ps_eta += covariates.dot(gamma)
  outcome_mean += covariates.dot(beta)
  treatment = (rng.random(n) < expit(ps_eta)).astype(float)
  if scenario.outcome_kind == 'binary':
    outcome = (rng.random(n) < expit(outcome_mean)).astype(float)
  else:
    outcome = outcome_mean + scenario.outcome_sd * rng.standard_normal(n)
  return covariates, treatment, outcome


def _degenerate(treatment, outcome, outcome_kind):
  if treatment.min() == treatment.max():
    return True
  return outcome_kind == 'binary' and outcome.min() == outcome.max()


def generate(scenario, seed):
  """
  Draw one dataset

  A draw with a single treatment class (or a single outcome class for a
  binary outcome) is discarded and redrawn from the same generator.

  :type scenario: :class:`Scenario`
  :rtype: :class:`confsel.ir.Dataset`
  """
  rng = np.random.default_rng(seed)
  for redraws in range(scenario.max_redraws + 1):
    covariates, treatment, outcome = _draw(scenario, rng)
    if not _degenerate(treatment, outcome, scenario.outcome_kind):
      break
  else:
    raise ContractError(
      'scenario {} gave degenerate draws {} times in a row'.format(scenario.name, redraws + 1)
    )
  if redraws:
    logger.info('scenario %s: %s degenerate draw(s) redrawn', scenario.name, redraws)
  return Dataset(
    covariates=covariates,
    covariate_labels=scenario.labels,
    treatment=treatment,
    outcome=outcome,
    outcome_kind=scenario.outcome_kind,
  )


class ScenarioRegistry(object):

  SCENARIO_MAP = {}

  @classmethod
  def register(cls, scenario, overwrite=False):
    if not isinstance(scenario, Scenario):
      raise TypeError('expecting {}, get {}'.format(Scenario, type(scenario)))
    if not overwrite and scenario.name in cls.SCENARIO_MAP:
      raise ValueError('duplicate scenario registered: {}'.format(scenario.name))
    cls.SCENARIO_MAP[scenario.name] = scenario
    return scenario

  @classmethod
  def get(cls, name):
    try:
      return cls.SCENARIO_MAP[name]
    except KeyError:
      raise UnknownScenarioError(name, cls.SCENARIO_MAP.keys())

  @classmethod
  def names(cls):
    return sorted(cls.SCENARIO_MAP.keys())


def _register_defaults():
  kinds = {'cont': 'continuous', 'bin': 'binary'}
  for mode in ('base', 'collider'):
    for p in (25, 60):
      for n_s3 in (2, 4):
        for suffix, kind in kinds.items():
          ScenarioRegistry.register(
            Scenario(
              name='{}_p{}_iv{}_{}'.format(mode, p, n_s3, suffix),
              p=p,
              s3=tuple(range(4, 4 + n_s3)),
              outcome_kind=kind,
              collider_mode=(mode == 'collider'),
            )
          )


_register_defaults()
