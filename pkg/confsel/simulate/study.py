# -*- coding:utf8 -*-
"""
Replicate studies of the selection and testing methods

Replicate ``i`` draws its dataset with ``derive_seed(master_seed, i, 0)``
and runs every method's randomization test with
``derive_seed(master_seed, i, 1)``, so all methods see the same data and
the results do not depend on how replicates are scheduled.
"""
import os
from functools import partial

import attr
import numpy as np
from attr.validators import instance_of

from confsel.config import ConfigPart
from confsel.errors import ConfselError, ContractError, StudyAbortedError
from confsel.logger import logger
from confsel.pipeline import (PipelineConfig, evaluate_adjustment_set,
                              select_adjustment_set)
from confsel.utils import derive_seed, parallel_map

from .scenario import generate

__all__ = ['StudyConfig', 'ReplicateResult', 'StudyResult', 'StudyMethodRegistry',
           'run_replicate', 'run_study', 'run_simulation', 'aggregate', 'pvalue_ecdf']


@attr.s(frozen=True)
class StudyConfig(ConfigPart):
  """
  :param n_replicates: replicates per study
  :param methods: study methods to run on every replicate
  :param alphas: levels of the reported rejection rates
  :param ecdf_step: grid step of the p-value ECDF
  :param failure_tolerance: a study aborts once this share of replicates
    fails for some method
  :param n_jobs: workers across replicates
  """
  PART = 'simulate'

  n_replicates = attr.ib(default=1000, validator=instance_of(int))
  methods = attr.ib(factory=lambda: ['stability_pipeline', 'target_ps', 'empty_ps'],
                    converter=list)
  alphas = attr.ib(factory=lambda: [0.01, 0.05, 0.10], converter=list)
  ecdf_step = attr.ib(default=0.01)
  failure_tolerance = attr.ib(default=0.02)
  n_jobs = attr.ib(default=None)


@attr.s(frozen=True)
class ReplicateResult(object):
  index = attr.ib()
  seed = attr.ib()
  method = attr.ib()
  selected_subset = attr.ib(factory=tuple, converter=tuple)
  both_confounders = attr.ib(default=False)
  at_least_one = attr.ib(default=False)
  p_value = attr.ib(default=float('nan'))
  effect_estimate = attr.ib(default=float('nan'))
  se_estimate = attr.ib(default=float('nan'))
  failure = attr.ib(default=None)

  @property
  def failed(self):
    return self.failure is not None


@attr.s(frozen=True)
class StudyResult(object):
  scenario = attr.ib()
  master_seed = attr.ib()
  n_replicates = attr.ib()
  replicates = attr.ib(converter=tuple)
  aggregates = attr.ib()
  ecdf = attr.ib()

  @property
  def methods(self):
    return list(self.aggregates.keys())


class StudyMethodRegistry(object):

  METHOD_MAP = {}

  @classmethod
  def register_method(cls, name, overwrite=False):
    def register(func):
      if not callable(func):
        raise TypeError('expecting a callable, get {}'.format(func))
      if not overwrite and name in cls.METHOD_MAP:
        raise ValueError('duplicate study method registered: {}'.format(name))
      cls.METHOD_MAP[name] = func
      return func
    return register

  @classmethod
  def get(cls, name):
    method = cls.METHOD_MAP.get(name)
    if method is None:
      raise ValueError(
        'unknown study method: {}, registered: {}'.format(name, sorted(cls.METHOD_MAP))
      )
    return method

  @classmethod
  def all_methods(cls):
    return sorted(cls.METHOD_MAP.keys())


@StudyMethodRegistry.register_method('stability_pipeline')
def _stability_pipeline(data, scenario, config, seed):
  ordering, trace, stability, subset = select_adjustment_set(data, config)
  estimate = trace.estimates[stability.selected_orbit - 1] if stability else None
  return evaluate_adjustment_set(data, subset, config, seed, estimate=estimate)


@StudyMethodRegistry.register_method('target_ps')
def _target_ps(data, scenario, config, seed):
  return evaluate_adjustment_set(data, scenario.target_subset, config, seed, name='target')


@StudyMethodRegistry.register_method('empty_ps')
def _empty_ps(data, scenario, config, seed):
  return evaluate_adjustment_set(data, [], config, seed, name='empty')


def run_replicate(scenario, index, master_seed, methods, config):
  """
  Every method on replicate ``index``; failures are recorded, not raised

  :rtype: List[:class:`ReplicateResult`]
  """
  data_seed = derive_seed(master_seed, index, 0)
  test_seed = derive_seed(master_seed, index, 1)
  data = generate(scenario, data_seed)
  confounders = set(scenario.s1)
  results = []
  for name in methods:
    method = StudyMethodRegistry.get(name)
    try:
      row = method(data, scenario, config, test_seed)
    except (ConfselError, np.linalg.LinAlgError) as err:
      logger.warning('replicate %s, method %s failed: %s', index, name, err)
      results.append(
        ReplicateResult(index=index, seed=data_seed, method=name,
                        failure='{}: {}'.format(type(err).__name__, err))
      )
      continue
    chosen = confounders & set(row.subset)
    results.append(
      ReplicateResult(
        index=index,
        seed=data_seed,
        method=name,
        selected_subset=row.subset,
        both_confounders=chosen == confounders,
        at_least_one=bool(chosen),
        p_value=row.test.p_value,
        effect_estimate=row.estimate.psi_hat,
        se_estimate=row.estimate.std_error,
      )
    )
  return results


def _sd(values):
  return float(np.std(values, ddof=1)) if len(values) > 1 else float('nan')


def aggregate(replicates, alphas=(0.01, 0.05, 0.10)):
  """
  Summaries of one method's replicates

  :rtype: Dict[str, float]
  """
  ok = [r for r in replicates if not r.failed]
  summary = {'n_replicates': len(replicates), 'n_failed': len(replicates) - len(ok)}
  if not ok:
    return summary
  sizes = np.array([len(r.selected_subset) for r in ok], dtype=float)
  p_values = np.array([r.p_value for r in ok])
  estimates = np.array([r.effect_estimate for r in ok])
  ses = np.array([r.se_estimate for r in ok])
  summary.update({
    'prob_both': float(np.mean([r.both_confounders for r in ok])),
    'prob_at_least_one': float(np.mean([r.at_least_one for r in ok])),
    'mean_size': float(sizes.mean()),
    'size_q1': float(np.percentile(sizes, 25)),
    'size_q3': float(np.percentile(sizes, 75)),
  })
  for alpha in alphas:
    summary['rejection_rate_{:g}'.format(alpha)] = float(np.mean(p_values <= alpha))
  summary.update({
    'mean_estimate': float(estimates.mean()),
    'ese': _sd(estimates),
    'mean_se': float(ses.mean()),
    'ase': _sd(ses),
    'mean_rmse': float(np.mean(np.sqrt(estimates ** 2 + ses ** 2))),
  })
  return summary


def pvalue_ecdf(p_values, step=0.01):
  """
  Empirical distribution function of the p-values on ``0, step, ..., 1``

  :rtype: Tuple[numpy.ndarray, numpy.ndarray]
  """
  grid = np.round(np.arange(0., 1. + step / 2., step), 10)
  p_values = np.sort(np.asarray(p_values, dtype=float))
  if p_values.size == 0:
    return grid, np.full(grid.shape, np.nan)
  return grid, np.searchsorted(p_values, grid, side='right') / float(p_values.size)


def run_study(scenario, n_replicates, methods, master_seed, config=None, pipeline_config=None):
  """
  Replicate study of ``methods`` (a name or a list of names) on ``scenario``

  :type scenario: :class:`.Scenario`
  :type config: :class:`StudyConfig`
  :type pipeline_config: :class:`confsel.pipeline.PipelineConfig`
  :rtype: :class:`StudyResult`
  """
  if n_replicates < 1:
    raise ContractError('at least one replicate is needed, get {}'.format(n_replicates))
  if master_seed is None:
    raise ContractError('a study needs an explicit master seed')
  config = config or StudyConfig()
  pipeline_config = pipeline_config or PipelineConfig(seed=master_seed)
  # studies draw C from the randtest section
  pipeline_config = attr.evolve(pipeline_config, draws=pipeline_config.randtest.draws)
  methods = [methods] if isinstance(methods, str) else list(methods)
  for name in methods:
    StudyMethodRegistry.get(name)
  logger.info('study %s: %s replicate(s) of %s', scenario.name, n_replicates, ', '.join(methods))

  per_replicate = parallel_map(
    partial(_replicate_task, scenario, master_seed, methods, pipeline_config),
    range(n_replicates),
    n_jobs=config.n_jobs,
  )
  replicates = [row for rows in per_replicate for row in rows]
  aggregates = {}
  ecdf = {}
  for name in methods:
    rows = [r for r in replicates if r.method == name]
    n_failed = sum(r.failed for r in rows)
    if n_failed:
      logger.warning('method %s: %s of %s replicate(s) excluded', name, n_failed, n_replicates)
    if n_failed >= config.failure_tolerance * n_replicates:
      raise StudyAbortedError(
        'method {} failed on {} of {} replicates'.format(name, n_failed, n_replicates)
      )
    aggregates[name] = aggregate(rows, config.alphas)
    ecdf[name] = pvalue_ecdf([r.p_value for r in rows if not r.failed], config.ecdf_step)
  return StudyResult(
    scenario=scenario,
    master_seed=master_seed,
    n_replicates=n_replicates,
    replicates=replicates,
    aggregates=aggregates,
    ecdf=ecdf,
  )


def _replicate_task(scenario, master_seed, methods, config, index):
  return run_replicate(scenario, index, master_seed, methods, config)


def run_simulation(scenario_name, n_replicates, seed, out_dir, methods=None,
                   config=None, pipeline_config=None):
  """
  Run a study on a registered scenario and write its files to ``out_dir``

  Files: ``<scenario>_study.csv``, ``<scenario>_replicates.csv``,
  ``<scenario>_ecdf.csv`` and ``manifest.json``. The manifest records the
  configuration the study ran with.

  :raises UnknownScenarioError: the name is not registered
  :rtype: Tuple[:class:`StudyResult`, Dict[str, str]]
  """
  from confsel.backend import WriterManager
  from .scenario import ScenarioRegistry

  scenario = ScenarioRegistry.get(scenario_name)
  config = config or StudyConfig()
  if methods is None:
    methods = config.methods
  pipeline_config = pipeline_config or PipelineConfig(seed=seed)
  study = run_study(
    scenario, n_replicates, methods, seed, config=config, pipeline_config=pipeline_config
  )
  os.makedirs(out_dir, exist_ok=True)
  paths = {
    name: os.path.join(out_dir, '{}_{}.csv'.format(scenario.name, name.split('_')[0]))
    for name in ('study_csv', 'replicates_csv', 'ecdf_csv')
  }
  paths['manifest_json'] = os.path.join(out_dir, 'manifest.json')
  manifest = pipeline_config.to_config()
  manifest['confsel'].update(
    attr.evolve(config, n_replicates=n_replicates, methods=methods).to_config()['confsel']
  )
  for name, path in paths.items():
    writer_config = manifest if name == 'manifest_json' else None
    WriterManager.get_writer(name)(writer_config).write(study, path)
  logger.info('study %s written to %s', scenario.name, out_dir)
  return study, paths
