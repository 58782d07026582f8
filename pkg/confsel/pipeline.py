# -*- coding:utf8 -*-
"""
The applied workflow: order, trace, select, match and test
"""
import attr
from attr.validators import instance_of, optional

from confsel.config import ConfigPart
from confsel.effect import EffectConfig, EstimatorRegistry, OrbitTrace, trace_orbits
from confsel.errors import ContractError
from confsel.logger import logger
from confsel.matching import MatchingConfig, full_match, ps_for_subset
from confsel.ordering import CovariateOrdering, OrderingConfig, order_covariates
from confsel.randtest import RandTestConfig, randomization_pvalue
from confsel.stability import StabilityConfig, assess_stability
from confsel.utils import derive_seed

__all__ = ['PipelineConfig', 'AdjustmentResult', 'PipelineReport',
           'select_adjustment_set', 'evaluate_adjustment_set', 'run_pipeline']


def _check_alpha(instance, attrib, value):
  if not 0. < value < 1.:
    raise ValueError('alpha must lie in (0, 1), get {}'.format(value))


def _check_draws(instance, attrib, value):
  if value < 1:
    raise ValueError('at least one randomization draw is needed, get {}'.format(value))


@attr.s(frozen=True)
class PipelineConfig(ConfigPart):
  """
  Configuration of the whole workflow

  Own options live under ``[confsel.pipeline]``; every component reads
  its own section (``[confsel.ordering]``, ``[confsel.stability]``, ...)
  of the same document.

  :param alpha: significance level reported next to the p-values
  :param seed: master seed of the randomization tests, required to run
  :param draws: randomization draws C
  :param comparisons: also report the empty and the full adjustment sets
  """
  PART = 'pipeline'
  _PARTS = (
    ('ordering', OrderingConfig),
    ('effect', EffectConfig),
    ('stability', StabilityConfig),
    ('matching', MatchingConfig),
    ('randtest', RandTestConfig),
  )

  alpha = attr.ib(default=0.05, validator=_check_alpha)
  seed = attr.ib(default=None, validator=optional(instance_of(int)))
  draws = attr.ib(default=2000, validator=[instance_of(int), _check_draws])
  comparisons = attr.ib(default=True, validator=instance_of(bool))
  ordering = attr.ib(factory=OrderingConfig, validator=instance_of(OrderingConfig))
  effect = attr.ib(factory=EffectConfig, validator=instance_of(EffectConfig))
  stability = attr.ib(factory=StabilityConfig, validator=instance_of(StabilityConfig))
  matching = attr.ib(factory=MatchingConfig, validator=instance_of(MatchingConfig))
  randtest = attr.ib(factory=RandTestConfig, validator=instance_of(RandTestConfig))

  @classmethod
  def from_config(cls, config=None, **overrides):
    config = config or {}
    document = config.get(cls.TARGET, config)
    for name, part_cls in cls._PARTS:
      if overrides.get(name) is None:
        overrides[name] = part_cls.from_config(document)
    return super(PipelineConfig, cls).from_config(config, **overrides)

  def to_config(self):
    own = {
      field.name: getattr(self, field.name)
      for field in attr.fields(type(self))
      if not isinstance(getattr(self, field.name), ConfigPart)
    }
    if own['seed'] is None:
      del own['seed']
    document = {self.PART: own}
    for name, _ in self._PARTS:
      document.update(getattr(self, name).to_config()[self.TARGET])
    return {self.TARGET: document}


@attr.s(frozen=True)
class AdjustmentResult(object):
  """effect estimate and randomization test for one adjustment set"""
  name = attr.ib()
  subset = attr.ib(converter=tuple)
  labels = attr.ib(converter=tuple)
  estimate = attr.ib()
  match = attr.ib()
  test = attr.ib()

  @property
  def size(self):
    return len(self.subset)


@attr.s(frozen=True)
class PipelineReport(object):
  """
  :param ordering: the covariate ordering
  :param trace: per-orbit estimates along the ordering
  :param stability: the stability report, ``None`` without covariates
  :param rows: the selected adjustment set first, then the comparisons
  """
  ordering = attr.ib(validator=instance_of(CovariateOrdering))
  trace = attr.ib(validator=instance_of(OrbitTrace))
  stability = attr.ib()
  selected_orbit = attr.ib()
  rows = attr.ib(converter=tuple)
  alpha = attr.ib()
  seed = attr.ib()
  notes = attr.ib(factory=tuple, converter=tuple)

  @property
  def selected(self):
    return self.rows[0]


def select_adjustment_set(data, config=None):
  """
  Order the covariates, trace the effect along the orbits and select the
  stable orbit

  :rtype: Tuple[CovariateOrdering, OrbitTrace, StabilityReport, List[int]]
  """
  config = config or PipelineConfig()
  ordering = order_covariates(data, config.ordering)
  trace = trace_orbits(data, ordering, config.effect)
  if trace.J == 0:
    logger.warning('no covariate to select from, adjusting for none')
    return ordering, trace, None, []
  stability = assess_stability(trace.estimates, config.stability)
  subset = list(ordering.order[:stability.selected_orbit])
  return ordering, trace, stability, subset


def evaluate_adjustment_set(data, subset, config, seed, name='selected', estimate=None):
  """
  Effect estimate, full matching on the propensity score of ``subset``
  and the randomization p-value

  :param estimate: an estimate on ``subset`` computed beforehand
  :rtype: :class:`AdjustmentResult`
  """
  subset = list(subset)
  if estimate is None:
    estimator = EstimatorRegistry.get(config.effect.estimator_kind)
    estimate = estimator(data, subset, config=config.effect, orbit_index=len(subset))
  ps = ps_for_subset(data, subset)
  match = full_match(ps, data.treatment, config=config.matching)
  test = randomization_pvalue(
    match, data.treatment, data.outcome, C=config.draws, seed=seed, config=config.randtest
  )
  logger.info(
    '%s set (%s covariate(s)): psi_hat=%.4g, se=%.4g, p=%.4g',
    name, len(subset), estimate.psi_hat, estimate.std_error, test.p_value
  )
  return AdjustmentResult(
    name=name,
    subset=subset,
    labels=data.labels_of(subset),
    estimate=estimate,
    match=match,
    test=test,
  )


def run_pipeline(data, config):
  """
  The full workflow on one dataset

  Row ``i`` of the report is tested with ``derive_seed(config.seed, i)``,
  so the report depends on the data, the configuration and the seed only.

  :type data: :class:`confsel.ir.Dataset`
  :type config: :class:`PipelineConfig`
  :rtype: :class:`PipelineReport`
  """
  if config.seed is None:
    raise ContractError('the pipeline needs an explicit seed')
  ordering, trace, stability, subset = select_adjustment_set(data, config)
  notes = list(stability.notes) if stability is not None else ['no covariates']
  selected_orbit = stability.selected_orbit if stability is not None else 0
  estimate = trace.estimates[selected_orbit - 1] if selected_orbit else None
  adjustment_sets = [('selected', subset, estimate)]
  if config.comparisons:
    adjustment_sets.append(('empty', [], None))
    adjustment_sets.append(('all', list(ordering.order), trace.estimates[-1] if trace.J else None))
  rows = [
    evaluate_adjustment_set(data, sub, config, derive_seed(config.seed, i), name=name, estimate=est)
    for i, (name, sub, est) in enumerate(adjustment_sets)
  ]
  return PipelineReport(
    ordering=ordering,
    trace=trace,
    stability=stability,
    selected_orbit=selected_orbit,
    rows=rows,
    alpha=config.alpha,
    seed=config.seed,
    notes=notes,
  )
