# -*- coding:utf8 -*-
r"""
Stability of the effect trajectory across orbits

Each orbit's estimate is compared with a benchmark orbit (the largest by
default) through the standardized difference, and a moving window of
inverse-variance weighted differences yields Cochran's Q

.. math::

  Q_j = \sum_{k=j-h}^{j+h} w_k \{(\hat\psi_k - \hat\psi_J) - \bar\psi_j\}^2,
  \quad w_k = \hat V(\hat\psi_k - \hat\psi_J)^{-1}

where :math:`\bar\psi_j` is the weighted mean difference within the window.
The smallest orbit attaining the minimal Q is selected.
"""
import attr
import numpy as np
import pandas as pd
from attr.validators import instance_of, optional

from confsel.config import ConfigPart
from confsel.effect import diff_variance
from confsel.errors import ContractError, SelectionError
from confsel.logger import logger

__all__ = ['StabilityConfig', 'StabilityReport', 'std_diff_trajectory',
           'cochran_q_from_differences', 'cochran_q', 'select_stable_orbit',
           'assess_stability', 'trajectory_frame']


def _check_window(instance, attrib, value):
  if value < 3 or value % 2 != 1:
    raise ValueError('{} must be an odd integer >= 3, get {}'.format(attrib.name, value))


@attr.s(frozen=True)
class StabilityConfig(ConfigPart):
  """
  :param window_width: odd width of the Q window, at least 3; shrunk to the largest odd
    width that fits when there are too few orbits
  :param benchmark_orbit: 1-based benchmark orbit, ``None`` for the last one
  :param std_diff_threshold: when set, orbits with a larger absolute
    standardized difference are not eligible for selection
  """
  PART = 'stability'

  window_width = attr.ib(default=5, validator=[instance_of(int), _check_window])
  benchmark_orbit = attr.ib(default=None, validator=optional(instance_of(int)))
  std_diff_threshold = attr.ib(default=None, validator=optional(instance_of((int, float))))


@attr.s(frozen=True)
class StabilityReport(object):
  """
  :param J: number of orbits
  :param psi_hats: the J estimates, orbit 1 first
  :param std_diffs: length J - 1, the non-benchmark orbits in order,
    ``nan`` where undefined
  :param q_values: orbit -> Q for every orbit where the window fits,
    ``nan`` where the window carries no weight
  :param selected_orbit: the selected orbit (1-based)
  :param window_width: the width actually used
  :param requested_window_width: the configured width
  :param benchmark: the benchmark orbit
  :param notes: substitutions and fallbacks applied
  """
  J = attr.ib()
  psi_hats = attr.ib(converter=tuple)
  std_diffs = attr.ib(converter=lambda v: np.asarray(v, dtype=float))
  q_values = attr.ib()
  selected_orbit = attr.ib()
  window_width = attr.ib()
  requested_window_width = attr.ib()
  benchmark = attr.ib()
  notes = attr.ib(factory=tuple, converter=tuple)

  def std_diff_of(self, orbit):
    """standardized difference of ``orbit``, ``nan`` for the benchmark"""
    if orbit == self.benchmark:
      return float('nan')
    position = orbit - 1 if orbit < self.benchmark else orbit - 2
    return float(self.std_diffs[position])


def _resolve_benchmark(J, benchmark):
  if benchmark is None:
    return J
  if not 1 <= benchmark <= J:
    raise ContractError('benchmark orbit {} out of range 1..{}'.format(benchmark, J))
  return benchmark


def _benchmark_differences(estimates, benchmark):
  reference = estimates[benchmark - 1]
  return [diff_variance(est, reference) for est in estimates]


def std_diff_trajectory(estimates, benchmark=None):
  """
  Standardized differences of every non-benchmark orbit against the benchmark

  :param estimates: per-orbit estimates, orbit 1 first
  :type estimates: List[:class:`confsel.effect.EffectEstimate`]
  :param benchmark: 1-based benchmark orbit, defaults to the last

  :rtype: numpy.ndarray
  """
  J = len(estimates)
  if J == 0:
    return np.zeros(0)
  benchmark = _resolve_benchmark(J, benchmark)
  diffs = _benchmark_differences(estimates, benchmark)
  return np.array([
    d.std_diff for j, d in enumerate(diffs, 1) if j != benchmark
  ])


def cochran_q_from_differences(differences, weights):
  """
  Weighted dispersion of one window of differences

  Zero-weight entries do not contribute (their difference may be ``nan``);
  a window without weight gives ``nan``.

  :rtype: float
  """
  weights = np.asarray(weights, dtype=float)
  differences = np.where(weights > 0., np.asarray(differences, dtype=float), 0.)
  total = weights.sum()
  if total <= 0.:
    return float('nan')
  center = np.sum(weights * differences) / total
  return float(np.sum(weights * (differences - center) ** 2))


def _window_inputs(estimates, benchmark):
  n = estimates[0].n
  differences, weights = [], []
  for orbit, d in enumerate(_benchmark_differences(estimates, benchmark), 1):
    differences.append(d.difference)
    if orbit == benchmark or not d.defined:
      weights.append(0.)
    else:
      weights.append(n / d.variance)
  return np.array(differences), np.array(weights)


def cochran_q(estimates, window_width, benchmark=None):
  """
  Q for every orbit whose centered window lies within 1..J

  :param estimates: per-orbit estimates, orbit 1 first
  :param window_width: odd window width, 3 <= window_width <= J

  :rtype: Dict[int, float]
  """
  J = len(estimates)
  if window_width % 2 != 1 or window_width < 3:
    raise ContractError('window width must be an odd integer >= 3, get {}'.format(window_width))
  if window_width > J:
    raise ContractError('window width {} exceeds the {} orbits'.format(window_width, J))
  return _windowed_q(estimates, window_width, _resolve_benchmark(J, benchmark))


def _windowed_q(estimates, window_width, benchmark):
  # width 1 only arises from shrinking the window for two orbits
  J = len(estimates)
  differences, weights = _window_inputs(estimates, benchmark)
  h = (window_width - 1) // 2
  q_values = {}
  for j in range(1 + h, J - h + 1):
    window = slice(j - 1 - h, j + h)
    q_values[j] = cochran_q_from_differences(differences[window], weights[window])
  return q_values


def select_stable_orbit(q_values, std_diffs=None, threshold=None):
  """
  Smallest orbit attaining the minimal defined Q

  :param q_values: orbit -> Q
  :param std_diffs: orbit -> standardized difference, used by ``threshold``
  :param threshold: orbits with ``|std diff| > threshold`` are skipped,
    unless that leaves no candidate

  :rtype: int
  """
  defined = {j: q for j, q in q_values.items() if np.isfinite(q)}
  if not defined:
    raise SelectionError('no defined Q value among orbits {}'.format(sorted(q_values)))
  if threshold is not None and std_diffs is not None:
    kept = {
      j: q for j, q in defined.items()
      if not np.abs(std_diffs.get(j, np.nan)) > threshold
    }
    if kept:
      defined = kept
    else:
      logger.info('no orbit within |std diff| <= %s, threshold ignored', threshold)
  q_min = min(defined.values())
  return min(j for j, q in defined.items() if q == q_min)


def _effective_width(J, requested):
  if requested <= J:
    return requested
  return J if J % 2 == 1 else J - 1


def assess_stability(estimates, config=None):
  """
  Standardized differences, Q values and the selected orbit

  :param estimates: per-orbit estimates, orbit 1 first
  :type estimates: List[:class:`confsel.effect.EffectEstimate`]
  :type config: :class:`StabilityConfig`

  :rtype: :class:`StabilityReport`
  """
  config = config or StabilityConfig()
  J = len(estimates)
  if J == 0:
    raise ContractError('no orbit to assess')
  benchmark = _resolve_benchmark(J, config.benchmark_orbit)
  psi_hats = [est.psi_hat for est in estimates]
  notes = []
  if J == 1:
    notes.append('single orbit, selected without a stability window')
    logger.warning(notes[-1])
    return StabilityReport(
      J=1, psi_hats=psi_hats, std_diffs=[], q_values={}, selected_orbit=1,
      window_width=0, requested_window_width=config.window_width,
      benchmark=benchmark, notes=notes,
    )
  width = _effective_width(J, config.window_width)
  if width != config.window_width:
    notes.append(
      'window width {} shrunk to {} for {} orbits'.format(config.window_width, width, J)
    )
    logger.warning(notes[-1])
  std_diffs = std_diff_trajectory(estimates, benchmark)
  by_orbit = dict(zip([j for j in range(1, J + 1) if j != benchmark], std_diffs))
  undefined = [j for j, s in by_orbit.items() if np.isnan(s)]
  if undefined:
    notes.append('standardized difference undefined at orbit(s) {}'.format(undefined))
    logger.info(notes[-1])
  q_values = _windowed_q(estimates, width, benchmark)
  if config.std_diff_threshold is not None:
    eligible = [j for j, s in by_orbit.items() if not abs(s) > config.std_diff_threshold]
    eligible = [j for j in eligible if np.isfinite(q_values.get(j, np.nan))]
    if not eligible:
      notes.append('std diff threshold {} ignored, no eligible orbit'.format(config.std_diff_threshold))
  selected = select_stable_orbit(q_values, by_orbit, config.std_diff_threshold)
  logger.info('selected orbit %s of %s (window width %s)', selected, J, width)
  return StabilityReport(
    J=J,
    psi_hats=psi_hats,
    std_diffs=std_diffs,
    q_values=q_values,
    selected_orbit=selected,
    window_width=width,
    requested_window_width=config.window_width,
    benchmark=benchmark,
    notes=notes,
  )


def trajectory_frame(report, covariates_added):
  """
  The plot-ready trajectory table

  :param report: the stability report
  :param covariates_added: label of the covariate entering at each orbit

  :rtype: pandas.DataFrame with columns orbit, covariate_added, psi_hat,
    std_diff, q
  """
  orbits = list(range(1, report.J + 1))
  return pd.DataFrame({
    'orbit': orbits,
    'covariate_added': list(covariates_added),
    'psi_hat': list(report.psi_hats),
    'std_diff': [report.std_diff_of(j) for j in orbits],
    'q': [report.q_values.get(j, float('nan')) for j in orbits],
  }, columns=['orbit', 'covariate_added', 'psi_hat', 'std_diff', 'q'])
