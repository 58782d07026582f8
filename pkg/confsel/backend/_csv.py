# -*- coding:utf8 -*-
"""
Plot-ready CSV tables

Floats are written with 17 significant digits so that reading a table
back reproduces the numbers exactly.
"""
import pandas as pd

from confsel.matching import FullMatch
from confsel.stability import trajectory_frame

from .api import WriterManager
from .base import Writer

__all__ = ['TrajectoryCSVWriter', 'OrderingCSVWriter', 'StrataCSVWriter', 'StudyCSVWriter',
           'ReplicatesCSVWriter', 'ECDFCSVWriter', 'read_trajectory_csv',
           'read_strata_csv', 'study_frame']

FLOAT_FORMAT = '%.17g'
TRAJECTORY_COLUMNS = ['orbit', 'covariate_added', 'psi_hat', 'std_diff', 'q']
ORDERING_COLUMNS = ['orbit', 'covariate', 'pv_treatment', 'pv_outcome', 'conditional_effect', 'pinned']
_SELECTION_COLUMNS = [
  'scenario', 'method', 'n_replicates', 'n_failed', 'prob_both', 'prob_at_least_one',
  'mean_size', 'size_q1', 'size_q3',
]
_ESTIMATE_COLUMNS = ['mean_estimate', 'ese', 'mean_se', 'ase', 'mean_rmse']


class _CSVWriter(Writer):

  def frame(self, obj):
    raise NotImplementedError('all csv writers must overwrite frame method')

  def render(self, obj):
    return self.frame(obj).to_csv(index=False, float_format=FLOAT_FORMAT)


@WriterManager.register
class TrajectoryCSVWriter(_CSVWriter):
  """orbit, covariate_added, psi_hat, std_diff, q for a pipeline report"""
  NAME = 'trajectory_csv'

  def frame(self, report):
    if report.stability is None:
      return pd.DataFrame(columns=TRAJECTORY_COLUMNS)
    return trajectory_frame(report.stability, report.ordering.ordered_labels)


@WriterManager.register
class OrderingCSVWriter(_CSVWriter):
  """one row per orbit: the covariate entering there and its evidence"""
  NAME = 'ordering_csv'

  def frame(self, ordering):
    return pd.DataFrame([
      {
        'orbit': s.orbit_index,
        'covariate': s.label,
        'pv_treatment': s.pv_treatment,
        'pv_outcome': s.pv_outcome,
        'conditional_effect': s.conditional_effect,
        'pinned': s.pinned or '',
      }
      for s in ordering.per_orbit
    ], columns=ORDERING_COLUMNS)


@WriterManager.register
class StrataCSVWriter(_CSVWriter):
  NAME = 'strata_csv'

  def frame(self, match):
    return pd.DataFrame({
      'unit_id': range(match.n),
      'stratum_id': match.stratum_of,
    }, columns=['unit_id', 'stratum_id'])


def study_frame(study):
  """one row of aggregates per method"""
  rows = []
  for method, summary in study.aggregates.items():
    row = dict(summary)
    row.update(scenario=study.scenario.name, method=method)
    rows.append(row)
  rate_columns = sorted(
    {key for row in rows for key in row if key.startswith('rejection_rate_')},
    key=lambda key: float(key[len('rejection_rate_'):])
  )
  columns = _SELECTION_COLUMNS + rate_columns + _ESTIMATE_COLUMNS
  return pd.DataFrame(rows, columns=columns)


@WriterManager.register
class StudyCSVWriter(_CSVWriter):
  NAME = 'study_csv'

  def frame(self, study):
    return study_frame(study)


@WriterManager.register
class ReplicatesCSVWriter(_CSVWriter):
  NAME = 'replicates_csv'

  def frame(self, study):
    labels = study.scenario.labels
    return pd.DataFrame([
      {
        'index': r.index,
        'method': r.method,
        'seed': r.seed,
        'selected_subset': ';'.join(labels[k] for k in r.selected_subset),
        'subset_size': len(r.selected_subset),
        'both_confounders': int(r.both_confounders),
        'at_least_one': int(r.at_least_one),
        'p_value': r.p_value,
        'effect_estimate': r.effect_estimate,
        'se_estimate': r.se_estimate,
        'failure': r.failure or '',
      }
      for r in sorted(study.replicates, key=lambda r: (r.index, r.method))
    ], columns=['index', 'method', 'seed', 'selected_subset', 'subset_size',
                'both_confounders', 'at_least_one', 'p_value', 'effect_estimate',
                'se_estimate', 'failure'])


@WriterManager.register
class ECDFCSVWriter(_CSVWriter):
  NAME = 'ecdf_csv'

  def frame(self, study):
    frames = [
      pd.DataFrame({'method': method, 'alpha': grid, 'ecdf': values},
                   columns=['method', 'alpha', 'ecdf'])
      for method, (grid, values) in study.ecdf.items()
    ]
    if not frames:
      return pd.DataFrame(columns=['method', 'alpha', 'ecdf'])
    return pd.concat(frames, ignore_index=True)


def read_trajectory_csv(file_or_path):
  """
  :rtype: pandas.DataFrame, as built by :func:`confsel.stability.trajectory_frame`
  """
  frame = pd.read_csv(file_or_path, dtype={'covariate_added': str})
  missing = set(TRAJECTORY_COLUMNS) - set(frame.columns)
  if missing:
    raise ValueError('not a trajectory table, missing columns: {}'.format(sorted(missing)))
  return frame[TRAJECTORY_COLUMNS]


def read_strata_csv(file_or_path, distance_kind='abs_logit_ps'):
  """
  :rtype: :class:`confsel.matching.FullMatch` (distances are not stored)
  """
  frame = pd.read_csv(file_or_path).sort_values('unit_id')
  if list(frame['unit_id']) != list(range(frame.shape[0])):
    raise ValueError('unit ids must be 0..n-1')
  return FullMatch.from_stratum_ids(frame['stratum_id'].values, distance_kind=distance_kind)
