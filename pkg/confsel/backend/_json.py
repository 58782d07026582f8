# -*- coding:utf8 -*-
import json
import math

import numpy as np

from .api import WriterManager
from .base import Writer

__all__ = ['ReportJSONWriter', 'ManifestJSONWriter', 'report_document',
           'manifest_document']


def _clean(value):
  # json has no nan; numpy scalars become python numbers
  if isinstance(value, dict):
    return {str(k): _clean(v) for k, v in value.items()}
  if isinstance(value, (list, tuple, np.ndarray)):
    return [_clean(v) for v in value]
  if isinstance(value, (np.integer,)):
    return int(value)
  if isinstance(value, (float, np.floating)):
    value = float(value)
    return None if math.isnan(value) or math.isinf(value) else value
  return value


def _version():
  from confsel import __version__
  return __version__


def report_document(report):
  """a pipeline report as plain json-able data"""
  ordering = report.ordering
  stability = report.stability
  trajectory = []
  for selection, estimate in zip(ordering.per_orbit, report.trace.estimates):
    orbit = selection.orbit_index
    trajectory.append({
      'orbit': orbit,
      'covariate_added': selection.label,
      'pinned': selection.pinned,
      'pv_treatment': selection.pv_treatment,
      'pv_outcome': selection.pv_outcome,
      'conditional_effect': selection.conditional_effect,
      'psi_hat': estimate.psi_hat,
      'std_error': estimate.std_error,
      'max_weight': estimate.max_weight,
      'std_diff': stability.std_diff_of(orbit),
      'q': stability.q_values.get(orbit, float('nan')),
    })
  rows = []
  for row in report.rows:
    rows.append({
      'name': row.name,
      'size': row.size,
      'covariates': list(row.labels),
      'estimator_kind': row.estimate.estimator_kind,
      'psi_hat': row.estimate.psi_hat,
      'std_error': row.estimate.std_error,
      'p_value': row.test.p_value,
      'draws': row.test.draws,
      'n_strata': row.match.R,
      'rejected': row.test.p_value <= report.alpha,
    })
  document = {
    'version': _version(),
    'seed': report.seed,
    'alpha': report.alpha,
    'J': ordering.J,
    'trajectory': trajectory,
    'selected_orbit': report.selected_orbit,
    'selected_subset': list(report.selected.labels),
    'rows': rows,
    'notes': list(report.notes),
  }
  if stability is not None:
    document['stability'] = {
      'window_width': stability.window_width,
      'requested_window_width': stability.requested_window_width,
      'benchmark': stability.benchmark,
    }
  return _clean(document)


def manifest_document(study, config=None):
  """what is needed to rerun a study"""
  return _clean({
    'version': _version(),
    'scenario': study.scenario.describe(),
    'master_seed': study.master_seed,
    'n_replicates': study.n_replicates,
    'methods': study.methods,
    'seed_scheme': 'data: derive_seed(master_seed, index, 0); test: derive_seed(master_seed, index, 1)',
    'config': config or {},
  })


class _JSONWriter(Writer):

  def document(self, obj):
    raise NotImplementedError('all json writers must overwrite document method')

  def render(self, obj):
    return json.dumps(self.document(obj), indent=2, sort_keys=True, allow_nan=False) + '\n'


@WriterManager.register
class ReportJSONWriter(_JSONWriter):
  NAME = 'report_json'

  def document(self, report):
    return report_document(report)


@WriterManager.register
class ManifestJSONWriter(_JSONWriter):
  """``config`` of the writer is recorded as the study configuration"""
  NAME = 'manifest_json'

  def document(self, study):
    return manifest_document(study, self.config)
