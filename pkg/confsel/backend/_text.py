# -*- coding:utf8 -*-
from .api import WriterManager
from .base import Writer
from .template_env import env

__all__ = ['ReportTextWriter', 'StudyTextWriter']


class _TemplateWriter(Writer):
  TEMPLATE = None

  def context(self, obj):
    raise NotImplementedError('all template writers must overwrite context method')

  def render(self, obj):
    return env.get_template(self.TEMPLATE).render(**self.context(obj))


@WriterManager.register
class ReportTextWriter(_TemplateWriter):
  NAME = 'report_txt'
  TEMPLATE = 'report.txt'

  def context(self, report):
    stability = report.stability
    orbits = []
    for selection, estimate in zip(report.ordering.per_orbit, report.trace.estimates):
      orbits.append({
        'orbit': selection.orbit_index,
        'label': selection.label,
        'psi_hat': estimate.psi_hat,
        'std_diff': stability.std_diff_of(selection.orbit_index),
        'q': stability.q_values.get(selection.orbit_index),
        'selected': selection.orbit_index == report.selected_orbit,
      })
    return {'report': report, 'orbits': orbits}


@WriterManager.register
class StudyTextWriter(_TemplateWriter):
  NAME = 'study_txt'
  TEMPLATE = 'study.txt'

  def context(self, study):
    return {'study': study}
