# -*- coding:utf8 -*-
"""
Delimited text datasets (CSV/TSV with a header row)
"""
import pandas as pd

from . import FrontendSelector
from .base import Parser, dataset_from_frame

__all__ = ['CSVParser', 'TSVParser', 'ingest_csv']


def ingest_csv(path, treatment_column, outcome_column, outcome_kind='continuous', sep=','):
  """
  :param path: file path or buffer
  :rtype: :class:`confsel.ir.Dataset`, see :func:`.dataset_from_frame`
  """
  return dataset_from_frame(
    pd.read_csv(path, sep=sep), treatment_column, outcome_column, outcome_kind
  )


@FrontendSelector.register(target_exts=['.csv'])
class CSVParser(Parser):

  SEP = ','

  def read_frame(self, fname):
    return pd.read_csv(fname, sep=self.config.get('sep', self.SEP))


@FrontendSelector.register(target_exts=['.tsv', '.tab'])
class TSVParser(CSVParser):

  SEP = '\t'
