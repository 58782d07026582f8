# -*- coding:utf8 -*-
from abc import ABCMeta, abstractmethod

import numpy as np
import pandas as pd

from confsel.errors import ContractError, SingularDesignError
from confsel.glm import DesignMatrix, check_rank
from confsel.ir import OUTCOME_KINDS, Dataset
from confsel.logger import logger

__all__ = ['Parser', 'dataset_from_frame']


def _numeric_or_none(column):
  values = pd.to_numeric(column, errors='coerce')
  if values.isna().any():
    return None
  return values.astype(float)


def _expand_covariates(frame):
  blocks = []
  for name in frame.columns:
    numeric = _numeric_or_none(frame[name])
    if numeric is not None:
      blocks.append(numeric.to_frame(str(name)))
      continue
    dummies = pd.get_dummies(
      frame[name].astype(str), prefix=str(name), prefix_sep='_', drop_first=True, dtype=float
    )
    logger.info('%s expanded to %s indicator column(s)', name, dummies.shape[1])
    blocks.append(dummies)
  if not blocks:
    return pd.DataFrame(index=frame.index)
  return pd.concat(blocks, axis=1)


def _drop_constant(covariates):
  constant = [name for name in covariates.columns if covariates[name].nunique() <= 1]
  for name in constant:
    logger.warning('constant column dropped: %s', name)
  return covariates.drop(columns=constant)


def _drop_singular(covariates):
  if covariates.shape[1] == 0:
    return covariates
  design = DesignMatrix.from_columns(covariates.values, list(covariates.columns))
  try:
    check_rank(design)
  except SingularDesignError as err:
    for name in err.columns:
      logger.warning('singular column dropped: %s', name)
    return covariates.drop(columns=err.columns)
  return covariates


def dataset_from_frame(frame, treatment_column, outcome_column, outcome_kind='continuous'):
  """
  A complete-case :class:`confsel.ir.Dataset` from a data frame

  * rows with a missing cell are dropped
  * non-numeric covariates become 0/1 indicators named ``<col>_<level>``,
    the first level in sorted order being the reference
  * constant and linearly dependent covariates are dropped

  :param frame: one row per unit, every other column a covariate
  :type frame: pandas.DataFrame
  :param treatment_column: name of the 0/1 treatment column
  :param outcome_column: name of the outcome column
  :param outcome_kind: ``continuous`` or ``binary``

  :rtype: :class:`confsel.ir.Dataset`
  """
  if outcome_kind not in OUTCOME_KINDS:
    raise ContractError('unknown outcome kind: {}, expecting one of {}'.format(outcome_kind, OUTCOME_KINDS))
  for name in (treatment_column, outcome_column):
    if name not in frame.columns:
      raise ContractError('column not found: {}, get {}'.format(name, list(frame.columns)))
  n_rows = frame.shape[0]
  frame = frame.dropna(how='any').reset_index(drop=True)
  if frame.shape[0] < n_rows:
    logger.info('dropped %s incomplete row(s)', n_rows - frame.shape[0])

  treatment = _numeric_or_none(frame[treatment_column])
  if treatment is None or not treatment.isin([0., 1.]).all():
    raise ContractError('treatment column {} is not binary 0/1'.format(treatment_column))
  outcome = _numeric_or_none(frame[outcome_column])
  if outcome is None:
    raise ContractError('outcome column {} is not numeric'.format(outcome_column))
  if outcome_kind == 'binary' and not outcome.isin([0., 1.]).all():
    raise ContractError('binary outcome column {} is not coded 0/1'.format(outcome_column))

  covariates = _expand_covariates(frame.drop(columns=[treatment_column, outcome_column]))
  covariates = _drop_singular(_drop_constant(covariates))
  logger.info('ingested %s units, %s covariate(s)', frame.shape[0], covariates.shape[1])
  return Dataset(
    covariates=covariates.values if covariates.shape[1] else np.zeros((frame.shape[0], 0)),
    covariate_labels=[str(c) for c in covariates.columns],
    treatment=treatment.values,
    outcome=outcome.values,
    outcome_kind=outcome_kind,
  )


class Parser(object):
  """
  Base of the data file parsers

  A parser only reads its file format into a :class:`pandas.DataFrame`
  (:meth:`read_frame`); :meth:`parse` turns the frame into a
  :class:`confsel.ir.Dataset` the same way for every format.
  """
  __metaclass__ = ABCMeta

  def __new__(cls, config=None):
    if config is None:
      config = {}
    if not isinstance(config, dict):
      raise ValueError('expecting dict as config, get {}'.format(type(config)))
    self = object.__new__(cls)
    self._config = config
    return self

  @property
  def config(self):
    return self._config

  @abstractmethod
  def read_frame(self, fname):
    raise RuntimeError('abstract read_frame method involded')

  def parse(self, fname, treatment_column, outcome_column, outcome_kind='continuous'):
    return dataset_from_frame(
      self.read_frame(fname), treatment_column, outcome_column, outcome_kind
    )
