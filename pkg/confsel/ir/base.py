# -*- coding: utf8 -*-
import attr
import numpy as np
from attr.validators import in_, instance_of

from confsel.errors import ContractError

__all__ = ['Dataset', 'OUTCOME_KINDS']

OUTCOME_KINDS = ('continuous', 'binary')


def _as_float_matrix(value):
  arr = np.asarray(value, dtype=float)
  if arr.ndim == 1 and arr.size == 0:
    arr = arr.reshape(0, 0)
  return arr


def _as_float_vector(value):
  return np.asarray(value, dtype=float).ravel()


@attr.s(eq=False, repr=False)
class Dataset(object):
  """
  Complete-case observational data

  :param covariates: the n x J covariate matrix
  :type covariates: numpy.ndarray

  :param covariate_labels: the J column labels
  :type covariate_labels: List[str]

  :param treatment: binary treatment indicator of length n
  :type treatment: numpy.ndarray

  :param outcome: outcome of length n
  :type outcome: numpy.ndarray

  :param outcome_kind: ``continuous`` or ``binary``
  :type outcome_kind: str
  """
  covariates = attr.ib(converter=_as_float_matrix)
  covariate_labels = attr.ib(converter=list)
  treatment = attr.ib(converter=_as_float_vector)
  outcome = attr.ib(converter=_as_float_vector)
  outcome_kind = attr.ib(default='continuous', validator=in_(OUTCOME_KINDS))

  def __attrs_post_init__(self):
    n = self.treatment.shape[0]
    if self.covariates.ndim != 2:
      raise ContractError('covariates must be a matrix, get shape {}'.format(self.covariates.shape))
    if self.covariates.shape[1] == 0 and self.covariates.shape[0] != n:
      self.covariates = np.zeros((n, 0))
    if self.covariates.shape[0] != n or self.outcome.shape[0] != n:
      raise ContractError(
        'inconsistent number of units: covariates {}, treatment {}, outcome {}'.format(
          self.covariates.shape[0], n, self.outcome.shape[0]
        )
      )
    if len(self.covariate_labels) != self.covariates.shape[1]:
      raise ContractError(
        'expecting {} covariate labels, get {}'.format(
          self.covariates.shape[1], len(self.covariate_labels)
        )
      )
    if len(set(self.covariate_labels)) != len(self.covariate_labels):
      raise ContractError('duplicate covariate labels')
    for name, arr in [('covariates', self.covariates),
                      ('treatment', self.treatment),
                      ('outcome', self.outcome)]:
      if not np.all(np.isfinite(arr)):
        raise ContractError('missing or non-finite values in {}'.format(name))
    if not np.all(np.isin(self.treatment, (0., 1.))):
      raise ContractError('treatment must be coded 0/1')
    if self.treatment.min() == self.treatment.max():
      raise ContractError('both treatment classes must be present')
    if self.outcome_kind == 'binary' and not np.all(np.isin(self.outcome, (0., 1.))):
      raise ContractError('binary outcome must be coded 0/1')

  @property
  def n(self):
    return self.treatment.shape[0]

  @property
  def J(self):
    return self.covariates.shape[1]

  def column_index(self, label_or_index):
    """
    Resolve a covariate label (or pass through an index)

    :rtype: int
    """
    if isinstance(label_or_index, (int, np.integer)):
      index = int(label_or_index)
      if not 0 <= index < self.J:
        raise ContractError('covariate index out of range: {}'.format(index))
      return index
    try:
      return self.covariate_labels.index(label_or_index)
    except ValueError:
      raise ContractError('unknown covariate: {}'.format(label_or_index))

  def labels_of(self, subset):
    return [self.covariate_labels[k] for k in subset]

  def subset_columns(self, subset):
    subset = list(subset)
    return self.covariates[:, subset] if subset else np.zeros((self.n, 0))

  def take(self, rows):
    """a new Dataset restricted to (or permuted by) ``rows``"""
    rows = np.asarray(rows)
    return Dataset(
      covariates=self.covariates[rows],
      covariate_labels=list(self.covariate_labels),
      treatment=self.treatment[rows],
      outcome=self.outcome[rows],
      outcome_kind=self.outcome_kind,
    )

  def __repr__(self):
    return 'Dataset(n={}, J={}, outcome_kind={!r})'.format(
      self.n, self.J, self.outcome_kind
    )
