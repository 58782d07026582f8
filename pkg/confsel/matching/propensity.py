# -*- coding:utf8 -*-
from confsel.glm import DesignMatrix, fit_logistic

__all__ = ['ps_for_subset']


def ps_for_subset(data, subset, config=None):
  """
  Fitted main-effects logistic propensity scores on ``subset``

  Probabilities are returned unclipped; separation is flagged by
  :func:`confsel.glm.fit_logistic`.

  :rtype: numpy.ndarray
  """
  subset = [int(k) for k in subset]
  design = DesignMatrix.from_columns(data.subset_columns(subset), data.labels_of(subset))
  fit = fit_logistic(data.treatment, design, config=config)
  return fit.predict(design.values)
