# -*- coding:utf8 -*-
from .base import LINKS, DesignMatrix, FittedGlm, GlmConfig, WaldTest
from .fit import check_rank, fit_linear, fit_logistic, wald_test


def fit_glm(link, y, X, weights=None, config=None):
  """dispatch on ``link`` (``identity`` or ``logit``)"""
  if link == 'logit':
    return fit_logistic(y, X, weights=weights, config=config)
  if link == 'identity':
    return fit_linear(y, X, weights=weights, config=config)
  raise ValueError('unknown link: {}, expecting one of {}'.format(link, LINKS))
