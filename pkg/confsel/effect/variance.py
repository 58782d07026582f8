# -*- coding:utf8 -*-
import numpy as np

from confsel.errors import ContractError

from .base import DiffVariance

__all__ = ['diff_variance']

# variances below this fraction of the influence scale count as zero
_RELATIVE_ZERO = 1e-20


def diff_variance(e_j, e_k):
  """
  Variance of :math:`\\sqrt{n}(\\hat\\psi_j - \\hat\\psi_k)` from paired
  influence values and the standardized difference

  The variance is :math:`(n-1)^{-1}\\sum_i(\\hat\\phi^j_i - \\hat\\phi^k_i)^2`
  and the standardized difference divides the estimate difference by
  ``sqrt(variance / n)``. A zero variance leaves the standardized
  difference undefined (``nan``, ``defined=False``).

  :type e_j: :class:`.EffectEstimate`
  :type e_k: :class:`.EffectEstimate`
  :rtype: :class:`.DiffVariance`
  """
  if e_j.estimator_kind != e_k.estimator_kind:
    raise ContractError(
      'mixed estimator kinds: {} vs {}'.format(e_j.estimator_kind, e_k.estimator_kind)
    )
  if e_j.n != e_k.n:
    raise ContractError('estimates on different samples: n={} vs n={}'.format(e_j.n, e_k.n))
  n = e_j.n
  diffs = e_j.influence - e_k.influence
  variance = float(np.sum(diffs ** 2) / (n - 1))
  scale = float(np.mean(e_j.influence ** 2) + np.mean(e_k.influence ** 2))
  difference = e_j.psi_hat - e_k.psi_hat
  defined = variance > 0. and variance > _RELATIVE_ZERO * scale
  std_diff = difference / np.sqrt(variance / n) if defined else float('nan')
  return DiffVariance(
    orbit_j=e_j.orbit_index,
    orbit_k=e_k.orbit_index,
    difference=difference,
    variance=variance,
    std_diff=std_diff,
    defined=bool(defined),
  )
