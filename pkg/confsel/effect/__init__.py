# -*- coding:utf8 -*-
from .base import (ESTIMATOR_KINDS, DiffVariance, EffectConfig, EffectEstimate,
                   EstimatorRegistry)
from .dr import dr_effect, ipt_weights
from .ols import ols_effect
from .trace import OrbitTrace, estimate_orbits, trace_orbits
from .variance import diff_variance
