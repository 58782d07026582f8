# -*- coding:utf8 -*-
from ._flow import distance_matrix, full_match
from .base import DISTANCE_KINDS, FullMatch, MatchingConfig
from .propensity import ps_for_subset
