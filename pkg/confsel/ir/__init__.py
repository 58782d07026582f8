# -*- coding:utf8 -*-
from .base import OUTCOME_KINDS, Dataset
