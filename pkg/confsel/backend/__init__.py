# -*- coding:utf8 -*-
from .api import WriterManager
from .base import Writer
from ._csv import read_strata_csv, read_trajectory_csv, study_frame
from ._json import manifest_document, report_document
from . import _text
