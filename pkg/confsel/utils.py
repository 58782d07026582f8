# -*- coding: utf8 -*-
import json
import os

import numpy as np
from click.types import ParamType
from joblib import Parallel, delayed
from toml import loads as _parse_toml

from confsel.logger import logger

__all__ = ["NArgsParam", "MUST_OVERWRITEN", "class_property", "parse_config",
           "derive_seed", "get_n_jobs", "parallel_map"]


class NArgsParam(ParamType):
  """Click param type

  split given string value by seperator

  :param sep: seperator to split the string
  :type sep: str

  Values prefixed with ``+`` or ``-`` augment or shrink the option
  default instead of replacing it.

  See also |click_param|_

  .. |click_param| replace:: `Click: Implementing Custom Types`
  .. _click_param: https://click.palletsprojects.com/en/7.x/parameters/#implementing-custom-types
  """
  name = 'list'

  def __init__(self, sep=','):
    self._sep = sep

  def convert(self, value, param, ctx):
    if isinstance(value, (list, tuple)):
      return list(value)
    value = str(value)
    args = [arg for arg in value.split(self._sep) if arg]
    aug_args = [arg for arg in args if arg[0] in ['+', '-']]
    if aug_args:
      default = param.default or ''
      final_args = [arg for arg in default.split(self._sep) if arg]
      for arg in aug_args:
        if arg[0] == '+':
          final_args.append(arg[1:])
        elif arg[0] == '-' and arg[1:] in final_args:
          final_args.remove(arg[1:])
    else:
      final_args = args
    return final_args


class _MustOverwrite(object):
  _obj = None

  def __new__(cls, *args, **kwargs):
    if cls._obj is None:
      cls._obj = object.__new__(cls, *args, **kwargs)
    return cls._obj


MUST_OVERWRITEN = _MustOverwrite()


class class_property(object):

  def __init__(self, getter):
    self._getter = getter

  def __get__(self, obj, objtype=None):
    if objtype is None:
      return self._getter(obj)
    return self._getter(objtype)


def parse_config(file_or_path):
  """
  Load a configuration document

  ``.json`` files are read as JSON, anything else as TOML

  :param file_or_path: path or opened file
  :rtype: dict
  """
  if isinstance(file_or_path, str):
    fid = open(file_or_path, 'r')
    name = file_or_path
  else:
    fid = file_or_path
    name = getattr(fid, 'name', '')
  try:
    text = fid.read()
  finally:
    fid.close()
  if os.path.splitext(name)[1].lower() == '.json':
    return json.loads(text)
  return _parse_toml(text)


def derive_seed(master_seed, *counters):
  """
  Derive a reproducible 32-bit seed from a master seed and counters

  The scheme is ``SeedSequence([master_seed, *counters])``, so seeds
  depend only on the counters (replicate index, draw block, ...) and
  never on scheduling order.

  :rtype: int
  """
  entropy = [int(master_seed)] + [int(c) for c in counters]
  return int(np.random.SeedSequence(entropy).generate_state(1)[0])


def get_n_jobs(n_jobs=None):
  if n_jobs is None:
    n_jobs = int(os.environ.get('CONFSEL_N_JOBS', 1))
  return n_jobs


def parallel_map(func, items, n_jobs=None):
  """
  Map ``func`` over ``items`` keeping the input order

  Runs serially when ``n_jobs`` resolves to 1.
  """
  n_jobs = get_n_jobs(n_jobs)
  items = list(items)
  if n_jobs == 1 or len(items) < 2:
    return [func(item) for item in items]
  logger.debug('dispatching %s tasks to %s workers', len(items), n_jobs)
  return Parallel(n_jobs=n_jobs)(delayed(func)(item) for item in items)
