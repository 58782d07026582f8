#-*- coding: utf8 -*-
"""
Package logger

Records go to stderr so that tables printed by ``confsel-cli`` on stdout
stay machine readable. ``CONFSEL_LOG_LEVEL`` takes a level name in any
case (``debug``, ``WARNING``, ...).
"""
import logging
import os
import sys

__all__ = ['logger']


def _level_from_env(default='INFO'):
  name = os.environ.get('CONFSEL_LOG_LEVEL', default).strip().upper()
  if not isinstance(logging.getLevelName(name), int):
    return default
  return name


logger = logging.getLogger(name='confsel-cli')
logger.setLevel(_level_from_env())
_fmt = logging.Formatter(fmt='[%(levelname)s %(filename)s %(funcName)s @ %(lineno)s] %(message)s')
_handler = logging.StreamHandler(sys.stderr)
_handler.formatter = _fmt
logger.addHandler(_handler)
