# -*- coding:utf8 -*-
import math

from jinja2 import Environment, PackageLoader

_loader = PackageLoader('confsel', 'backend/templates')


def _num(value, spec='.4g'):
  if value is None or (isinstance(value, float) and math.isnan(value)):
    return 'NA'
  return format(value, spec)


env = Environment(loader=_loader, trim_blocks=True, lstrip_blocks=True)
env.globals.update(zip=zip)
env.filters['num'] = _num

del _loader
