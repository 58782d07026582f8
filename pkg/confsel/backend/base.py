# -*- coding:utf8 -*-
from confsel.utils import MUST_OVERWRITEN


class Writer(object):
  """
  Base of the output writers

  A writer turns one in-memory result into one file. Subclasses set
  ``NAME`` (the registry key) and implement :meth:`render`, returning the
  file content as text.
  """

  NAME = MUST_OVERWRITEN

  def __new__(cls, config=None, *args, **kwargs):
    if cls.NAME is MUST_OVERWRITEN:
      raise ValueError('Every Writer must overwrite NAME attribute: {}'.format(cls))
    if config is None:
      config = {}
    if not isinstance(config, dict):
      raise ValueError('expecting {}, get {}'.format(dict, type(config)))
    self = object.__new__(cls)
    self._config = config
    return self

  @property
  def config(self):
    return self._config

  def render(self, obj):
    raise NotImplementedError('all writers must overwrite render method')

  def write(self, obj, file_or_path):
    content = self.render(obj)
    if isinstance(file_or_path, str):
      with open(file_or_path, 'w', newline='') as fid:
        fid.write(content)
    else:
      file_or_path.write(content)
    return content

  def __call__(self, *args, **kwargs):
    return self.write(*args, **kwargs)
