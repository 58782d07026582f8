# -*- coding:utf8 -*-
from confsel.utils import class_property

from .base import Writer


class WriterManager(object):
  WRITERS = {}

  @classmethod
  def get_writer(cls, name):
    if name not in cls.WRITERS:
      raise ValueError('unknown writer name: %s' % name)
    return cls.WRITERS[name]

  @classmethod
  def register(cls, writer_cls):
    if not issubclass(writer_cls, Writer):
      raise TypeError(
        'can only register subclass of %s: get %s' % (Writer, writer_cls)
      )
    if writer_cls.NAME in cls.WRITERS:
      raise ValueError('duplicate writer name: %s' % writer_cls.NAME)
    cls.WRITERS[writer_cls.NAME] = writer_cls
    return writer_cls

  @class_property
  def writers(cls):
    return sorted(cls.WRITERS.keys())
