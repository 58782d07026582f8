# -*- coding:utf8 -*-
import importlib
import os

from confsel.errors import ContractError

from .base import Parser, dataset_from_frame


class FrontendSelector(object):
  """
  Data file parsers by file extension

  Parsers register with :meth:`register`; the modules of this package are
  imported on first use so that every parser is available.
  """
  _parser_map = {}
  _setuped = False

  @classmethod
  def register(cls, target_exts):
    def _register(parser_cls):
      if not issubclass(parser_cls, Parser):
        raise TypeError('incorrect parser type for registration')
      for ext in target_exts:
        ext = ext.lower()
        if ext in cls._parser_map:
          raise ValueError("duplicate file ext detected: %s" % ext)
        cls._parser_map[ext] = parser_cls
      return parser_cls

    return _register

  @classmethod
  def parse(cls, data_file, treatment_column, outcome_column,
            outcome_kind='continuous', config=None):
    """
    :param data_file: path of the data file, its extension picks the parser
    :param config: the ``[confsel.frontend]`` section
    :rtype: :class:`confsel.ir.Dataset`
    """
    if not os.path.exists(data_file):
      raise ContractError('data file not found: {}'.format(data_file))
    _, ext = os.path.splitext(data_file)
    parser = cls.select_parser(ext)(config)
    return parser.parse(data_file, treatment_column, outcome_column, outcome_kind)

  @classmethod
  def select_parser(cls, file_ext):
    cls._setup()
    parser_cls = cls._parser_map.get(file_ext.lower(), None)
    if parser_cls is None:
      raise ContractError(
        "unknown data file ext found: {}, supported: {}".format(file_ext, cls.supported_exts())
      )
    return parser_cls

  @classmethod
  def supported_exts(cls):
    cls._setup()
    return sorted(cls._parser_map.keys())

  @classmethod
  def _setup(cls):
    """
    Import every module under `confsel.frontend` so that all parsers
    are registered
    """
    if cls._setuped:
      return
    cls._setuped = True
    root_dir = os.path.dirname(__file__)
    _, _, files = next(os.walk(root_dir))
    for file in sorted(files):
      fname, ext = os.path.splitext(file)
      if fname not in ['__init__', 'base'] and ext == ".py":
        importlib.import_module('confsel.frontend.%s' % fname)
