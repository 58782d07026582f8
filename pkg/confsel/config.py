from copy import deepcopy

import attr

from confsel.utils import MUST_OVERWRITEN, class_property, parse_config

__all__ = ['ConfigPart']


class ConfigPart(object):
  """
  Base of every configurable component

  Subclasses are ``attrs`` classes whose field defaults are the default
  configuration. Configuration documents are nested as
  ``<TARGET>.<PART>`` (``[confsel.stability]`` in toml)

  .. code-block:: python

    @attr.s(frozen=True)
    class StabilityConfig(ConfigPart):
      PART = 'stability'
      window_width = attr.ib(default=5)

    StabilityConfig.from_config({'confsel': {'stability': {'window_width': 3}}})
  """

  TARGET = 'confsel'
  PART = MUST_OVERWRITEN

  @classmethod
  def _validate_part(cls):
    if cls.PART is MUST_OVERWRITEN:
      raise ValueError(
        'Every ConfigPart must overwrite PART attribute: {}'.format(cls)
      )

  @class_property
  def default_config(cls):
    cls._validate_part()
    config = {}
    for field in attr.fields(cls):
      default = field.default
      if isinstance(default, attr.Factory):
        default = default.factory()
      config[field.name] = deepcopy(default)
    return config

  @classmethod
  def from_config(cls, config=None, **overrides):
    """
    Build the component from a (possibly nested) config dict

    Unknown keys are rejected; keyword ``overrides`` win over ``config``
    and ``None`` valued overrides are ignored.
    """
    cls._validate_part()
    config = config or {}
    if cls.TARGET in config:
      config = config[cls.TARGET]
    if cls.PART in config:
      config = config[cls.PART]
    final_config = cls.default_config
    for key, value in config.items():
      if isinstance(value, dict):
        # sibling sections of a whole document
        continue
      if key not in final_config:
        raise ValueError(
          'unknown option for {}: {}'.format(cls.PART, key)
        )
      final_config[key] = value
    for key, value in overrides.items():
      if value is not None:
        final_config[key] = value
    return cls(**final_config)

  @classmethod
  def from_file(cls, file_or_path, **overrides):
    return cls.from_config(parse_config(file_or_path), **overrides)

  def to_config(self):
    return {self.TARGET: {self.PART: attr.asdict(self)}}
