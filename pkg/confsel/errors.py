# -*- coding:utf8 -*-
"""
Exceptions raised by :mod:`confsel`

Every error derives from :class:`ConfselError` and from the builtin
exception the calling code would naturally catch (``ValueError`` for bad
inputs, ``RuntimeError`` for procedures that cannot complete).
"""

__all__ = [
  'ConfselError', 'ContractError', 'SingularDesignError',
  'DegenerateResponseError', 'DegenerateDesignError', 'NonFiniteWeightError',
  'OrderingError', 'SelectionError', 'MatchingError',
  'EnumerationTooLargeError', 'StudyAbortedError', 'UnknownScenarioError',
]


class ConfselError(Exception):
  # the module which raised, used by the cli for provenance
  MODULE = 'confsel'


class ContractError(ConfselError, ValueError):
  pass


class SingularDesignError(ConfselError, ValueError):
  MODULE = 'glm'

  def __init__(self, columns, msg=None):
    self.columns = list(columns)
    if msg is None:
      msg = 'singular design, linearly dependent column(s): {}'.format(
        ', '.join(str(c) for c in self.columns)
      )
    super(SingularDesignError, self).__init__(msg)


class DegenerateResponseError(ConfselError, ValueError):
  MODULE = 'glm'


class DegenerateDesignError(ConfselError, ValueError):
  MODULE = 'effect'


class NonFiniteWeightError(ConfselError, ValueError):
  MODULE = 'effect'

  def __init__(self, unit, ps):
    self.unit = unit
    super(NonFiniteWeightError, self).__init__(
      'non-finite weight for unit {}: propensity score {!r}'.format(unit, ps)
    )


class OrderingError(ConfselError, RuntimeError):
  MODULE = 'ordering'


class SelectionError(ConfselError, RuntimeError):
  MODULE = 'stability'


class MatchingError(ConfselError, RuntimeError):
  MODULE = 'matching'


class EnumerationTooLargeError(ConfselError, RuntimeError):
  MODULE = 'randtest'


class StudyAbortedError(ConfselError, RuntimeError):
  MODULE = 'simulate'


class UnknownScenarioError(ConfselError, ValueError):
  MODULE = 'simulate'

  def __init__(self, name, registered):
    self.name = name
    self.registered = sorted(registered)
    super(UnknownScenarioError, self).__init__(
      'unknown scenario: {}, registered scenarios: {}'.format(
        name, ', '.join(self.registered)
      )
    )
