"""Exception hierarchy shared by every engine module."""


class HahnError(Exception):
    """Base class for all errors raised by :mod:`hahnseries`.

    ``position`` is filled in by the expression evaluator when the error can
    be attributed to a span of source text.
    """

    position = None


class ConfigurationError(HahnError):
    """Incompatible exponent modes or an invalid derivation/shift setup."""


class ModeMismatchError(ConfigurationError):
    pass


class DomainError(HahnError):
    """An operation was applied outside the set where it is defined."""


class UnsupportedConstantLogError(DomainError):
    pass


class UndefinedValuationError(DomainError, ZeroDivisionError):
    pass


class UsageError(HahnError):
    pass


class ResourceError(HahnError):
    pass
