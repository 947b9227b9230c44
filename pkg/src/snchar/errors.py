"""
Exception hierarchy for snchar.

Validation problems subclass ``ValueError`` and arithmetic breakdowns subclass
``ArithmeticError`` so callers can keep catching the builtin families.
"""


class SnCharError(Exception):
    """Base class for every error raised by snchar"""


class PartitionError(SnCharError, ValueError):
    """Malformed partition text or an invalid part"""


class WeightMismatchError(SnCharError, ValueError):
    """Shape and cycle type partition different integers"""


class DomainError(SnCharError, ValueError):
    """An integer argument lies outside the operation's domain"""


class VariableCountError(SnCharError, ValueError):
    """Laurent polynomials over different numbers of variables"""


class ConfigError(SnCharError, ValueError):
    pass


class CertificationError(SnCharError):
    """A derived closed form disagrees with direct summation"""


class InsufficientTermsError(SnCharError, ValueError):
    pass


class SingularPointError(SnCharError, ArithmeticError):
    """The leading recurrence coefficient vanishes at an extension point"""


class RecurrenceInconsistencyError(SnCharError, ArithmeticError):
    """Non-exact division while extending an integer sequence"""


class EngineMismatchError(SnCharError):
    """The constant-term and Murnaghan-Nakayama engines disagree"""


class CatalogWriteError(SnCharError, OSError):
    """A catalog file could not be written"""
