"""
Exception hierarchy shared by every package.

Library code raises these; the CLI turns them into log lines and exit codes.
"""


class AlgebraError(Exception):
    """Base class for all errors raised by continuant-lab"""


class RingParseError(AlgebraError):
    """A ring descriptor or element literal could not be parsed"""


class RingMismatchError(AlgebraError):
    """Operands belong to different rings"""


class UnsupportedOperationError(AlgebraError):
    """The operation is not implemented for this kind of ring"""


class InfiniteRingError(AlgebraError):
    """An enumeration was requested over an infinite ring"""


class PreconditionError(AlgebraError):
    """A documented precondition of an operation does not hold"""


class ArithmeticInconsistencyError(AlgebraError):
    """An internal consistency assertion failed; signals an arithmetic bug"""


class NotNormalFormError(AlgebraError):
    """A word was expected to be in normal form"""


class GroupTooLargeError(AlgebraError):
    """A group is larger than the configured enumeration limit"""


class HypothesisNotSatisfiedError(AlgebraError):
    """The hypothesis of a construction is not met by the given data"""


class SearchBudgetExceededError(AlgebraError):
    """A search exceeded its time or size budget"""


class CertificateSchemaError(AlgebraError):
    """A certificate does not match the published JSON schema"""


class CertificateCorruptionError(AlgebraError):
    """Replaying a certificate produced a different verdict"""
