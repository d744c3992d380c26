"""Exception hierarchy shared by every foldecode module.

Precondition failures derive from :class:`PreconditionError`; internal
consistency tripwires (conditions that indicate a bug or a broken
invariant rather than bad input) derive from :class:`Tripwire`.
"""


class FoldecodeError(Exception):
    """Base class for all library errors."""


class PreconditionError(FoldecodeError, ValueError):
    """Caller supplied inputs outside an operation's contract."""


class Tripwire(FoldecodeError, RuntimeError):
    """An invariant that should be impossible to violate was violated."""


# galois field
class NotPrime(PreconditionError):
    pass


class ReducibleModulus(PreconditionError):
    pass


class DivisionByZero(FoldecodeError, ZeroDivisionError):
    pass


class FieldMismatch(PreconditionError):
    pass


class IncompatibleFields(PreconditionError):
    pass


# function fields
class PoleAtPlace(PreconditionError):
    pass


class UnsupportedDivisor(PreconditionError):
    pass


class BadParameter(PreconditionError):
    pass


class SingularSeed(PreconditionError):
    pass


# codec
class InsufficientPlaces(PreconditionError):
    pass


class DegreeTooLarge(PreconditionError):
    pass


class LengthMismatch(PreconditionError):
    pass


class IndexOutOfRange(PreconditionError):
    pass


class ShapeMismatch(PreconditionError):
    pass


# decoder
class NegativeKappa(PreconditionError):
    pass


class PrecisionTooLow(PreconditionError):
    pass


class CandidateOverflow(PreconditionError):
    pass


class NoSolution(Tripwire):
    pass


class ListBoundViolated(Tripwire):
    pass


# class field machinery
class SplittingFieldTooLarge(PreconditionError):
    pass


class NonIntegerGenus(Tripwire):
    pass


class RamifiedPlace(PreconditionError):
    pass


class CapExceeded(PreconditionError):
    pass
