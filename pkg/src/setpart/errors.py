"""Exception types raised by the library.

Every error is a subclass of :class:`SetpartError`, so callers can catch the
whole family with one clause.  The concrete classes mirror the failure modes
of the public operations.
"""


class SetpartError(Exception):
    """Base class for all library errors."""


class NegativeIndex(SetpartError, ValueError):
    """A sequence was asked for a value at a negative index."""


class IndexOutOfRange(SetpartError, ValueError):
    """An index or parameter pair lies outside the operation's domain."""


class SizeTooLarge(SetpartError, ValueError):
    """The requested exhaustive sweep exceeds the documented ceiling."""


class NonContiguousGround(SetpartError, ValueError):
    """A canonical word was requested for a partition whose ground set is not 1..n."""


class InvalidRGS(SetpartError, ValueError):
    """A word violates the restricted-growth invariants."""


class ElementNotInGround(SetpartError, ValueError):
    """An element lookup fell outside the partition's ground set."""


class WeightVectorTooShort(SetpartError, ValueError):
    """A polynomial evaluation needs more weights than were supplied."""


class NonIntegerCoefficient(SetpartError, ArithmeticError):
    """A coefficient that must reduce to an integer did not.  Signals a bug."""


class MalformedInput(SetpartError, ValueError):
    """A structured argument does not satisfy the operation's preconditions."""


class PreconditionViolated(SetpartError, ValueError):
    """An inverse map was applied to a value outside the forward image."""
