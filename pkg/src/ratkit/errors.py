"""Exception types raised across the package."""


class RatkitError(Exception):
    """Base class for every error raised by ratkit."""


class TagMismatch(RatkitError):
    """Two operands belong to different semirings."""


class NotStarable(RatkitError):
    """The star of a weight is undefined in its semiring."""

    def __init__(self, weight):
        super().__init__(f"star of {weight} is not defined")
        self.weight = weight


class InvalidExpression(RatkitError):
    """An expression has a starred subexpression whose constant term is not starable."""

    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path


class ParseError(RatkitError):
    """Malformed expression, weight or automaton text."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownLetter(RatkitError):
    """A letter outside the declared alphabet."""


class EpsilonPresent(RatkitError):
    """An operation that needs an epsilon-free automaton got one with epsilon edges."""


class NonBooleanEpsilon(RatkitError):
    """Epsilon removal was requested on a weighted automaton."""


class NonBoolean(RatkitError):
    """A Boolean-only construction was applied to a weighted object."""


class TooLarge(RatkitError):
    """The input exceeds the size bound of an exhaustive algorithm."""


class EmptyWord(RatkitError):
    """Derivation by a word requires a nonempty word."""
