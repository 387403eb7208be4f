"""Exception types shared across the library."""


class QsetError(Exception):
    """Base class for every domain error raised by this package."""


class IllFormedFormula(QsetError):
    """An identity-style question was asked about an m-atom.

    Identity is simply not part of the language for m-atoms, so callers
    get this error instead of a boolean.
    """


class DepthExceeded(QsetError):
    """Qset nesting went past the construction bound."""


class UniverseMiss(QsetError):
    """A weak pair was requested over a universe holding no match."""


class NotAMember(QsetError):
    """Difference tried to remove an element class absent from the qset."""


class EmptyQset(QsetError):
    """A strong singleton was requested from an empty qset."""


class CardinalTooLarge(QsetError):
    """A sub-qset was requested with more elements than available."""


class Overflow(QsetError):
    """An exact count went past the representable bound (2**64)."""


class NotPure(QsetError):
    """An operation needed a qset of m-atoms of a single species."""


class MalformedPair(QsetError):
    """A qset could not be read back as an ordered-pair encoding."""


class ScaleExceeded(QsetError):
    """An enumeration was requested beyond the supported desk scale."""


class QsetSyntaxError(QsetError):
    """Input text does not conform to the qset grammar.

    ``offset`` is the 1-based character position of the problem.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.message = message
        self.offset = offset

    def __str__(self) -> str:
        return f"{self.message} (offset {self.offset})"


class CountZero(QsetSyntaxError):
    """A ``*0`` multiplicity appeared in source text."""

    def __init__(self, offset: int):
        super().__init__("count must be at least 1", offset)
