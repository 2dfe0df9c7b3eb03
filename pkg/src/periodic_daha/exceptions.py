"""Exception hierarchy shared by all modules."""


class DAHAError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(DAHAError, ValueError):
    """Malformed input: maps to CLI exit code 2."""


class DuplicateResidue(InvalidInput):
    pass


class MismatchedRank(InvalidInput):
    pass


class InvalidShape(InvalidInput):
    pass


class NotADiagram(InvalidInput):
    pass


class InvalidParameter(InvalidInput):
    pass


class IndexOutOfRange(InvalidInput):
    pass


class C2Violation(InvalidInput):
    """A content function fails the separation condition: between two
    consecutive points of ``F^{-1}(p)`` there must be exactly one point of
    ``F^{-1}(p - 1)`` and exactly one of ``F^{-1}(p + 1)``.

    ``witness`` is ``(p, i, j, sign)``: ``i < j`` are consecutive points of
    ``F^{-1}(p)`` and ``sign`` says whether the ``p - 1`` (``-``) or the
    ``p + 1`` (``+``) separator is missing or not unique.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAContent(DAHAError):
    pass


class InternalInvariant(DAHAError, AssertionError):
    pass
