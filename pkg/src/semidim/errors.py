"""Exception hierarchy. Each class maps to one CLI exit code."""


class SemidimError(Exception):
    exit_code = 1


class SemiringFormatError(SemidimError, ValueError):
    """Malformed table or file: wrong shape, out-of-range entry, bad JSON."""

    exit_code = 2


class InadmissibleError(SemidimError, ValueError):
    """A semiring fails an axiom or one of the standing hypotheses."""

    exit_code = 1


class CapExceededError(SemidimError):
    exit_code = 3


class UnsupportedCaseError(SemidimError):
    exit_code = 4


class UnknownVertexError(SemidimError, KeyError):
    exit_code = 1


class HypothesisError(InadmissibleError):
    """A product factor violates antinegativity or closure of Z under addition."""
