"""
Exceptions raised across vcradon.
All of them derive from ValueError, so callers that only care about bad input can catch that.
"""

from __future__ import annotations


class EmptyClassError(ValueError):
    r"""
    A metric was asked of a class with no concepts.
    """

    def __init__(self, what: str = "this operation"):
        super().__init__(f"{what} is undefined on the empty concept class.")


class CoordinateError(ValueError):
    r"""
    A coordinate outside the domain [0, n).
    """

    def __init__(self, x, n: int):
        self.x = x
        self.n = n
        super().__init__(f"Coordinate {x} is out of range for a domain of size {n}.")


class PreconditionError(ValueError):
    pass


class ForbiddenTraceError(PreconditionError):
    r"""
    Raised when a coordinate set has zero or several missing traces although a unique one was expected.
    Several missing traces on a minimal non-shattered set of an extremal class mean a bug upstream.
    """

    def __init__(self, X, missing):
        self.X = tuple(X)
        self.missing = list(missing)
        super().__init__(
            f"Expected a unique forbidden trace on {self.X}, found {len(self.missing)}."
        )


class ClassFileError(ValueError):
    r"""
    Malformed class file.

    Attributes:
        line: 1-based line number of the offending line (None if the file as a whole is bad)
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ArrangementFileError(ClassFileError):
    pass


class GenericityError(ValueError):
    r"""
    The resampling or perturbation budget ran out before a generic arrangement was found.
    """


class ExportError(ValueError):
    pass
