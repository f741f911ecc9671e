"""Exception hierarchy for lierig.

Library code raises these; only the command line layer turns them into exit
codes and one-line diagnostics.
"""


class LierigError(Exception):
    """Base class for every error raised by lierig."""


class DimensionMismatchError(LierigError, ValueError):
    pass


class NonSquareMatrixError(DimensionMismatchError):
    pass


class NonSymmetricMatrixError(LierigError, ValueError):
    pass


class SingularMatrixError(LierigError, ValueError):
    pass


class ZeroPolynomialError(LierigError, ValueError):
    pass


class CochainDegreeError(LierigError, ValueError):
    """Differential degree outside 0..2 (or cochain degree outside 0..3)."""


class InvalidParameterError(LierigError, ValueError):
    """Family parameter out of range, e.g. heisenberg(0) or k > n."""


class NotALieAlgebraError(LierigError):
    """Raised when an operation needs the Jacobi identity and it fails.

    ``triple`` is the first basis triple (i, j, k) whose Jacobiator is nonzero.
    """

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class NotSolvableError(LierigError):
    pass


class NotATorusError(LierigError):
    """``check`` names what failed: 'derivation', 'commuting' or 'semisimple'."""

    def __init__(self, message, check=None, index=None):
        super().__init__(message)
        self.check = check
        self.index = index


class AlgebraMismatchError(LierigError):
    pass


class ParseError(LierigError):
    """Syntax or semantic error in a ``.lie`` document, with a 1-based position."""

    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


class UnknownEntryError(LierigError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown catalog entry: {self.name}"
