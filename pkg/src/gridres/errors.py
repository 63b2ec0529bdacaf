"""Exception hierarchy shared by every gridres module."""


class GridResError(Exception):
    """Base class for all errors raised by gridres."""


class InvalidDimsError(GridResError, ValueError):
    pass


class GridMismatchError(GridResError, ValueError):
    pass


class UnsupportedRankError(GridResError, ValueError):
    pass


class DomainError(GridResError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class DegeneratePairError(DomainError):
    pass


class ResourceLimitError(GridResError):
    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class NonexistentError(GridResError):
    """No k-resolving set exists for the requested k."""


class ParseError(GridResError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
