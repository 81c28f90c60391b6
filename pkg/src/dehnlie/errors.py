"""Exceptions raised by dehnlie."""


class DehnlieError(Exception):
    pass


class SubspaceNotContained(DehnlieError):
    pass


class ZeroWeightPresent(DehnlieError):
    pass


class NotNilpotent(DehnlieError):
    pass


class VariantUnavailable(DehnlieError):
    pass


class InvalidInput(DehnlieError):
    pass


class UnsupportedDimension(DehnlieError):
    pass


class ValidationError(DehnlieError):
    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0] if self.violations else "unknown violation"
        super().__init__(str(first))


class ParseError(DehnlieError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
