"""Error hierarchy.

Every domain error carries a stable string code so the CLI can emit it in
JSON error objects and tests can match on it without parsing messages.
"""


class QlformError(Exception):
    code = "ERROR"

    def __init__(self, message=""):
        super().__init__(message or self.code)


class ArityMismatch(QlformError):
    code = "ARITY_MISMATCH"


class InexactDivision(QlformError):
    code = "INEXACT_DIVISION"


class BothZero(QlformError):
    code = "BOTH_ZERO"


class CapExceeded(QlformError):
    code = "CAP_EXCEEDED"


class DuplicateVar(QlformError):
    code = "DUPLICATE_VAR"


class ThetaIsSquare(QlformError):
    code = "THETA_IS_SQUARE"


class DivisionByZero(QlformError):
    code = "DIVISION_BY_ZERO"


class FieldMismatch(QlformError):
    code = "FIELD_MISMATCH"


class ZeroForm(QlformError):
    code = "ZERO_FORM"


class RequiresAnisotropic(QlformError):
    code = "REQUIRES_ANISOTROPIC"


class IndexOutOfRange(QlformError):
    code = "INDEX_OUT_OF_RANGE"


class AIsSquare(QlformError):
    code = "A_IS_SQUARE"


class NotAnExtension(QlformError):
    code = "NOT_AN_EXTENSION"


class SplitForm(QlformError):
    code = "SPLIT_FORM"


class DimTooSmall(QlformError):
    code = "DIM_TOO_SMALL"


class SplitInput(QlformError):
    code = "SPLIT_INPUT"


class NotIsotropic(QlformError):
    code = "NOT_ISOTROPIC"


class InternalInconsistency(QlformError):
    code = "INTERNAL_INCONSISTENCY"


class ParseError(QlformError):
    code = "PARSE_ERROR"

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"{message} (line {line}, col {col})"
        super().__init__(message)
