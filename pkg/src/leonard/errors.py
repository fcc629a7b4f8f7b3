"""Exception hierarchy shared by every module."""


class LeonardError(Exception):
    """Base class for errors raised by this package."""


class FieldMismatch(LeonardError, TypeError):
    """Two scalars from different fields met in one operation."""


class StructuralError(LeonardError, ValueError):
    """A parameter array has sequences of the wrong length."""


class PartialSumMismatch(LeonardError, ValueError):
    """The theta-side and theta*-side partial sums disagree."""


class PA5Violation(LeonardError, ValueError):
    """The three-term ratios are not constant or not shared by theta and theta*."""


class DiameterTooSmall(LeonardError, ValueError):
    pass


class ExtensionRequired(LeonardError):
    """A root lives outside every field this package can build."""

    def __init__(self, message, discriminant=None):
        super().__init__(message)
        self.discriminant = discriminant


class FitInconsistent(LeonardError, ValueError):
    pass


class DegenerateData(LeonardError, ValueError):
    """Closed-form data violates a non-degeneracy constraint."""


class InadmissibleField(LeonardError, ValueError):
    pass


class NotMultiplicityFree(LeonardError, ValueError):
    pass


class ZeroDenominator(LeonardError, ArithmeticError):
    pass


class DocumentError(LeonardError, ValueError):
    """Parse error in a text document, with 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
