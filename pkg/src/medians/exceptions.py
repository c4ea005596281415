"""Exceptions for the medians package"""


class MedianError(Exception):
    """General Error for medians"""


class RationalArithmeticError(MedianError, ZeroDivisionError):
    """Exception raised when a rational is built with a zero denominator"""


class DegenerateRatioError(MedianError):
    """Exception raised when a ratio p:q is requested for p = q = 0"""


class ParameterError(MedianError, ValueError):
    """Exception raised when generator parameters or bounds are out of range"""


class ConstructionConsistencyError(MedianError):
    """Exception raised when an internal identity fails.

    This signals a bug or corrupted data, never a user error.
    """


class VerificationError(MedianError):
    """Exception raised when a sextuple is required to verify and does not"""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class RecordParseError(MedianError):
    """Exception raised when an input record cannot be parsed"""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number
