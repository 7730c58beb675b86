"""
Exceptions.py - Custom Exceptions for package.
"""


class BurstCodesError(Exception):
    """
    Basic exception class for burstcodes.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


# --- gf ---


class FieldError(BurstCodesError):
    """
    Basic exception class for prime field arithmetic.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class FieldMismatchError(FieldError):
    """
    Exception for when two elements of different fields are combined.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class ZeroInverseError(FieldError):
    """
    Exception for when the inverse of zero is requested.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class CompositeModulusError(FieldError):
    """
    Exception for when a field is requested over a modulus that is not prime.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class FieldSizeError(FieldError):
    """
    Exception for when the modulus is outside of the supported range.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


# --- linalg ---


class LinAlgError(BurstCodesError):
    """
    Basic exception class for linear algebra over Z_p.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class SingularMatrixError(LinAlgError):
    """
    Exception for when an inverse or solution is requested for a singular matrix.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class NullspaceDimensionError(LinAlgError):
    """
    Exception for when a nullspace is not one-dimensional.
    """

    def __init__(self, message: str, dimension: int = None):
        self.message = message
        self.dimension = dimension
        super().__init__(message)


class DimensionMismatchError(LinAlgError):
    """
    Exception for when matrix shapes are incompatible.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class ZeroScalarError(LinAlgError):
    """
    Exception for when a column is scaled by zero.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class IndexRangeError(LinAlgError):
    """
    Exception for when a row or column range falls outside of a matrix.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


# --- construct ---


class ConstructionError(BurstCodesError):
    """
    Basic exception class for generator matrix constructions.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class NotSystematicError(ConstructionError):
    """
    Exception for when a matrix does not start with an identity block.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class NotGoodError(ConstructionError):
    """
    Exception for when a matrix has a dependent cyclic window.
    """

    def __init__(self, message: str, failing_windows: list = None):
        self.message = message
        self.failing_windows = failing_windows or []
        super().__init__(message)


class NotBinaryError(ConstructionError):
    """
    Exception for when an operation only defined over Z_2 gets another field.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class LimitExceededError(ConstructionError):
    """
    Exception for when an enumeration would be larger than the caller allows.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class PreconditionViolatedError(ConstructionError):
    """
    Exception for when arguments fall outside of a construction's domain.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class SizeCapError(ConstructionError):
    """
    Exception for when a requested matrix exceeds the size limits.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


# --- goodness ---


class GoodnessError(BurstCodesError):
    """
    Basic exception class for goodness checks.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class InvalidIndexSetError(GoodnessError):
    """
    Exception for when a position set is the wrong size or out of range.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


# --- codec ---


class CodecError(BurstCodesError):
    """
    Basic exception class for encoding and decoding.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class MessageLengthError(CodecError):
    """
    Exception for when a message or word has the wrong number of symbols.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class BurstTooLongError(CodecError):
    """
    Exception for when a burst is longer than the code can correct.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class NotABurstError(CodecError):
    """
    Exception for when erased positions are not cyclically contiguous.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class InconsistentWordError(CodecError):
    """
    Exception for when the known symbols of a word do not belong to any codeword.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class InternalSingularError(AssertionError):
    """
    Raised when a decoding window of a supposedly good matrix is singular.

    This is not a user error: library-built codes cannot trigger it.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


# --- harness ---


class HarnessError(BurstCodesError):
    """
    Basic exception class for file formats, channels and the CLI.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class MatrixFormatError(HarnessError):
    """
    Exception for a malformed matrix file. line and column are 1-based.
    """

    def __init__(self, message: str, line: int = None, column: int = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        self.message = message
        super().__init__(message)


class ChannelError(HarnessError):
    """
    Exception for an invalid channel model or channel spec string.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class InputError(HarnessError):
    """
    Exception for malformed user input, such as a bad CSV word.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)
