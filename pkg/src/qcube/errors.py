"""Exception types shared across the package."""


class QCubeError(Exception):
    """Base class for all qcube errors."""


# --- code files and code structure ---

class EmptyInputError(QCubeError):
    """Code file contains no generator rows and no length information."""


class NonBinaryCharacterError(QCubeError):
    """A generator row contains a character other than '0' or '1'."""


class RaggedRowsError(QCubeError):
    """Generator rows have unequal lengths."""


class InvalidCodeError(QCubeError):
    """Code fails the doubly-even / independence validation."""


class EmptySubsetError(QCubeError):
    """Wedge weight requested for an empty index subset."""


class GeneratorIndexError(QCubeError):
    """Generator index outside 0..k-1."""


class NormalizationDivergedError(QCubeError):
    """Private-column normalization exceeded its iteration cap."""


class NonPositiveLengthError(QCubeError):
    """Code length must be at least 1."""


# --- size guards ---

class TooLargeError(QCubeError):
    """Input exceeds the supported size for an exact computation."""


# --- numeric / exact cross-checks ---

class ResidualTooLargeError(QCubeError):
    """A numeric eigenvalue is farther from an even integer than tolerated."""


class InexactDivisionError(QCubeError):
    """An exact integer division left a remainder (invariant breach upstream)."""


class OutOfRangeError(QCubeError):
    """Numeric argument outside its documented range."""


# --- thermodynamics ---

class NonPositiveBoundError(QCubeError):
    """Entropy requested for a bound that is not strictly positive."""


class NegativeTemperatureError(QCubeError):
    """Temperature must be nonnegative."""


# --- dashing ---

class SameColorError(QCubeError):
    """Two distinct edge colors are required."""


class IncompleteAssignmentError(QCubeError):
    """Operation requires a complete dashing assignment."""
