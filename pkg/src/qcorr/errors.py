"""Exception types shared across the package.

Everything raised on purpose derives from :class:`QcorrError`, so callers
(including the command-line tool) can distinguish domain failures from bugs.
"""


class QcorrError(Exception):
    """Base class for all package-specific errors."""


class InvariantViolation(QcorrError):
    """A state, operator, or channel failed one of its construction checks."""


class NotHermitian(QcorrError):
    """Matrix expected to be Hermitian is not (within tolerance)."""


class NotUnitary(QcorrError):
    """Matrix expected to be unitary is not (within tolerance)."""


class ConvergenceFailure(QcorrError):
    """An eigensolver did not converge."""


class DimensionMismatch(QcorrError):
    """Operands have incompatible shapes or register sizes."""


class EmptySubset(QcorrError):
    """A qubit subset that must be non-empty was empty."""


class InvalidSubset(QcorrError):
    """A qubit subset reaches outside the register."""


class InvalidBipartition(QcorrError):
    """A bipartition block is empty or not a proper subset of the register."""


class IndexOutOfRange(QcorrError):
    """A basis index lies outside the register's Hilbert space."""


class ZeroVector(QcorrError):
    """A state vector with (near-)zero norm cannot be normalized."""


class OutOfRange(QcorrError):
    """A scalar parameter lies outside its admissible range."""


class BadArity(QcorrError):
    """A count argument is below the smallest meaningful value."""


class TooLarge(QcorrError):
    """Requested problem size exceeds the resource guard."""


class ParseError(QcorrError):
    """A state file is malformed."""
