"""Exception types shared across the package."""


class QGaborError(Exception):
    """Base class for all qgabor errors."""


class ShapeMismatch(QGaborError, ValueError):
    """Operands live on different grids."""


class NonFinite(QGaborError, ValueError):
    """A signal value is NaN or infinite."""


class ZeroWindow(QGaborError, ValueError):
    """Window has zero energy; the transform requires a non-null window."""


class ZeroSignal(QGaborError, ValueError):
    """Signal has zero energy where a positive norm is required."""


class BudgetExceeded(QGaborError, ValueError):
    """Full Gabor transform would exceed the configured shift budget."""


class BoundaryMass(QGaborError, ValueError):
    """Too much signal mass at the domain boundary for a decay-assuming step."""


class OutOfRange(QGaborError, ValueError):
    """Argument outside a function's documented stability range."""


class DomainError(QGaborError, ValueError):
    """Argument outside a function's mathematical domain."""


class QsigFormatError(QGaborError, ValueError):
    """Base class for signal-file format problems."""


class BadMagic(QsigFormatError):
    """File does not start with the QSIG2D magic."""


class BadVersion(QsigFormatError):
    """Unsupported QSIG2D format version."""


class TruncatedPayload(QsigFormatError):
    """Payload size does not match the header."""


class UnsupportedFormat(QGaborError, ValueError):
    """Image file is not binary 8-bit P6 PPM."""
