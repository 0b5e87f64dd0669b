"""Exception types shared across the package."""


class VlxError(Exception):
    """Base class for all package errors."""


class ConfigError(VlxError, ValueError):
    """Invalid parameter or configuration value. CLI exit code 2."""


class NumericalError(VlxError, RuntimeError):
    """A numerical routine failed to meet its contract. CLI exit code 3."""


class EvaluationError(NumericalError):
    """Special-function evaluation failed (carries argument and regime)."""

    def __init__(self, message: str, *, z: float | None = None, regime: str | None = None):
        super().__init__(message)
        self.z = z
        self.regime = regime


class BracketError(NumericalError):
    """Root bracketing failed; carries the last bracket tried."""

    def __init__(self, message: str, *, bracket: tuple[float, float] | None = None):
        super().__init__(message)
        self.bracket = bracket


class RefineGridError(NumericalError):
    """Solver defect exceeded tolerance; retry with a finer grid."""


class InstabilityError(NumericalError):
    """Non-finite values generated during time stepping."""
