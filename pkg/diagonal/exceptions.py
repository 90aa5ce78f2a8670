class DiagonalError(Exception):
    """Base exception for all diagonal-equation errors."""
    pass

class ConfigError(DiagonalError):
    """Raised when a configuration or input file (JSON/YAML/text) is invalid."""
    pass

class ValidationError(DiagonalError):
    """Raised when parameters violate a precondition."""
    pass

class SingularCurveError(ValidationError):
    """Raised when a curve has zero discriminant."""
    pass

class OffCurveError(ValidationError):
    """Raised when a point does not lie on the curve it is used with."""
    pass

class DegenerateLocusError(DiagonalError):
    """Raised when a birational map or substitution is undefined at the input."""
    pass

class VerificationError(DiagonalError):
    """Raised when an exact identity fails. Carries the nonzero residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual

class ErratumError(VerificationError):
    """Raised when a printed closed formula does not satisfy its equation."""
    pass

class ConeError(DiagonalError):
    """Raised when a cone is not pointed. Carries a lineality direction."""

    def __init__(self, message, direction=None):
        super().__init__(message)
        self.direction = direction

class SplitError(DiagonalError):
    """Raised when a quadratic form cannot be split into L1*L2 - L3*L4."""
    pass
