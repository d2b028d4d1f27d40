"""Exception hierarchy shared by all qboundary modules."""


class QBoundaryError(Exception):
    """Base class for all library errors."""


class NotHermitianError(QBoundaryError):
    """Input matrix is not Hermitian within tolerance."""


class NotPSDError(QBoundaryError):
    """Input operator has an eigenvalue below the PSD tolerance."""


class DimMismatchError(QBoundaryError):
    """Operands have incompatible shapes or subsystem dimensions."""


class DimensionCapError(QBoundaryError):
    """Dense eigensolve requested above the supported dimension cap."""


class ConvergenceError(QBoundaryError):
    """Eigensolver failed to reach its off-diagonal target."""


class OutOfRangeError(QBoundaryError):
    """Scalar argument outside its documented range."""


class InvalidFormError(QBoundaryError):
    """Classical-form data violate its invariants."""


class DegenerateLineError(QBoundaryError):
    """Boundary search requested on a line with identical endpoints."""


class ImmediateBoundaryError(QBoundaryError):
    """The line leaves the state set at t=0; no extrapolation exists."""


class UnboundedLineError(QBoundaryError):
    """No boundary found above the search floor."""


class NotOrthonormalError(QBoundaryError):
    """Supplied vectors are not an orthonormal basis within tolerance."""


class NotProductVectorError(QBoundaryError):
    """Vector is not a tensor product of subsystem vectors."""


class NotZeroEigenvectorError(QBoundaryError):
    """Vector is not annihilated by the state within tolerance."""


class BadOrderingError(QBoundaryError):
    """Classical form not in the required normal form (mu00 minimal, U0=I)."""


class BadDirectionError(QBoundaryError):
    """Mixing direction violates the witness hypotheses."""


class ParseError(QBoundaryError):
    """State file is syntactically malformed."""


class InvariantViolationError(QBoundaryError):
    """State file parsed but its matrix violates the declared invariants."""


class UnknownExperimentError(QBoundaryError):
    """Experiment id not present in the catalogue."""


class BadParamsError(QBoundaryError):
    """Experiment parameters are malformed or out of range."""
