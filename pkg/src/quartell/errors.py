"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class BracketError(ValueError):
    """Root bracket endpoints do not straddle a sign change."""


class ConvergenceError(RuntimeError):
    """Iteration failed to converge within its iteration budget."""


class AccuracyError(RuntimeError):
    """Requested tolerance not reached at maximum refinement depth."""


class PoleProximityError(ValueError):
    """Evaluation point lies inside the exclusion radius of a pole."""


class ConditioningError(RuntimeError):
    """Intermediate quantities too ill-conditioned to certify the result."""
