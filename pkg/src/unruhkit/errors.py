"""Exception types shared across the package."""


class LabelError(ValueError):
    """Unknown, duplicate or colliding tensor-factor label."""


class EigensolverError(RuntimeError):
    """Dense Hermitian eigensolver failed; carries matrix diagnostics."""


class ConvergenceError(RuntimeError):
    """Truncated evaluation did not converge within the configured cap."""


class MethodDisagreementError(RuntimeError):
    """Independent evaluation routes disagree beyond tolerance.

    This signals a construction bug, not a numerical accident: the exact
    3x3 blocks and the full partial-transpose eigensolve must agree to
    essentially machine precision.
    """


class GridError(ValueError):
    """Sampling grid cannot represent the requested profile accurately."""
