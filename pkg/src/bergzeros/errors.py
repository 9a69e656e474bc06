"""Exception types shared across the package.

Validation problems (bad parameters, unusable input) raise
:class:`ParameterError` and map to CLI exit code 2.  Failures of the
numerical machinery itself (non-convergence, contours through roots)
derive from :class:`NumericalError` and map to exit code 3.
"""


class BergzerosError(Exception):
    """Base class for all package errors."""


class ParameterError(BergzerosError):
    """Invalid input rejected before any computation starts.

    ``code`` is a short stable identifier (e.g. ``E_ALPHA_RANGE``) so
    callers and the CLI can tell rejection reasons apart.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class SingularInputError(BergzerosError):
    """Evaluation requested at a genuine singularity of the kernel."""


class DegenerateInputError(BergzerosError):
    """Input is degenerate for the requested operation (e.g. both leading
    series coefficients vanish, so no zero window exists)."""


class NumericalError(BergzerosError):
    """Base class for runtime numerical failures."""


class RootSolveError(NumericalError):
    """Simultaneous root iteration failed to converge.

    Carries the best iterate and its residuals for post-mortem use.
    """

    def __init__(self, message, best_roots=None, residuals=None):
        super().__init__(message)
        self.best_roots = best_roots
        self.residuals = residuals


class ContourError(NumericalError):
    """A root lies too close to the integration contour."""


class StabilizationError(NumericalError):
    """An adaptive computation failed to stabilize within its budget."""
