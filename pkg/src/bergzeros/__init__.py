"""Weighted Bergman kernels on the punctured disk and their zero sets.

Closed-form kernel construction for the two-exponent weight family,
quadrature verification of the reproducing property, polynomial root
finding, argument-principle zero counting, dominance (no-zero / one-zero)
parameter windows, and continuation of the numerator zero curves across the
parameter interval, with deterministic CSV/JSON/SVG export.
"""

from .errors import (
    BergzerosError,
    ContourError,
    DegenerateInputError,
    NumericalError,
    ParameterError,
    RootSolveError,
    SingularInputError,
    StabilizationError,
)
from .params import KernelParams
from .special import beta_fn, gen_binom, ln_beta, ln_gamma
from .poly import ComplexPoly, TruncatedSeries, as_series, binomial_power
from .series import (
    apply_beta_weight,
    beta_weight_derivative_residual,
    convolution_identity_residual,
    dual_construction_gap,
    numerator_ode_residual,
    numerator_poly,
    numerator_poly_recurrence,
    numerator_series,
    numerator_value_at_one,
    p_alpha,
    raise_alpha,
)
from .kernel import (
    EvenOddNumerators,
    KernelValue,
    eval_kernel,
    eval_kernel_xi,
    eval_normalized_numerator,
    even_odd_numerators,
    kernel_at,
    kernel_series_sum,
    max_scale_factor,
    parity_zero_counts,
    parity_zeros_at_beta_zero,
)
from .quadrature import QuadratureRule, gauss_jacobi_rule, norm_moment_residual, verify_reproducing
from .roots import DiskZeroCount, RootSet, count_zeros_disk, find_roots
from .rouche import RoucheWindow, Verdict, rouche_window, zero_window_verdict
from .curves import (
    AsymptoteSide,
    BetaGrid,
    CurveAsymptotes,
    CurveDiagnostics,
    MinModulus,
    ParityCountReport,
    ZeroCurve,
    check_asymptotics,
    curve_diagnostics,
    curve_ode_rhs,
    find_min_modulus,
    parity_count_scan,
    refine_with_ode,
    root_measure_points,
    solve_s_alpha,
    trace_zero_curves,
)

__version__ = "0.1.0"
