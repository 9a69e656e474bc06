"""Kernel numerator polynomials/series and their algebraic identities.

The reproducing kernel of the weighted space factors as a numerator divided
by ``xi**m * (1 - xi)**(alpha + 2)``.  For non-integer ``beta`` the numerator
is a multiple of the index-weighted binomial series

    g(xi) = sum_n (-1)**n * C(alpha+1, n) / (n + beta) * xi**n,

the image of ``(1 - xi)**(alpha+1)`` under the coefficient map
``a_n -> a_n / (n + beta)``.  Everything here is built two independent ways
where a second route exists (closed form vs. recurrence) so transcription
errors in either route are caught by the test suite.
"""

import math

import mpmath as mp
import numpy as np

from .errors import ParameterError
from .params import KernelParams
from .poly import ComplexPoly, TruncatedSeries, _first_order_below, binomial_power
from .special import beta_fn, binom_abs_tail, binom_row, gen_binom, ln_beta


def _require_beta_open_interval(beta: float):
    if not -1.0 < beta < 0.0:
        raise ParameterError("E_BETA_INTEGER" if beta >= 0 else "E_BETA_RANGE",
                             f"requires -1 < beta < 0, got {beta}")


def numerator_series(alpha: float, beta: float, *, tol: float = 1e-10) -> TruncatedSeries:
    """Index-weighted binomial series g with coefficients (-1)^n C(alpha+1,n)/(n+beta).

    Requires ``-1 < beta < 0`` (for integer beta the kernel numerator is a
    constant and g is undefined).  Integer ``alpha`` gives the exact
    polynomial of degree ``alpha + 1``; otherwise the truncation order is the
    first ``N >= 2*alpha + 10`` whose certified tail drops below ``tol``.
    """
    if alpha <= -1.0:
        raise ParameterError("E_ALPHA_RANGE", f"alpha must be > -1, got {alpha}")
    _require_beta_open_interval(beta)
    a = alpha + 1.0
    if float(alpha).is_integer() and alpha >= 0:
        n_terms = int(alpha) + 1
        tail = 0.0
    else:
        n_terms = _first_order_below(a, tol, weight_shift=beta)
        tail = binom_abs_tail(a, n_terms + 1) / (n_terms + 1 + beta)
    n = np.arange(n_terms + 1, dtype=float)
    coeffs = binom_row(a, n_terms) * (-1.0) ** np.arange(n_terms + 1) / (n + beta)
    return TruncatedSeries(coeffs, tail)


def numerator_poly(params: KernelParams) -> ComplexPoly:
    """Closed-form kernel numerator polynomial for integer alpha.

    Constant ``(alpha+1) * B(alpha+1, beta+1)`` when beta is a nonnegative
    integer; otherwise ``beta0 * B(alpha+1, beta+1)/B(alpha+1, beta0+1)``
    times the index-weighted binomial series at the reduced exponent.
    """
    alpha = params.alpha_int
    if params.beta_is_integer:
        return ComplexPoly([(alpha + 1) * beta_fn(alpha + 1, params.beta + 1)])
    g = numerator_series(alpha, params.beta0).as_poly()
    prefactor = params.beta0 * math.exp(
        ln_beta(alpha + 1, params.beta + 1) - ln_beta(alpha + 1, params.beta0 + 1)
    )
    return g.scaled(prefactor)


def numerator_poly_recurrence(params: KernelParams) -> ComplexPoly:
    """Kernel numerator via the degree-raising recurrence.

    Seeded with ``((m - beta)*xi + beta - m + 1) / (beta + 1)`` and stepped by

        q_{a+1} = [xi(1-xi) q_a' + (a + beta - m + 2 + (m-beta) xi) q_a] / (a+beta+2).

    Independent of :func:`numerator_poly`; the two must agree coefficientwise.
    """
    alpha = params.alpha_int
    beta, m = params.beta, params.m
    q = np.array([(beta - m + 1.0) / (beta + 1.0), (m - beta) / (beta + 1.0)], dtype=complex)
    for a in range(alpha):
        d = np.arange(len(q))
        xq = d * q  # coefficients of xi * q'
        out = np.zeros(len(q) + 1, dtype=complex)
        out[: len(q)] += xq
        out[1:] -= xq
        out[: len(q)] += (a + beta - m + 2.0) * q
        out[1:] += (m - beta) * q
        q = out / (a + beta + 2.0)
    return ComplexPoly(q)


def apply_beta_weight(f: TruncatedSeries, beta: float) -> TruncatedSeries:
    """Coefficient map ``a_n -> a_n / (n + beta)`` for ``-1 < beta < 0``.

    Linear, bijective on power series, degree-preserving on polynomials.  The
    tail bound divides by ``N + 1 + beta`` since ``n + beta`` only grows past
    the truncation order.
    """
    _require_beta_open_interval(beta)
    n = np.arange(len(f.coeffs), dtype=float)
    tail = f.tail_bound / (f.truncation_order + 1 + beta)
    return TruncatedSeries(f.coeffs / (n + beta), tail)


def raise_alpha(g: TruncatedSeries, alpha: float, beta: float) -> TruncatedSeries:
    """Step the numerator series from exponent ``alpha`` to ``alpha + 1``:

        g_{alpha+1} = [(alpha + 2) g_alpha + (1 - xi)**(alpha+2)] / (alpha + beta + 2).
    """
    _require_beta_open_interval(beta)
    n_terms = g.truncation_order
    binpart = binomial_power(alpha + 2.0, n_terms=n_terms)
    n_out = max(len(g.coeffs), len(binpart.coeffs))
    out = np.zeros(n_out, dtype=complex)
    out[: len(g.coeffs)] += (alpha + 2.0) * g.coeffs
    out[: len(binpart.coeffs)] += binpart.coeffs
    tail = ((alpha + 2.0) * g.tail_bound + binpart.tail_bound) / (alpha + beta + 2.0)
    return TruncatedSeries(out / (alpha + beta + 2.0), tail)


def beta_weight_derivative_residual(f: TruncatedSeries, beta: float, samples) -> float:
    """Max residual of ``z * (Wf)'(z) - f(z) + beta * Wf(z)`` over the samples,

    where ``W`` is the index-weight map of :func:`apply_beta_weight` and the
    derivative is the exact formal derivative of the truncated series.  The
    identity holds term-by-term, so the residual is pure roundoff.
    """
    wf = apply_beta_weight(f, beta)
    z = np.asarray(samples, dtype=complex)
    res = z * wf.eval_derivative(z) - f(z) + beta * wf(z)
    return float(np.max(np.abs(res)))


def numerator_ode_residual(alpha: float, beta: float, samples, *, tol: float = 1e-10):
    """Residual of the first-order ODE satisfied by the numerator series,

        xi g'(xi) + beta g(xi) - (1 - xi)**(alpha+1) = 0,

    evaluated on ``samples`` inside the open unit disk.  Returns
    ``(residual, certified_bound)``: the identity holds term by term, so the
    truncated series leaves exactly the binomial tail, bounded (with a 10x
    margin) by ``binom_abs_tail * max|xi|**(N+1)``; the bound is zero for
    integer alpha.
    """
    g = numerator_series(alpha, beta, tol=tol)
    z = np.asarray(samples, dtype=complex)
    if np.any(np.abs(z) >= 1.0):
        raise ParameterError("E_DOMAIN", "samples must lie in the open unit disk")
    target = (1.0 - z) ** (alpha + 1.0)
    res = z * g.eval_derivative(z) + beta * g(z) - target
    tail = binom_abs_tail(alpha + 1.0, g.truncation_order + 1)
    if tail:
        tail *= float(np.max(np.abs(z))) ** (g.truncation_order + 1)
    return float(np.max(np.abs(res))), 10.0 * tail


def convolution_identity_residual(alpha: float, beta: float, n_max: int) -> float:
    """Max relative residual, for n <= n_max, of the coefficient identity

        sum_{k<=n} C(alpha+2, k) (-1)^k / B(alpha+1, n-k+beta+1)
            = beta / B(alpha+1, beta+1) * C(alpha+1, n) * (-1)^n / (n + beta).

    The left side is an order-(alpha+2) finite difference of a smooth
    sequence, so float64 loses up to ~14 digits to cancellation by n = 20;
    the sum is therefore evaluated in 40-digit arithmetic and only the final
    residual is returned as a float.
    """
    _require_beta_open_interval(beta)
    if n_max < 0:
        raise ParameterError("E_DOMAIN", f"n_max must be >= 0, got {n_max}")
    worst = 0.0
    with mp.workdps(40):
        a = mp.mpf(alpha)
        b = mp.mpf(beta)
        rhs_pref = b / mp.beta(a + 1, b + 1)
        for n in range(n_max + 1):
            lhs = mp.mpf(0)
            for k in range(n + 1):
                lhs += mp.binomial(a + 2, k) * (-1) ** k / mp.beta(a + 1, n - k + b + 1)
            rhs = rhs_pref * mp.binomial(a + 1, n) * (-1) ** n / (n + b)
            if rhs != 0:
                worst = max(worst, float(abs(lhs - rhs) / abs(rhs)))
            else:
                # structurally zero on both sides (integer alpha, n > alpha+1)
                worst = max(worst, float(abs(lhs)))
    return worst


def p_alpha(alpha: float, *, tol: float = 1e-12) -> TruncatedSeries:
    """The generating function ``(1 - z)**(alpha+1)`` as a truncated series."""
    if alpha <= -1.0:
        raise ParameterError("E_ALPHA_RANGE", f"alpha must be > -1, got {alpha}")
    return binomial_power(alpha + 1.0, tol=tol)


def numerator_value_at_one(alpha: float, beta: float) -> float:
    """g(1) through the gamma-ratio route, for cross-checks: g(1) = B(beta, alpha+2).

    ``beta`` is negative so the first gamma factor needs the sign-tracked
    reflection; the value is finite and nonzero for all valid parameters.
    """
    _require_beta_open_interval(beta)
    # B(beta, alpha+2) = Gamma(beta) * Gamma(alpha+2) / Gamma(alpha+beta+2)
    log_abs = (
        math.lgamma(beta)  # lgamma of a negative non-integer gives log|Gamma|
        + math.lgamma(alpha + 2.0)
        - math.lgamma(alpha + beta + 2.0)
    )
    # Gamma(beta) < 0 on (-1, 0); the other factors are positive.
    return -math.exp(log_abs)


def dual_construction_gap(params: KernelParams) -> float:
    """Max relative coefficient gap between the two numerator constructions.

    Relative error uses an absolute floor of 1e-300 so exactly-zero
    coefficients compare cleanly.
    """
    qc = numerator_poly(params)
    qr = numerator_poly_recurrence(params)
    n = max(len(qc.coeffs), len(qr.coeffs))
    a = np.zeros(n, dtype=complex)
    b = np.zeros(n, dtype=complex)
    a[: len(qc.coeffs)] = qc.coeffs
    b[: len(qr.coeffs)] = qr.coeffs
    denom = np.maximum(np.maximum(np.abs(a), np.abs(b)), 1e-300)
    return float(np.max(np.abs(a - b) / denom))


def gen_binom_check(a: float, n: int) -> float:
    """Convenience re-export used by verification batteries."""
    return gen_binom(a, n)
