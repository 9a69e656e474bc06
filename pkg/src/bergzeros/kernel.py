"""Kernel evaluation and the even/odd subspace kernels.

The reproducing kernel evaluates as ``K(w, z) = k(w * conj(z))`` where

    k(xi) = q(xi) / (xi**m * (1 - xi)**(alpha + 2))

with ``q`` the numerator from :mod:`bergzeros.series`.  Kernels with
``m >= 1`` route through the ``m = 0`` kernel and the explicit ``xi**(-m)``
prefactor, so a single numerator code path serves the whole family.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, SingularInputError
from .params import KernelParams
from .poly import ComplexPoly, _first_order_below
from .series import numerator_poly, numerator_series
from .special import beta_fn, binom_row, ln_beta

#: refuse evaluation this close to the boundary singularity at xi = 1
SINGULARITY_CUTOFF = 1e-12


@dataclass(frozen=True)
class KernelValue:
    """One kernel evaluation: the value, the product argument, the parameters."""

    value: complex
    argument: complex
    params: KernelParams


def _numerator_prefactor(params: KernelParams) -> float:
    """Scale carrying the norm ratio between beta and its reduced exponent."""
    a = params.alpha
    return params.beta0 * math.exp(ln_beta(a + 1, params.beta + 1) - ln_beta(a + 1, params.beta0 + 1))


def eval_kernel_xi(params: KernelParams, xi, *, series_tol: float = 1e-12):
    """Kernel profile k(xi); vectorized over ``xi``.

    Raises :class:`SingularInputError` at ``xi = 0`` when ``m >= 1`` (the
    kernel has a pole there) and within ``SINGULARITY_CUTOFF`` of ``xi = 1``
    (the boundary blow-up).
    """
    xi_arr = np.asarray(xi, dtype=complex)
    scalar = xi_arr.shape == ()
    xi_arr = np.atleast_1d(xi_arr)
    if np.any(np.abs(1.0 - xi_arr) < SINGULARITY_CUTOFF):
        raise SingularInputError("kernel evaluation within 1e-12 of the singularity at xi = 1")
    if params.m >= 1 and np.any(xi_arr == 0):
        raise SingularInputError(f"kernel with m = {params.m} has a pole at xi = 0")
    if params.beta_is_integer:
        num = (params.alpha + 1.0) * beta_fn(params.alpha + 1.0, params.beta + 1.0)
        val = num / (1.0 - xi_arr) ** (params.alpha + 2.0)
    else:
        g = numerator_series(params.alpha, params.beta0, tol=series_tol)
        val = _numerator_prefactor(params) * g(xi_arr) / (1.0 - xi_arr) ** (params.alpha + 2.0)
    if params.m >= 1:
        val = val / xi_arr ** params.m
    return complex(val[0]) if scalar else val


def eval_kernel(params: KernelParams, w: complex, z: complex, *, series_tol: float = 1e-12) -> complex:
    """Kernel value K(w, z) = k(w * conj(z)) for points of the unit disk."""
    if abs(w) >= 1.0 or abs(z) >= 1.0:
        raise ParameterError("E_DOMAIN", "w and z must lie in the open unit disk")
    return eval_kernel_xi(params, complex(w) * np.conj(complex(z)), series_tol=series_tol)


def kernel_at(params: KernelParams, w: complex, z: complex) -> KernelValue:
    xi = complex(w) * complex(np.conj(z))
    return KernelValue(eval_kernel(params, w, z), xi, params)


def kernel_series_sum(params: KernelParams, w: complex, z: complex, n_terms: int) -> complex:
    """Partial sum of the orthonormal-basis expansion sum_n e_n(w) conj(e_n(z)).

    Independent cross-check for :func:`eval_kernel`; the basis starts at
    ``n = -m`` and the n-th coefficient is B(a+1, beta+1)/B(a+1, n+beta+1).
    """
    a, beta, m = params.alpha, params.beta, params.m
    xi = complex(w) * complex(np.conj(z))
    lb0 = ln_beta(a + 1, beta + 1)
    total = 0.0 + 0.0j
    for n in range(-m, n_terms - m + 1):
        total += math.exp(lb0 - ln_beta(a + 1, n + beta + 1)) * xi**n
    return total


def eval_normalized_numerator(params: KernelParams, xi, *, tol: float = 1e-9):
    """Stable value of ``beta*(1+beta)*g(xi)`` for ``-1 < beta < 0``.

    Uses the cancellation-free expansion
    ``(1+beta) - beta*(1+alpha)*xi + beta*(1+beta)*sum_{n>=2} ...`` so the
    value stays accurate at both parameter endpoints, where the family tends
    to the constant 1 (beta -> 0-) and to ``(alpha+1)*xi`` (beta -> -1+).
    """
    beta = params.beta0 if params.m > 0 else params.beta
    if not -1.0 < beta < 0.0:
        raise ParameterError("E_BETA_INTEGER", f"normalized family needs non-integer beta, got {params.beta}")
    alpha = params.alpha
    a = alpha + 1.0
    if float(alpha).is_integer() and alpha >= 0:
        n_terms = int(alpha) + 1
    else:
        n_terms = max(_first_order_below(a, tol, weight_shift=beta), 2)
    xi_arr = np.asarray(xi, dtype=complex)
    scalar = xi_arr.shape == ()
    xi_arr = np.atleast_1d(xi_arr)
    n = np.arange(2, n_terms + 1, dtype=float)
    coeffs = binom_row(a, n_terms)[2:] * (-1.0) ** np.arange(2, n_terms + 1) / (n + beta)
    tail = np.zeros_like(xi_arr)
    if len(coeffs):
        tail = xi_arr**2 * _poly_eval(coeffs, xi_arr)
    val = (1.0 + beta) - beta * (1.0 + alpha) * xi_arr + beta * (1.0 + beta) * tail
    return complex(val[0]) if scalar else val


def _poly_eval(coeffs, z):
    out = np.full(z.shape, coeffs[-1], dtype=complex)
    for c in coeffs[-2::-1]:
        out = out * z + c
    return out


@dataclass(frozen=True)
class EvenOddNumerators:
    """Numerator polynomials of the even- and odd-subspace kernels.

    ``even`` is symmetric and ``odd`` antisymmetric under ``xi -> -xi``; the
    subspace kernels are ``even(xi) / (2 (1-xi^2)^(alpha+2))`` and likewise
    for ``odd``.
    """

    even: ComplexPoly
    odd: ComplexPoly
    params: KernelParams


def even_odd_numerators(params: KernelParams) -> EvenOddNumerators:
    """Expand the parity numerators ``(1+xi)^(a+2) q(xi) +/- (1-xi)^(a+2) q(-xi)``.

    Integer alpha only; beta restricted to ``(-1, 0]``.  The structurally-zero
    leading coefficient of the even part (parity cancellation) is trimmed.
    """
    alpha = params.alpha_int
    if not -1.0 < params.beta <= 0.0:
        raise ParameterError("E_BETA_RANGE", f"even/odd numerators need beta in (-1, 0], got {params.beta}")
    q = numerator_poly(params)
    plus = ComplexPoly(binom_row(alpha + 2.0, alpha + 2))  # (1 + xi)^(alpha+2)
    minus = plus.reflected()  # (1 - xi)^(alpha+2)
    lhs = plus * q
    rhs = minus * q.reflected()
    even = (lhs + rhs).trimmed(1e-13)
    odd = (lhs - rhs).trimmed(1e-13)
    return EvenOddNumerators(even, odd, params)


def parity_zeros_at_beta_zero(alpha: int):
    """Closed-form zeros of the parity numerators at beta = 0.

    Even zeros: ``-i*tan((2k+1)*pi / (2*(alpha+2)))``; odd zeros:
    ``-i*tan(k*pi / (alpha+2))``, both for ``k = 0..alpha+1``.  Indices whose
    cosine vanishes (tangent pole) are omitted; the odd list keeps its zero
    at the origin.
    """
    if not (float(alpha).is_integer() and alpha >= 0):
        raise ParameterError("E_ALPHA_INTEGER", f"alpha must be a nonnegative integer, got {alpha}")
    alpha = int(alpha)
    even, odd = [], []
    for k in range(alpha + 2):
        ang = (2 * k + 1) * math.pi / (2 * (alpha + 2))
        if abs(math.cos(ang)) > 1e-12:
            even.append(complex(0.0, -math.tan(ang)))
        ang = k * math.pi / (alpha + 2)
        if abs(math.cos(ang)) > 1e-12:
            odd.append(complex(0.0, -math.tan(ang)))
    return even, odd


def parity_zero_counts(alpha: int):
    """Closed-form zero counts of the parity numerators at beta = 0.

    Returns ``(even_open, odd_open, even_closed, odd_closed)``: counts in the
    open and closed unit disk, from the ``alpha = 4*tau + r`` case table.
    """
    if not (float(alpha).is_integer() and alpha >= 0):
        raise ParameterError("E_ALPHA_INTEGER", f"alpha must be a nonnegative integer, got {alpha}")
    tau, r = divmod(int(alpha), 4)
    even_open = 2 * tau if r == 0 else 2 * tau + 2
    odd_open = 2 * tau + 1 if r <= 2 else 2 * tau + 3
    even_closed = 2 * tau + 2
    odd_closed = 2 * tau + 1 if r <= 1 else 2 * tau + 3
    return even_open, odd_open, even_closed, odd_closed


def max_scale_factor(alpha: int) -> float:
    """Upper limit ``tan(pi/4 + pi/(alpha+2))`` for the argument-scaling factor
    under which the closed-disk parity counts stay stable."""
    return math.tan(math.pi / 4.0 + math.pi / (alpha + 2.0))
