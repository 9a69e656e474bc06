"""Log-domain gamma/beta evaluation and generalized binomial coefficients.

All beta-function values are produced through ``lgamma`` sums because the
moments ``B(alpha+1, n+beta+1)`` span hundreds of orders of magnitude as
``n`` grows.  Generalized binomials use the falling-factorial product, which
is exact for integer upper argument.
"""

import math

import numpy as np

from .errors import ParameterError


def ln_gamma(x: float) -> float:
    """log(Gamma(x)) for x > 0."""
    if not x > 0:
        raise ParameterError("E_DOMAIN", f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def ln_beta(s: float, t: float) -> float:
    """log(B(s, t)) for s, t > 0."""
    if not (s > 0 and t > 0):
        raise ParameterError("E_DOMAIN", f"ln_beta requires s, t > 0, got ({s}, {t})")
    return math.lgamma(s) + math.lgamma(t) - math.lgamma(s + t)


def beta_fn(s: float, t: float) -> float:
    """Euler beta function B(s, t) = Gamma(s)Gamma(t)/Gamma(s+t), s, t > 0."""
    return math.exp(ln_beta(s, t))


def gen_binom(a: float, n: int) -> float:
    """Generalized binomial coefficient C(a, n) = prod_{j<n} (a-j)/(j+1).

    Exact for integer ``a`` with ``0 <= n`` (integer arithmetic, promoted to
    float at the end); the empty product gives 1.
    """
    if n < 0:
        raise ParameterError("E_DOMAIN", f"gen_binom requires n >= 0, got {n}")
    if float(a).is_integer() and a >= 0:
        return float(math.comb(int(a), n)) if n <= int(a) else 0.0
    v = 1.0
    for j in range(n):
        v *= (a - j) / (j + 1)
    return v


def binom_row(a: float, n_max: int) -> np.ndarray:
    """C(a, n) for n = 0..n_max as a float array (cumulative product)."""
    if n_max < 0:
        raise ParameterError("E_DOMAIN", f"binom_row requires n_max >= 0, got {n_max}")
    if float(a).is_integer() and a >= 0:
        ai = int(a)
        out = np.zeros(n_max + 1)
        top = min(ai, n_max)
        out[: top + 1] = [math.comb(ai, n) for n in range(top + 1)]
        return out
    j = np.arange(n_max, dtype=float)
    factors = (a - j) / (j + 1.0)
    out = np.empty(n_max + 1)
    out[0] = 1.0
    np.cumprod(factors, out=out[1:])
    return out


def binom_abs_tail(a: float, start: int) -> float:
    """Certified upper bound for sum_{n >= start} |C(a, n)|.

    For non-integer ``a`` and ``n > a`` the reflection formula gives
    ``|C(a, n)| = C_a * Gamma(n-a)/Gamma(n+1)`` with
    ``C_a = Gamma(a+1)*|sin(pi*a)|/pi``, and the telescoping identity
    ``sum_{n>=M} Gamma(n-a)/Gamma(n+1) = Gamma(M-a)/(a*Gamma(M))`` makes the
    tail exact up to roundoff.  Requires ``start > a`` and ``a > 0``.
    For integer ``a`` the tail is exactly zero once ``start > a``.
    """
    if float(a).is_integer():
        return 0.0
    if not a > 0:
        raise ParameterError("E_DOMAIN", f"binom_abs_tail requires a > 0, got {a}")
    if start <= a:
        raise ParameterError("E_DOMAIN", f"binom_abs_tail requires start > a, got start={start}, a={a}")
    sin_term = abs(math.sin(math.pi * a))
    if sin_term == 0.0:
        return 0.0
    log_tail = (
        math.lgamma(a + 1.0)
        + math.lgamma(start - a)
        - math.lgamma(start)
        - math.log(a)
        - math.log(math.pi)
    )
    return sin_term * math.exp(log_tail)
