"""Dense complex polynomials and certified truncated power series.

Coefficients are stored in ascending powers.  Polynomials keep a canonical
degree (exact trailing zeros trimmed); truncated series carry a certified
bound on the absolute coefficient tail, valid on the closed unit disk.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .special import binom_abs_tail, binom_row


def _horner(coeffs: np.ndarray, z):
    z = np.asarray(z, dtype=complex)
    out = np.full(z.shape, coeffs[-1], dtype=complex)
    for c in coeffs[-2::-1]:
        out = out * z + c
    return out


@dataclass(frozen=True, eq=False)
class ComplexPoly:
    """Dense complex-coefficient polynomial, index n = power of the variable."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        n = len(c)
        while n > 1 and c[n - 1] == 0:
            n -= 1
        c = np.array(c[:n])
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        out = _horner(self.coeffs, z)
        return out if out.shape else complex(out)

    def derivative(self) -> "ComplexPoly":
        if self.degree == 0:
            return ComplexPoly(np.zeros(1))
        n = np.arange(1, len(self.coeffs))
        return ComplexPoly(self.coeffs[1:] * n)

    def reflected(self) -> "ComplexPoly":
        """The polynomial p(-z)."""
        signs = (-1.0) ** np.arange(len(self.coeffs))
        return ComplexPoly(self.coeffs * signs)

    def trimmed(self, rel_tol: float = 1e-13) -> "ComplexPoly":
        """Drop trailing coefficients below ``rel_tol`` times the largest one.

        Used where cancellation makes a structurally-zero leading term show
        up as roundoff noise (e.g. parity combinations).
        """
        scale = float(np.max(np.abs(self.coeffs)))
        if scale == 0.0:
            return ComplexPoly(np.zeros(1))
        c = self.coeffs
        n = len(c)
        while n > 1 and abs(c[n - 1]) <= rel_tol * scale:
            n -= 1
        return ComplexPoly(c[:n])

    def __add__(self, other: "ComplexPoly") -> "ComplexPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = np.zeros(n, dtype=complex)
        out[: len(a)] += a
        out[: len(b)] += b
        return ComplexPoly(out)

    def __sub__(self, other: "ComplexPoly") -> "ComplexPoly":
        return self + other.scaled(-1.0)

    def __mul__(self, other: "ComplexPoly") -> "ComplexPoly":
        return ComplexPoly(np.convolve(self.coeffs, other.coeffs))

    def scaled(self, c) -> "ComplexPoly":
        return ComplexPoly(self.coeffs * c)

    def is_real(self, tol: float = 0.0) -> bool:
        scale = max(1.0, float(np.max(np.abs(self.coeffs))))
        return bool(np.all(np.abs(self.coeffs.imag) <= tol * scale))


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Power series truncated at order N with a certified coefficient tail.

    ``tail_bound`` majorizes ``sum_{n>N} |a_n|``, hence also the sup of the
    discarded tail on the closed unit disk.  A zero tail bound means the
    series is exactly the stored polynomial.
    """

    coeffs: np.ndarray
    tail_bound: float

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        c = np.array(c)
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)
        if not self.tail_bound >= 0.0:
            raise ParameterError("E_TAIL_BOUND", f"tail_bound must be >= 0, got {self.tail_bound}")

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        out = _horner(self.coeffs, z)
        return out if out.shape else complex(out)

    def eval_derivative(self, z):
        """Value of the exact formal derivative of the truncated series."""
        n = np.arange(1, len(self.coeffs))
        dcoeffs = self.coeffs[1:] * n
        if len(dcoeffs) == 0:
            dcoeffs = np.zeros(1, dtype=complex)
        out = _horner(dcoeffs, z)
        return out if out.shape else complex(out)

    def scaled(self, c) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs * c, abs(c) * self.tail_bound)

    def as_poly(self) -> ComplexPoly:
        if self.tail_bound != 0.0:
            raise ParameterError(
                "E_NONZERO_TAIL",
                "series has a nonzero tail bound and cannot be read as an exact polynomial",
            )
        return ComplexPoly(self.coeffs)

    def is_real(self, tol: float = 0.0) -> bool:
        scale = max(1.0, float(np.max(np.abs(self.coeffs))))
        return bool(np.all(np.abs(self.coeffs.imag) <= tol * scale))


def as_series(poly: ComplexPoly) -> TruncatedSeries:
    return TruncatedSeries(poly.coeffs, 0.0)


def binomial_power(exponent: float, *, tol: float = 1e-12, n_terms: int | None = None) -> TruncatedSeries:
    """The binomial series of ``(1 - z)**exponent`` with alternating signs.

    Integer ``exponent >= 0`` yields the exact polynomial (zero tail).  For
    real exponents the truncation order is either the requested ``n_terms``
    or the first ``N >= 2*exponent + 10`` whose certified tail drops below
    ``tol``.
    """
    if float(exponent).is_integer() and exponent >= 0:
        n = int(exponent)
        coeffs = binom_row(exponent, n) * (-1.0) ** np.arange(n + 1)
        return TruncatedSeries(coeffs, 0.0)
    if n_terms is None:
        n_terms = _first_order_below(exponent, tol)
    coeffs = binom_row(exponent, n_terms) * (-1.0) ** np.arange(n_terms + 1)
    return TruncatedSeries(coeffs, binom_abs_tail(exponent, n_terms + 1))


def _first_order_below(exponent: float, tol: float, weight_shift: float = 0.0) -> int:
    """Smallest N >= 2*exponent+10 with certified tail below ``tol``.

    ``weight_shift`` divides the tail by ``N + 1 + weight_shift`` (used for
    series whose coefficients carry an extra ``1/(n + shift)`` factor).
    """
    if not tol > 0:
        raise ParameterError("E_DOMAIN", f"tolerance must be > 0, got {tol}")

    def tail(n):
        t = binom_abs_tail(exponent, n + 1)
        if weight_shift != 0.0:
            t /= n + 1 + weight_shift
        return t

    lo = max(int(np.ceil(2 * exponent + 10)), 4)
    if tail(lo) < tol:
        return lo
    hi = lo
    while tail(hi) >= tol:
        hi = 2 * hi + 1
        if hi > 20_000_000:
            raise ParameterError("E_TRUNCATION", f"cannot certify tail below {tol} for exponent {exponent}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail(mid) < tol:
            hi = mid
        else:
            lo = mid
    return hi
