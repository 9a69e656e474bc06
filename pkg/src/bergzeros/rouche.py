"""Parameter windows with a provable zero count in a disk.

For a series ``f = sum a_n z^n`` with ``(a_0, a_1) != (0, 0)`` and a radius
``r0``, the index-weighted image ``W_beta f`` is dominated on ``|z| = r0`` by
its two lowest-order terms whenever

    psi(beta) = | |a_0|/beta + |a_1| r0 / (1+beta) | - sum_{n>=2} |a_n| r0^n / (n+beta)

is positive.  ``psi`` is positive near both endpoints of (-1, 0) and negative
at the midpoint ``-|a_0| / (|a_0| + r0 |a_1|)``, so there are outermost sign
changes ``beta1`` (toward -1) and ``beta2`` (toward 0): for ``beta > beta2``
the image has no zero in the disk, for ``beta < beta1`` exactly one simple
zero.
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateInputError, NumericalError, ParameterError
from .poly import ComplexPoly, TruncatedSeries
from .roots import count_zeros_disk
from .series import apply_beta_weight

_EDGE_BUFFER = 1e-6
_SCAN_STEP = 1e-3
_BISECT_TOL = 1e-11


class Verdict(enum.Enum):
    NO_ZERO = "NoZero"
    ONE_SIMPLE_ZERO = "OneSimpleZero"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class RoucheWindow:
    """Dominance window endpoints for one (series, radius) pair.

    ``psi_roots`` lists every sign change found by the scan (ascending);
    ``beta1``/``beta2`` are the outermost ones on each side of ``midpoint``.
    """

    r0: float
    beta1: float
    beta2: float
    midpoint: float
    psi_roots: tuple = field(default=())


def _psi_factory(f: TruncatedSeries, r0: float):
    coeffs = np.abs(f.coeffs)
    a0, a1 = coeffs[0], coeffs[1] if len(coeffs) > 1 else 0.0
    n = np.arange(2, len(coeffs), dtype=float)
    tail_coeffs = coeffs[2:] * r0 ** n
    n_top = f.truncation_order
    # certified remainder of the dominance sum past the truncation order
    extra = f.tail_bound * r0 ** (n_top + 1) if f.tail_bound else 0.0

    def psi(beta):
        head = abs(a0 / beta + a1 * r0 / (1.0 + beta))
        tail = float(np.sum(tail_coeffs / (n + beta))) if len(n) else 0.0
        if extra:
            tail += extra / (n_top + 1 + beta)
        return head - tail

    return psi, a0, a1


def rouche_window(f: TruncatedSeries, r0: float) -> RoucheWindow:
    """Locate the dominance window endpoints ``(beta1, beta2)``.

    Sign changes of ``psi`` are found on a 1e-3 grid (with 1e-6 buffers at
    both parameter endpoints, where ``psi`` diverges) and polished by
    bisection to 1e-11.  With an empty tail the window collapses to the
    midpoint, where ``psi`` has its only zero.
    """
    if r0 <= 0:
        raise ParameterError("E_R0_RANGE", f"r0 must be > 0, got {r0}")
    if f.tail_bound > 0 and r0 > 1.0:
        raise ParameterError("E_R0_RANGE", "r0 must be <= 1 for a series with a certified unit-disk tail")
    psi, a0, a1 = _psi_factory(f, r0)
    if a0 == 0.0 and a1 == 0.0:
        raise DegenerateInputError("both lowest-order coefficients vanish; no dominance window exists")
    if a0 == 0.0 or a1 == 0.0:
        raise DegenerateInputError(
            "one of the two lowest-order coefficients vanishes; the window is one-sided and not produced"
        )
    midpoint = -a0 / (a0 + r0 * a1)

    tail_is_empty = f.tail_bound == 0.0 and (len(f.coeffs) <= 2 or not np.any(f.coeffs[2:]))
    if tail_is_empty:
        return RoucheWindow(r0, midpoint, midpoint, midpoint, (midpoint,))

    grid = np.arange(-1.0 + _EDGE_BUFFER, -_EDGE_BUFFER / 2, _SCAN_STEP)
    grid = np.unique(np.clip(np.append(grid, [midpoint, -_EDGE_BUFFER]), -1 + _EDGE_BUFFER, -_EDGE_BUFFER))
    values = np.array([psi(b) for b in grid])
    signs = np.sign(values)
    changes = np.nonzero(signs[:-1] * signs[1:] < 0)[0]
    roots = []
    for i in changes:
        lo, hi = grid[i], grid[i + 1]
        flo = values[i]
        while hi - lo > _BISECT_TOL:
            mid = 0.5 * (lo + hi)
            fmid = psi(mid)
            if fmid == 0.0:
                lo = hi = mid
                break
            if (flo < 0) != (fmid < 0):
                hi = mid
            else:
                lo, flo = mid, fmid
        roots.append(0.5 * (lo + hi))
    lower = [r for r in roots if r <= midpoint]
    upper = [r for r in roots if r > midpoint]
    if not lower or not upper:
        raise NumericalError(
            "psi sign-change scan found no bracketing zero on one side of the midpoint"
        )
    window = RoucheWindow(r0, min(lower), max(upper), midpoint, tuple(roots))
    if not (-1.0 < window.beta1 <= midpoint <= window.beta2 < 0.0):
        raise NumericalError("window ordering invariant violated")
    return window


def zero_window_verdict(
    f: TruncatedSeries,
    r0: float,
    beta: float,
    *,
    window: RoucheWindow | None = None,
    cross_check: bool = True,
) -> Verdict:
    """Zero-count verdict for the index-weighted image of ``f`` at ``beta``.

    ``NO_ZERO`` above the window, ``ONE_SIMPLE_ZERO`` below it, ``UNKNOWN``
    inside the gap.  For polynomial input (zero tail) a definite verdict is
    cross-checked against the argument-principle count.
    """
    if not -1.0 < beta < 0.0:
        raise ParameterError("E_BETA_RANGE", f"beta must be in (-1, 0), got {beta}")
    if window is None:
        window = rouche_window(f, r0)
    if beta > window.beta2:
        verdict = Verdict.NO_ZERO
    elif beta < window.beta1:
        verdict = Verdict.ONE_SIMPLE_ZERO
    else:
        verdict = Verdict.UNKNOWN
    if cross_check and verdict is not Verdict.UNKNOWN and f.tail_bound == 0.0:
        weighted = apply_beta_weight(f, beta).as_poly()
        count = count_zeros_disk(weighted, 0.0, r0).count
        expected = 0 if verdict is Verdict.NO_ZERO else 1
        if count != expected:
            raise NumericalError(
                f"verdict {verdict.value} contradicts the argument-principle count {count} at beta={beta}"
            )
    return verdict
