"""Polynomial root finding and argument-principle zero counting.

The root finder is a simultaneous Aberth-Ehrlich iteration with Newton
polishing.  It is fully deterministic: initial guesses are the d-th roots of
unity rotated by ``pi/(2d)`` (to break conjugate symmetry), placed on
Newton-polygon annuli (a single Cauchy-bound circle stalls the approach
phase once coefficient magnitudes span many orders, as they do here for
large degree).

Disk counts integrate ``p'/p`` over a circle by the trapezoid rule with
adaptive sample doubling; the winding number must stabilize and land close
to an integer.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContourError, ParameterError, RootSolveError, StabilizationError
from .poly import ComplexPoly

_ABERTH_SWEEPS = 200
_NEWTON_STEPS = 20
_CONTOUR_START = 256
_CONTOUR_MAX = 2**16


@dataclass(frozen=True)
class RootSet:
    """All roots of a polynomial, each listed with multiplicity one.

    ``clustered`` flags root groups closer than the clustering threshold;
    for those the residual acceptance bound was relaxed by the cluster
    diameter.
    """

    roots: np.ndarray
    residuals: np.ndarray
    degree: int
    clustered: bool = False
    cluster_diameter: float = 0.0

    def __post_init__(self):
        for name in ("roots", "residuals"):
            arr = np.asarray(getattr(self, name))
            arr = np.array(arr)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)


@dataclass(frozen=True)
class DiskZeroCount:
    """Zero count of a polynomial in an open disk via the argument principle."""

    center: complex
    radius: float
    count: int
    winding_raw: float
    n_samples: int = 0


def _initial_points(coeffs: np.ndarray) -> np.ndarray:
    """Deterministic starting points on Newton-polygon annuli.

    Radii come from the upper convex hull of ``(i, log|c_i|)``: each hull
    edge contributes its index gap worth of points at the edge's coefficient
    ratio radius (the classical root-magnitude estimate).  Angles are the
    d-th roots of unity rotated by ``pi/(2d)`` to break conjugate symmetry.
    """
    d = len(coeffs) - 1
    idx = np.nonzero(coeffs)[0]
    xs = idx.astype(float)
    ys = np.log(np.abs(coeffs[idx]))
    hull = [0]
    for j in range(1, len(idx)):
        while len(hull) >= 2:
            i1, i2 = hull[-2], hull[-1]
            if (ys[j] - ys[i1]) * (xs[i2] - xs[i1]) >= (ys[i2] - ys[i1]) * (xs[j] - xs[i1]):
                hull.pop()
            else:
                break
        hull.append(j)
    radii = np.empty(d)
    pos = 0
    for a, b in zip(hull, hull[1:]):
        gap = int(idx[b] - idx[a])
        rho = math.exp((ys[a] - ys[b]) / gap)
        radii[pos : pos + gap] = min(max(rho, 1e-150), 1e150)
        pos += gap
    angles = 2.0 * math.pi * (np.arange(d) + 0.5) / d + math.pi / (2.0 * d)
    return radii * np.exp(1j * angles)


def find_roots(p: ComplexPoly) -> RootSet:
    """All complex roots by simultaneous Aberth-Ehrlich iteration.

    Deterministic given the coefficients; raises :class:`RootSolveError`
    with the best iterate if the sweep cap is exhausted.  For polynomials
    with real coefficients, roots within ``1e-10 * (1 + |Re|)`` of the real
    axis are snapped onto it (conjugate symmetry makes them exactly real).
    """
    if p.degree < 1:
        raise ParameterError("E_DEGREE", "find_roots requires degree >= 1")
    real_input = p.is_real()

    # exact zeros at the origin come off before iterating
    n_origin = 0
    while p.coeffs[n_origin] == 0:
        n_origin += 1
    coeffs = p.coeffs[n_origin:] / p.coeffs[-1]
    d = len(coeffs) - 1
    if d == 0:
        z_all = np.zeros(n_origin, dtype=complex)
        return RootSet(z_all, np.zeros(n_origin), n_origin)

    z = _initial_points(coeffs)

    dcoeffs = coeffs[1:] * np.arange(1, d + 1)

    def peval(c, x):
        out = np.full(np.shape(x), c[-1], dtype=complex)
        for ck in c[-2::-1]:
            out = out * x + ck
        return out

    # sequential (Gauss-Seidel) sweeps: each root update sees the already
    # moved neighbors, which avoids the limit cycles the fully parallel
    # update falls into at high degree.  Transient overflow at far-out
    # iterates is tolerated; the residual acceptance below has the last word.
    norm_scale = float(np.max(np.abs(coeffs)))
    converged = False
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        for _ in range(_ABERTH_SWEEPS):
            max_rel_step = 0.0
            for i in range(d):
                zi = z[i]
                pv = complex(peval(coeffs, zi))
                dv = complex(peval(dcoeffs, zi))
                if not (math.isfinite(pv.real) and math.isfinite(pv.imag)):
                    z[i] = zi * 0.5  # pull out of the overflow region
                    continue
                if dv == 0:
                    continue
                newton = pv / dv
                diffs = zi - z
                diffs[i] = np.inf
                repulsion = complex(np.sum(np.where(diffs == 0, 0.0, 1.0 / np.where(diffs == 0, 1.0, diffs))))
                denom = 1.0 - newton * repulsion
                step = newton / denom if denom != 0 else newton
                z[i] = zi - step
                max_rel_step = max(max_rel_step, abs(step) / (1.0 + abs(z[i])))
            if max_rel_step <= 1e-14:
                converged = True
                break
            # stop once every residual reaches its evaluation noise floor
            # (eps times the absolute-coefficient Horner sum): double
            # precision cannot certify roots any further
            residuals = np.abs(peval(coeffs, z))
            floors = peval(np.abs(coeffs), np.abs(z)).real
            if np.all(residuals <= 64.0 * np.finfo(float).eps * floors):
                converged = True
                break
        if not converged:
            residuals = np.abs(peval(coeffs, z))
            if np.any(residuals > 1e-10 * norm_scale * np.maximum(1.0, np.abs(z)) ** d):
                raise RootSolveError(
                    f"Aberth iteration did not converge in {_ABERTH_SWEEPS} sweeps",
                    best_roots=z,
                    residuals=residuals,
                )

        for _ in range(_NEWTON_STEPS):
            pv = peval(coeffs, z)
            dv = peval(dcoeffs, z)
            mask = dv != 0
            step = np.where(mask, pv / np.where(mask, dv, 1.0), 0.0)
            znew = z - step
            # accept Newton moves only while they do not worsen the residual
            better = np.abs(peval(coeffs, znew)) <= np.abs(pv)
            z = np.where(better, znew, z)
            if np.all(np.abs(step) <= 2e-16 * (1.0 + np.abs(z))):
                break

    if real_input:
        snap = np.abs(z.imag) <= 1e-10 * (1.0 + np.abs(z.real))
        z = np.where(snap, z.real + 0.0j, z)

    if n_origin:
        z = np.concatenate([np.zeros(n_origin, dtype=complex), z])
    order = np.lexsort((z.imag, z.real))
    z = z[order]

    degree = p.degree
    scale = float(np.max(np.abs(p.coeffs)))
    residuals = np.abs(peval(np.array(p.coeffs), z))
    bounds = 1e-10 * scale * np.maximum(1.0, np.abs(z)) ** degree

    clustered = False
    diameter = 0.0
    if degree > 1:
        dist = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(dist, np.inf)
        nearest = dist.min(axis=1)
        tight = nearest < 1e-5 * (1.0 + np.abs(z))
        if np.any(tight):
            clustered = True
            diameter = float(nearest[tight].max())
            bounds = bounds * (1.0 + np.where(tight, diameter / 1e-12, 0.0))
    bad = residuals > bounds
    if np.any(bad):
        raise RootSolveError(
            f"{int(bad.sum())} root(s) exceed the residual acceptance bound",
            best_roots=z,
            residuals=residuals,
        )
    return RootSet(z, residuals, degree, clustered, diameter)


def count_zeros_disk(p: ComplexPoly, center: complex = 0.0, radius: float = 1.0) -> DiskZeroCount:
    """Number of zeros of ``p`` inside ``|xi - center| < radius``.

    Trapezoid contour integral of ``p'/p`` with sample doubling until the
    raw winding number stabilizes within 0.05.  A root within about
    ``1e-8 * radius`` of the contour (detected through the Newton-step
    proximity estimate ``|p/p'|``) raises :class:`ContourError`.
    """
    if p.degree < 1:
        raise ParameterError("E_DEGREE", "count_zeros_disk requires degree >= 1")
    if radius <= 0:
        raise ParameterError("E_RADIUS", f"radius must be > 0, got {radius}")
    dp = p.derivative()
    prev = None
    m = _CONTOUR_START
    while m <= _CONTOUR_MAX:
        theta = 2.0 * math.pi * np.arange(m) / m
        xi = center + radius * np.exp(1j * theta)
        pv = p(xi)
        dv = dp(xi)
        if np.any(pv == 0):
            raise ContourError("polynomial vanishes at a contour sample point")
        proximity = np.min(np.abs(pv) / np.maximum(np.abs(dv), 1e-300))
        if proximity < 1e-8 * radius:
            raise ContourError(
                f"estimated root distance {proximity:.2e} from the contour is below 1e-8 * radius"
            )
        winding = float(np.real(radius / m * np.sum(dv / pv * np.exp(1j * theta))))
        if prev is not None and abs(winding - prev) < 0.05:
            count = int(round(winding))
            if abs(winding - count) >= 0.25:
                raise StabilizationError(
                    f"winding number {winding:.3f} is not close to an integer"
                )
            return DiskZeroCount(complex(center), float(radius), count, winding, m)
        prev = winding
        m *= 2
    raise StabilizationError(f"winding number failed to stabilize within {_CONTOUR_MAX} samples")
