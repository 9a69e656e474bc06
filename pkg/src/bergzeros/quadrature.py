"""Gauss-Jacobi quadrature on (0, 1) and reproducing-property verification.

The radial part of every disk integral against the weight
``|z|^(2*beta) (1-|z|^2)^alpha`` reduces, via ``t = r**2``, to an integral on
(0, 1) against ``t**beta (1-t)**alpha``.  Nodes and weights come from the
symmetric tridiagonal (Golub-Welsch) eigenproblem for the Jacobi recurrence,
mapped from [-1, 1].
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, StabilizationError
from .kernel import eval_kernel_xi
from .params import KernelParams
from .special import beta_fn, ln_beta


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes/weights for ``integral_0^1 f(t) t**beta (1-t)**alpha dt``.

    ``exponents`` stores ``(beta, alpha)`` in that order: first the power of
    ``t``, then the power of ``1 - t``.
    """

    nodes: np.ndarray
    weights: np.ndarray
    exponents: tuple

    def integrate(self, values: np.ndarray):
        return np.sum(self.weights * values, axis=-1)

    def moment_error(self, k: int) -> float:
        """Relative error of the k-th moment against the beta-function value."""
        beta, alpha = self.exponents
        exact = beta_fn(k + beta + 1.0, alpha + 1.0)
        approx = float(np.sum(self.weights * self.nodes**k))
        return abs(approx - exact) / exact


def _jacobi_nodes_weights(alpha: float, beta: float, n: int):
    a, b = alpha, beta
    diag = np.zeros(n)
    offsq = np.zeros(n)
    diag[0] = (b - a) / (a + b + 2.0)
    if n > 1:
        k = np.arange(1, n, dtype=float)
        diag[1:] = (b * b - a * a) / ((2 * k + a + b) * (2 * k + a + b + 2.0))
        offsq[1] = 4.0 * (1 + a) * (1 + b) / ((2 + a + b) ** 2 * (3 + a + b))
        if n > 2:
            k = np.arange(2, n, dtype=float)
            offsq[2:] = (
                4.0 * k * (k + a) * (k + b) * (k + a + b)
                / ((2 * k + a + b) ** 2 * (2 * k + a + b + 1.0) * (2 * k + a + b - 1.0))
            )
    jac = np.diag(diag) + np.diag(np.sqrt(offsq[1:]), 1) + np.diag(np.sqrt(offsq[1:]), -1)
    try:
        x, vecs = np.linalg.eigh(jac)
    except np.linalg.LinAlgError as exc:
        raise StabilizationError(f"symmetric eigensolve failed for {n}-node rule") from exc
    mu0 = 2.0 ** (a + b + 1.0) * beta_fn(a + 1.0, b + 1.0)
    w = mu0 * vecs[0, :] ** 2
    return x, w


def gauss_jacobi_rule(alpha: float, beta: float, n_nodes: int = 64) -> QuadratureRule:
    """Quadrature for weight ``t**beta (1-t)**alpha`` on (0, 1).

    The rule is checked against its first three beta-function moments; on
    failure the node count is doubled once before giving up (the integrands
    here are smooth, so the rules converge geometrically).
    """
    if alpha <= -1.0 or beta <= -1.0:
        raise ParameterError("E_EXPONENT_RANGE", f"weight exponents must be > -1, got ({alpha}, {beta})")
    if n_nodes < 1:
        raise ParameterError("E_NODE_COUNT", f"n_nodes must be >= 1, got {n_nodes}")
    for attempt_nodes in (n_nodes, 2 * n_nodes):
        x, w = _jacobi_nodes_weights(alpha, beta, attempt_nodes)
        rule = QuadratureRule((1.0 + x) / 2.0, w * 2.0 ** (-(alpha + beta + 1.0)), (beta, alpha))
        checks = [rule.moment_error(k) for k in range(min(3, 2 * attempt_nodes - 1))]
        if max(checks) < 1e-11:
            return rule
    raise StabilizationError(f"moment self-check failed at {2 * n_nodes} nodes: {max(checks):.3e}")


def norm_moment_residual(params: KernelParams, n: int, rule: QuadratureRule) -> float:
    """Relative error of the basis-norm moment: the monomial ``z**n`` has
    squared norm ``B(n+beta+1, alpha+1) / B(alpha+1, beta+1)``; the radial
    rule must reproduce the numerator."""
    return rule.moment_error(n)


def verify_reproducing(
    params: KernelParams,
    z: complex,
    n: int,
    rule: QuadratureRule,
    *,
    n_angular: int = 256,
) -> float:
    """Residual of the reproducing identity for the basis monomials.

    Computes the inner product of the closed-form kernel section at ``z``
    against the n-th normalized monomial basis function by quadrature and
    returns the distance to ``conj(e_n(z))``.  The angular integral is an
    exact Fourier-coefficient extraction for uniform sampling (powers of
    ``e^(i theta)`` are orthogonal under the trapezoid rule up to aliasing,
    which decays like ``|z|**n_angular``); the radial integral uses ``rule``.
    """
    if abs(z) >= 1.0:
        raise ParameterError("E_DOMAIN", f"z must lie in the open unit disk, got |z| = {abs(z)}")
    if n < -params.m:
        raise ParameterError("E_DOMAIN", f"basis index must be >= -m = {-params.m}, got {n}")
    beta, alpha = rule.exponents
    if (beta, alpha) != (params.beta, params.alpha):
        raise ParameterError("E_RULE_MISMATCH", "rule exponents do not match the kernel parameters")
    t = rule.nodes
    r = np.sqrt(t)
    theta = 2.0 * math.pi * np.arange(n_angular) / n_angular
    points = r[:, None] * np.exp(1j * theta)[None, :]
    kernel_vals = eval_kernel_xi(params, points * np.conj(z))
    # angular mean of K(w, z) * e^{-i n theta} -> n-th Laurent coefficient in w
    angular = np.mean(kernel_vals * np.exp(-1j * n * theta)[None, :], axis=1)
    cn = math.exp(0.5 * (ln_beta(alpha + 1, beta + 1) - ln_beta(alpha + 1, n + beta + 1)))
    integrand = angular * cn * r**n
    value = rule.integrate(integrand) / beta_fn(alpha + 1, beta + 1)
    expected = cn * np.conj(complex(z)) ** n
    return float(abs(value - expected))
