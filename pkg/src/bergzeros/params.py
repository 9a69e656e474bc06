"""Validated weight-exponent pair for the kernel family.

Every kernel in the family is indexed by two real exponents
``alpha, beta > -1`` of the radial weight ``|z|^(2*beta) * (1-|z|^2)^alpha``.
The second exponent decomposes as ``beta = beta0 + m`` with ``m = ceil(beta)``
a nonnegative integer and ``beta0`` in ``(-1, 0]``; all kernel formulas reduce
to the ``m = 0`` case through an explicit ``xi**(-m)`` prefactor, so the pair
``(m, beta0)`` is computed once here and treated as the single source of
parameter truth.
"""

import math
from dataclasses import dataclass, field

from .errors import ParameterError


@dataclass(frozen=True)
class KernelParams:
    """Validated ``(alpha, beta)`` pair with its ``(m, beta0)`` decomposition.

    Invariants: ``alpha > -1``, ``beta > -1``, ``beta == beta0 + m`` with
    ``m = ceil(beta) >= 0`` and ``-1 < beta0 <= 0``.  ``beta0 == 0`` exactly
    when ``beta`` is a nonnegative integer.
    """

    alpha: float
    beta: float
    m: int = field(init=False)
    beta0: float = field(init=False)

    def __post_init__(self):
        alpha = float(self.alpha)
        beta = float(self.beta)
        if not math.isfinite(alpha) or alpha <= -1.0:
            raise ParameterError("E_ALPHA_RANGE", f"alpha must be > -1, got {self.alpha}")
        if not math.isfinite(beta) or beta <= -1.0:
            raise ParameterError("E_BETA_RANGE", f"beta must be > -1, got {self.beta}")
        m = math.ceil(beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "beta0", beta - m)

    @property
    def beta_is_integer(self) -> bool:
        """True when beta is a nonnegative integer (constant-numerator branch)."""
        return self.beta0 == 0.0

    @property
    def alpha_is_integer(self) -> bool:
        """True when alpha is a nonnegative integer (polynomial numerator)."""
        return self.alpha >= 0.0 and self.alpha == math.floor(self.alpha)

    @property
    def alpha_int(self) -> int:
        if not self.alpha_is_integer:
            raise ParameterError("E_ALPHA_INTEGER", f"alpha must be a nonnegative integer, got {self.alpha}")
        return int(self.alpha)
