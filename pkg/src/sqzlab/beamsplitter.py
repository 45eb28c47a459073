"""Beam-splitter mixing of a squeezed vacuum with a strong coherent state.

Closed forms in the high-pump-displacement limit, where the pump
amplitude drops out of both the variances and the displacement ratio:

    var_x = e^{-2b} cos^2(theta) + sin^2(theta)
    var_p = e^{+2b} cos^2(theta) + sin^2(theta)
    alpha_sq = sin^2(theta)

b is the input squeeze parameter (b > 0 squeezes amplitude) and theta the
mixing angle. Squeezing degrades linearly in alpha_sq while the overall
uncertainty grows as sqrt(1 + 4 alpha_sq (1 - alpha_sq) sinh^2 b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DomainError, MethodPoint, QuadratureStats

HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class BsParams:
    """Squeeze parameter of the input vacuum and beam-splitter angle."""

    b: float
    theta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.b):
            raise DomainError(f"b must be finite, got {self.b!r}")
        if not 0.0 <= self.theta <= HALF_PI:
            raise DomainError(f"theta must lie in [0, pi/2], got {self.theta!r}")


def bs_evaluate(params: BsParams) -> MethodPoint:
    """Output displacement ratio and quadrature variances for one setting."""
    c2 = math.cos(params.theta) ** 2
    s2 = math.sin(params.theta) ** 2
    stats = QuadratureStats(
        var_x=math.exp(-2.0 * params.b) * c2 + s2,
        var_p=math.exp(2.0 * params.b) * c2 + s2,
    )
    return MethodPoint(
        alpha_sq=s2, stats=stats, params={"b": params.b, "theta": params.theta}
    )


def bs_uncertainty(params: BsParams) -> float:
    """Overall uncertainty sqrt(1 + 4 a2 (1 - a2) sinh^2 b), a2 = sin^2 theta.

    Algebraically identical to sqrt(var_x * var_p) of :func:`bs_evaluate`
    and to sqrt(1 + 2 cos^2 sin^2 (cosh 2b - 1)).
    """
    a2 = math.sin(params.theta) ** 2
    return math.sqrt(1.0 + 4.0 * a2 * (1.0 - a2) * math.sinh(params.b) ** 2)
