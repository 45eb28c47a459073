"""Seeded dissipative optomechanical squeezer, closed forms.

The evaluator is parameterized directly by the cooperativity cc, the
two-tone probe asymmetry dd and the mechanical thermal occupation n_bar;
the underlying rate assumptions (mechanical damping below the cavity
linewidth, both far below the mechanical frequency) are baked into the
closed forms and are not runtime inputs.

For the amplitude-squeezing drive phase:

    alpha_sq = (1 - cc*dd)^3 / (2 cc^2 (1 + dd^2))
    var_x    = (1 + dd^2)(1 - cc*dd)/2 + cc dd^2 (2 n_bar + 1)
    var_p    = (1 - cc*dd)^2/(1 + cc*dd)^2
               + 4 cc (2 n_bar + 1)/(1 + cc*dd)^2

with var_x and var_p interchanged for the phase-squeezing phase. The
vacuum output limit is cc*dd = 1, where alpha_sq = 0 and the variances
reduce to ((2 n_bar + 1)/cc, cc (2 n_bar + 1)).

These expressions are asymptotic: away from the cc*dd = 1 limit the
uncertainty product they predict can dip slightly below 1, so unlike the
other evaluators they should not be relied on as exact quantum states at
moderate brightness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DomainError, MethodPoint, QuadratureStats, SqueezedAxis


@dataclass(frozen=True)
class OmParams:
    cc: float
    dd: float
    n_bar: float = 0.0
    axis: SqueezedAxis = SqueezedAxis.AMPLITUDE

    def __post_init__(self) -> None:
        if not math.isfinite(self.cc) or self.cc <= 0.0:
            raise DomainError(f"cc must be > 0, got {self.cc!r}")
        if not math.isfinite(self.dd) or self.dd < 0.0:
            raise DomainError(f"dd must be >= 0, got {self.dd!r}")
        if not math.isfinite(self.n_bar) or self.n_bar < 0.0:
            raise DomainError(f"n_bar must be >= 0, got {self.n_bar!r}")
        if self.cc * self.dd > 1.0:
            raise DomainError(
                f"cc*dd must not exceed 1, got {self.cc * self.dd!r}"
            )


def om_evaluate(params: OmParams) -> MethodPoint:
    """Output displacement ratio and variances for one drive setting."""
    cc, dd, thermal = params.cc, params.dd, 2.0 * params.n_bar + 1.0
    cd = cc * dd
    alpha_sq = (1.0 - cd) ** 3 / (2.0 * cc * cc * (1.0 + dd * dd))
    squeezed = (1.0 + dd * dd) * (1.0 - cd) / 2.0 + cc * dd * dd * thermal
    anti = (1.0 - cd) ** 2 / (1.0 + cd) ** 2 + 4.0 * cc * thermal / (1.0 + cd) ** 2
    if params.axis is SqueezedAxis.AMPLITUDE:
        stats = QuadratureStats(var_x=squeezed, var_p=anti)
    else:
        stats = QuadratureStats(var_x=anti, var_p=squeezed)
    return MethodPoint(
        alpha_sq=alpha_sq,
        stats=stats,
        params={
            "cc": cc,
            "dd": dd,
            "n_bar": params.n_bar,
            "axis": params.axis.value,
        },
    )


def om_leading_order(params: OmParams, alpha_sq: float) -> QuadratureStats:
    """Leading-order variances in alpha_sq at zero thermal occupation.

    Valid for 0 < dd <= 1 and small alpha_sq:

        squeezed ~ dd [1 + (1 - dd)^2/dd * k],  k = ((1 + 1/dd^2)/4 * alpha_sq)^{1/3}
        anti     ~ (1/dd) [1 - (1 - dd) k^2]

    The residual against :func:`om_evaluate` shrinks as alpha^{4/3} on the
    squeezed variance and as alpha^2 on the antisqueezed one.
    """
    dd = params.dd
    if dd <= 0.0:
        raise DomainError(f"dd must be > 0 for the expansion, got {dd!r}")
    if dd > 1.0:
        raise DomainError(f"dd must be <= 1 for the expansion, got {dd!r}")
    if params.n_bar != 0.0:
        raise DomainError("the expansion assumes n_bar = 0")
    if alpha_sq < 0.0:
        raise DomainError(f"alpha_sq must be >= 0, got {alpha_sq!r}")
    k = ((1.0 + 1.0 / dd**2) / 4.0 * alpha_sq) ** (1.0 / 3.0)
    squeezed = dd * (1.0 + (1.0 - dd) ** 2 / dd * k)
    anti = (1.0 / dd) * (1.0 - (1.0 - dd) * k * k)
    if params.axis is SqueezedAxis.AMPLITUDE:
        return QuadratureStats(var_x=squeezed, var_p=anti)
    return QuadratureStats(var_x=anti, var_p=squeezed)


def cooperativity_for_alpha_sq(dd: float, alpha_sq: float) -> float:
    """Invert alpha_sq(cc) at fixed dd by bisection.

    alpha_sq decreases monotonically from +inf at cc -> 0 to 0 at
    cc = 1/dd, so the root is unique.
    """
    if dd <= 0.0:
        raise DomainError(f"dd must be > 0, got {dd!r}")
    if alpha_sq <= 0.0:
        raise DomainError(f"alpha_sq must be > 0, got {alpha_sq!r}")

    def f(cc: float) -> float:
        return (1.0 - cc * dd) ** 3 / (2.0 * cc * cc * (1.0 + dd * dd)) - alpha_sq

    lo, hi = 1e-12, 1.0 / dd
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
