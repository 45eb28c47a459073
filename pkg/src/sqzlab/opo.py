"""Seeded degenerate optical parametric oscillator, single-sided cavity.

Steady state is computed in the dimensionless chart kappa = 1, g = 1. The
pump drive is fixed by the zero-seed cooperativity c0 = g*A_p0/(kappa/2)
through A_p0 = -2*e_p, i.e. e_p = -c0/4 in the amplifying (phase
squeezing) regime and +c0/4 in the deamplifying (amplitude squeezing)
one; the seed drive is e_s = seed_ratio * |e_p|.

Eliminating A_p from the steady-state pair gives a depressed cubic

    A_s^3 + p A_s + q = 0,   p = (1 + 4 e_p)/2,   q = e_s,

solved here by Cardano's formula with a rationalised root to avoid
cancellation at small p. The auxiliary value chi = e_s (1 - sqrt(1 + S)),
S = 4 p^3 / (27 q^2), identifies the root branch: the real root equals
cbrt(-chi/2) - p / (3 cbrt(-chi/2)). Every returned state is verified
against the steady-state pair to a 1e-9 residual; failure raises instead
of silently switching branches.

Output quadrature variances (vacuum = 1) at zero detection frequency:

    var_x = [(A_s^2 - A_p/2 - 1/4)^2 + A_s^2] / (A_s^2 - A_p/2 + 1/4)^2
    var_p = [(A_s^2 + A_p/2 - 1/4)^2 + A_s^2] / (A_s^2 + A_p/2 + 1/4)^2

and the relative squared output displacement is
alpha_sq = ((e_s + A_s)/e_p)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DomainError, MethodPoint, QuadratureStats, Regime

_RESIDUAL_TOL = 1e-9


class BranchError(DomainError):
    """The selected cubic branch stopped being real for these inputs."""


@dataclass(frozen=True)
class OpoParams:
    """Zero-seed cooperativity, seed-to-pump drive ratio and regime."""

    c0: float
    seed_ratio: float
    regime: Regime = Regime.PHASE_SQUEEZING

    def __post_init__(self) -> None:
        if not 0.0 < self.c0 < 1.0:
            raise DomainError(f"c0 must lie in (0, 1), got {self.c0!r}")
        if not math.isfinite(self.seed_ratio) or self.seed_ratio < 0.0:
            raise DomainError(f"seed_ratio must be >= 0, got {self.seed_ratio!r}")


@dataclass(frozen=True)
class OpoSteadyState:
    """Intracavity amplitudes and the cubic auxiliary chi (kappa = g = 1)."""

    a_s: float
    a_p: float
    chi: float
    seed_in: float
    pump_in: float


def _drives(params: OpoParams) -> tuple[float, float]:
    pump = -params.c0 / 4.0
    if params.regime is Regime.AMPLITUDE_SQUEEZING:
        pump = -pump
    return params.seed_ratio * abs(pump), pump


def _solve_cubic(e_s: float, e_p: float) -> tuple[float, float]:
    """Real root of A_s^3 + p A_s + q = 0 and the chi auxiliary."""
    p = (1.0 + 4.0 * e_p) / 2.0
    q = e_s
    if q == 0.0:
        return 0.0, 0.0
    s = 4.0 * p**3 / (27.0 * q * q)
    if 1.0 + s < 0.0:
        raise BranchError(
            f"steady-state branch is complex for seed {e_s!r}, pump {e_p!r}"
        )
    chi = q * (1.0 - math.sqrt(1.0 + s))
    disc = math.sqrt(q * q / 4.0 + p**3 / 27.0)
    # -q/2 + disc rationalised; exact when p = 0
    u3 = (p**3 / 27.0) / (q / 2.0 + disc)
    a_s = math.copysign(abs(u3) ** (1.0 / 3.0), u3) - math.copysign(
        abs(q / 2.0 + disc) ** (1.0 / 3.0), q / 2.0 + disc
    )
    return a_s, chi


def opo_steady_state(params: OpoParams) -> OpoSteadyState:
    """Solve for the intracavity amplitudes; residual-checked."""
    e_s, e_p = _drives(params)
    a_s, chi = _solve_cubic(e_s, e_p)
    a_p = -a_s * a_s - 2.0 * e_p
    r_s = a_s - (2.0 * a_s * a_p - 2.0 * e_s)
    r_p = a_p - (-a_s * a_s - 2.0 * e_p)
    if max(abs(r_s), abs(r_p)) > _RESIDUAL_TOL:
        raise BranchError(
            f"steady-state residual {max(abs(r_s), abs(r_p)):.3e} exceeds "
            f"{_RESIDUAL_TOL:g} at c0={params.c0}, seed_ratio={params.seed_ratio}"
        )
    return OpoSteadyState(a_s=a_s, a_p=a_p, chi=chi, seed_in=e_s, pump_in=e_p)


def _quadratures(a_s: float, a_p: float) -> QuadratureStats:
    r = a_s * a_s
    var_x = ((r - a_p / 2.0 - 0.25) ** 2 + r) / (r - a_p / 2.0 + 0.25) ** 2
    var_p = ((r + a_p / 2.0 - 0.25) ** 2 + r) / (r + a_p / 2.0 + 0.25) ** 2
    return QuadratureStats(var_x=var_x, var_p=var_p)


def opo_evaluate(params: OpoParams) -> MethodPoint:
    """Exact output point from the residual-checked steady state."""
    ss = opo_steady_state(params)
    alpha_sq = ((ss.seed_in + ss.a_s) / ss.pump_in) ** 2
    return MethodPoint(
        alpha_sq=alpha_sq,
        stats=_quadratures(ss.a_s, ss.a_p),
        params={
            "c0": params.c0,
            "seed_ratio": params.seed_ratio,
            "regime": params.regime.value,
        },
    )


def perturbative_stats(c0: float, alpha_sq: float, regime: Regime) -> QuadratureStats:
    """Small-seed expansion of the output variances at a given alpha_sq.

    In the amplifying regime the intracavity seed obeys, to leading order,
    A_s^2 = c0^2 alpha_sq / (4 (1 + c0)^2); substituting it into the exact
    variance forms yields the expansion. The deamplifying regime follows
    by flipping the sign of the cooperativity. Residual error against the
    exact evaluator is O(alpha_sq^2).
    """
    if not 0.0 < c0 < 1.0:
        raise DomainError(f"c0 must lie in (0, 1), got {c0!r}")
    if alpha_sq < 0.0:
        raise DomainError(f"alpha_sq must be >= 0, got {alpha_sq!r}")
    c = c0 if regime is Regime.PHASE_SQUEEZING else -c0
    a2 = c * c * alpha_sq / (4.0 * (1.0 + c) ** 2)
    var_x = ((6.0 * a2 - c - 1.0) ** 2 + 16.0 * a2) / (6.0 * a2 - c + 1.0) ** 2
    var_p = ((2.0 * a2 + c - 1.0) ** 2 + 16.0 * a2) / (2.0 * a2 + c + 1.0) ** 2
    return QuadratureStats(var_x=var_x, var_p=var_p)


def perturbative_gain(c0: float, regime: Regime) -> float:
    """Small-seed output/input displacement ratio magnitude."""
    if regime is Regime.PHASE_SQUEEZING:
        return (1.0 + c0) / (1.0 - c0)
    return (1.0 - c0) / (1.0 + c0)


def opo_perturbative(params: OpoParams) -> MethodPoint:
    """Perturbative analogue of :func:`opo_evaluate` for small seeds."""
    alpha_sq = (perturbative_gain(params.c0, params.regime) * params.seed_ratio) ** 2
    return MethodPoint(
        alpha_sq=alpha_sq,
        stats=perturbative_stats(params.c0, alpha_sq, params.regime),
        params={
            "c0": params.c0,
            "seed_ratio": params.seed_ratio,
            "regime": params.regime.value,
        },
    )


def amplitude_cutoff_index(alpha_sqs: list[float]) -> int | None:
    """First index at which alpha_sq stops increasing along a seed sweep.

    Deamplifying sweeps lose their one-to-one map between seed input and
    output brightness once the seed needed to overcome deamplification
    turns alpha_sq(seed) around; points from the first decrease onward
    should be discarded. Returns None for a monotone sequence.
    """
    for i in range(1, len(alpha_sqs)):
        if alpha_sqs[i] < alpha_sqs[i - 1]:
            return i
    return None
