"""Seeded traveling-wave optical parametric amplifier.

Mean fields are analytic. With g = 1 and |e_p| = 1 (time is then the
dimensionless tau = g*e_p*t) the pump/seed pair

    dA_s/dt = A_s A_p,   dA_p/dt = -A_s^2 / 2

conserves c1 = A_s^2/2 + A_p^2 and is solved by

    A_s(t) = sqrt(2 c1) sech(u),  A_p(t) = -sqrt(c1) tanh(u),
    u = t sqrt(c1) - artanh(e_p / sqrt(c1)).

The amplifying regime takes e_p = +1 (seed grows, phase squeezed), the
deamplifying one e_p = -1. At long times the seed always dies out and the
pump tends to -sqrt(c1).

Quadrature fluctuations are linearized around the mean fields. For real
fields the X and P sectors decouple:

    d/dt (x_s, x_p) = [[ A_p, A_s], [-A_s, 0]] (x_s, x_p)
    d/dt (p_s, p_p) = [[-A_p, A_s], [-A_s, 0]] (p_s, p_p)

and each 2x2 covariance block evolves by dV/dt = M V + V M^T from the
vacuum (identity). The blocks are integrated with classical fixed-step
RK4, mean fields supplied by the closed form at the stage times. The
trace of the X drift is +A_p and of the P drift -A_p, so
det(V_x) det(V_p) is conserved: the joint four-quadrature state stays
pure even as the seed marginal becomes mixed.

The integrator is vectorized over a batch of seed ratios sharing one time
grid, which is what parameter sweeps use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import DomainError, MethodPoint, QuadratureStats, Regime

STEPS_PER_UNIT_TIME = 4096


class NonConvergenceError(RuntimeError):
    """Doubling the step count moved a terminal variance by > 1e-6."""


@dataclass(frozen=True)
class OpaParams:
    seed_ratio: float
    t_max: float
    regime: Regime = Regime.PHASE_SQUEEZING
    n_steps: int = 0  # 0 picks STEPS_PER_UNIT_TIME per unit of t_max

    def __post_init__(self) -> None:
        if not math.isfinite(self.seed_ratio) or self.seed_ratio < 0.0:
            raise DomainError(f"seed_ratio must be >= 0, got {self.seed_ratio!r}")
        if not self.t_max > 0.0:
            raise DomainError(f"t_max must be > 0, got {self.t_max!r}")
        if self.n_steps == 0:
            object.__setattr__(
                self, "n_steps", max(2, round(STEPS_PER_UNIT_TIME * self.t_max))
            )
        if self.n_steps < 2:
            raise DomainError(f"n_steps must be >= 2, got {self.n_steps!r}")

    @property
    def pump_sign(self) -> float:
        return 1.0 if self.regime is Regime.PHASE_SQUEEZING else -1.0


@dataclass(frozen=True)
class OpaTrajectory:
    """Mean fields and quadrature covariance blocks on a time grid.

    cov_x[i] and cov_p[i] are the 2x2 (seed, pump) covariance blocks of
    the X and P sectors at times[i].
    """

    times: np.ndarray
    a_s: np.ndarray
    a_p: np.ndarray
    cov_x: np.ndarray
    cov_p: np.ndarray
    params: OpaParams = field(repr=False)

    def seed_stats(self, i: int) -> QuadratureStats:
        return QuadratureStats(
            var_x=float(self.cov_x[i, 0, 0]), var_p=float(self.cov_p[i, 0, 0])
        )

    def alpha_sq(self, i: int) -> float:
        return float(self.a_s[i] ** 2)  # |e_p| = 1

    def point(self, i: int) -> MethodPoint:
        return MethodPoint(
            alpha_sq=self.alpha_sq(i),
            stats=self.seed_stats(i),
            params={
                "seed_ratio": self.params.seed_ratio,
                "tau": float(self.times[i]),
                "regime": self.params.regime.value,
            },
        )


def mean_fields(
    times: np.ndarray, seed_ratio: float, pump_sign: float
) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form (A_s, A_p) on a time grid.

    Evaluated through the hyperbolic addition identities

        tanh(x + u0) = (tanh x + tanh u0) / (1 + tanh x tanh u0)
        sech(x + u0) = sech x sech u0 / (1 + tanh x tanh u0)

    with tanh(u0) = -pump/sqrt(c1) and sech(u0) = seed/sqrt(2 c1) known
    exactly, which keeps t = 0 exact and avoids the ill-conditioned
    artanh near the zero-seed limit. sech is computed overflow-free.
    """
    times = np.asarray(times, dtype=float)
    if seed_ratio == 0.0:
        return np.zeros_like(times), np.full_like(times, pump_sign)
    c1 = 1.0 + seed_ratio * seed_ratio / 2.0
    rc = math.sqrt(c1)
    tanh0 = -pump_sign / rc
    sech0 = seed_ratio / math.sqrt(2.0 * c1)
    x = rc * times
    tanh_x = np.tanh(x)
    e = np.exp(-np.abs(x))
    sech_x = 2.0 * e / (1.0 + e * e)
    denom = 1.0 + tanh_x * tanh0
    a_s = math.sqrt(2.0 * c1) * sech_x * sech0 / denom
    a_p = -rc * (tanh_x + tanh0) / denom
    return a_s, a_p


def opa_mean_field(params: OpaParams, t: float) -> tuple[float, float]:
    """Mean amplitudes (A_s, A_p) at one time."""
    a_s, a_p = mean_fields(np.array([t]), params.seed_ratio, params.pump_sign)
    return float(a_s[0]), float(a_p[0])


def _integrate_batch(
    seed_ratios: np.ndarray, pump_sign: float, t_max: float, n_steps: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """RK4 on the sector covariances for a batch of seeds at once.

    Returns times (n+1,), fields (2, n+1, B) and the six covariance
    components stacked as (n+1, 6, B) in the order
    (vx_ss, vx_sp, vx_pp, vp_ss, vp_sp, vp_pp).
    """
    b = len(seed_ratios)
    half_times = np.linspace(0.0, t_max, 2 * n_steps + 1)
    a_s = np.empty((2 * n_steps + 1, b))
    a_p = np.empty((2 * n_steps + 1, b))
    for j, sr in enumerate(seed_ratios):
        a_s[:, j], a_p[:, j] = mean_fields(half_times, float(sr), pump_sign)

    h = t_max / n_steps
    y = np.zeros((6, b))
    y[0] = y[2] = y[3] = y[5] = 1.0  # vacuum
    out = np.empty((n_steps + 1, 6, b))
    out[0] = y

    def rhs(y: np.ndarray, a: np.ndarray, s: np.ndarray) -> np.ndarray:
        vx_ss, vx_sp, vx_pp, vp_ss, vp_sp, vp_pp = y
        return np.stack(
            [
                2.0 * (a * vx_ss + s * vx_sp),
                a * vx_sp + s * vx_pp - s * vx_ss,
                -2.0 * s * vx_sp,
                2.0 * (-a * vp_ss + s * vp_sp),
                -a * vp_sp + s * vp_pp - s * vp_ss,
                -2.0 * s * vp_sp,
            ]
        )

    for i in range(n_steps):
        a0, s0 = a_p[2 * i], a_s[2 * i]
        am, sm = a_p[2 * i + 1], a_s[2 * i + 1]
        a1, s1 = a_p[2 * i + 2], a_s[2 * i + 2]
        k1 = rhs(y, a0, s0)
        k2 = rhs(y + 0.5 * h * k1, am, sm)
        k3 = rhs(y + 0.5 * h * k2, am, sm)
        k4 = rhs(y + h * k3, a1, s1)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        out[i + 1] = y

    times = np.linspace(0.0, t_max, n_steps + 1)
    fields = np.stack([a_s[::2], a_p[::2]])
    return times, fields[0], fields[1], out


def _cov_blocks(components: np.ndarray, j: int) -> tuple[np.ndarray, np.ndarray]:
    """(n+1, 2, 2) X and P covariance stacks for batch column j."""
    n1 = components.shape[0]
    cov_x = np.empty((n1, 2, 2))
    cov_p = np.empty((n1, 2, 2))
    cov_x[:, 0, 0] = components[:, 0, j]
    cov_x[:, 0, 1] = cov_x[:, 1, 0] = components[:, 1, j]
    cov_x[:, 1, 1] = components[:, 2, j]
    cov_p[:, 0, 0] = components[:, 3, j]
    cov_p[:, 0, 1] = cov_p[:, 1, 0] = components[:, 4, j]
    cov_p[:, 1, 1] = components[:, 5, j]
    return cov_x, cov_p


def propagate_batch(
    seed_ratios: Sequence[float], regime: Regime, t_max: float, n_steps: int = 0
) -> list[OpaTrajectory]:
    """Propagate many seeds over one shared time grid in a single pass."""
    ref = OpaParams(0.0, t_max, regime, n_steps)
    seeds = np.asarray([OpaParams(s, t_max, regime).seed_ratio for s in seed_ratios])
    times, a_s, a_p, comp = _integrate_batch(
        seeds, ref.pump_sign, t_max, ref.n_steps
    )
    out = []
    for j, s in enumerate(seeds):
        cov_x, cov_p = _cov_blocks(comp, j)
        out.append(
            OpaTrajectory(
                times=times, a_s=a_s[:, j], a_p=a_p[:, j], cov_x=cov_x, cov_p=cov_p,
                params=OpaParams(float(s), t_max, regime, ref.n_steps),
            )
        )
    return out


def opa_propagate(params: OpaParams, check_steps: bool = False) -> OpaTrajectory:
    """Integrate the linearized noise covariance from vacuum.

    With check_steps=True the terminal variances are re-computed at twice
    the step count; a shift above 1e-6 raises NonConvergenceError.
    """
    seeds = np.array([params.seed_ratio])
    times, a_s, a_p, comp = _integrate_batch(
        seeds, params.pump_sign, params.t_max, params.n_steps
    )
    if check_steps:
        _, _, _, comp2 = _integrate_batch(
            seeds, params.pump_sign, params.t_max, 2 * params.n_steps
        )
        gap = float(np.abs(comp[-1] - comp2[-1]).max())
        if gap > 1e-6:
            raise NonConvergenceError(
                f"terminal variances moved by {gap:.3e} when doubling "
                f"n_steps={params.n_steps}; refine the step count"
            )
    cov_x, cov_p = _cov_blocks(comp, 0)
    return OpaTrajectory(
        times=times, a_s=a_s[:, 0], a_p=a_p[:, 0], cov_x=cov_x, cov_p=cov_p,
        params=params,
    )


def opa_evaluate(params: OpaParams, t: float) -> MethodPoint:
    """Output point at interaction time t (integrates over [0, t])."""
    if not 0.0 <= t <= params.t_max:
        raise DomainError(f"t must lie in [0, t_max], got {t!r}")
    if t == 0.0:
        return MethodPoint(
            alpha_sq=params.seed_ratio**2,
            stats=QuadratureStats(1.0, 1.0),
            params={
                "seed_ratio": params.seed_ratio,
                "tau": 0.0,
                "regime": params.regime.value,
            },
        )
    n = max(2, round(params.n_steps * t / params.t_max))
    sub = OpaParams(params.seed_ratio, t, params.regime, n)
    traj = opa_propagate(sub)
    return traj.point(len(traj.times) - 1)
