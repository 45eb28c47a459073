"""Brute-force validators independent of the closed-form evaluators.

Two small engines live here:

* a symplectic Gaussian-state simulator (squeeze, displace, beam-splitter)
  used to cross-check the beam-splitter evaluator, and
* a fixed-step RK4 integrator for the nonlinear parametric-amplifier
  mean-field pair, used to cross-check the analytic tanh/sech solution.

They are shipped (not test-only) so every published number can be
reproduced from the installed package.

Phase-space ordering is (X1, P1, X2, P2, ...) with vacuum covariance equal
to the identity. The beam splitter is realised as the real rotation
mixing the two modes with cos/sin weights; with that choice a squeezed
mode mixed with an X-displaced mode reproduces real variances and a real
output mean, which is the convention the rest of the package assumes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DomainError


@dataclass(frozen=True)
class GaussianState:
    """N-mode Gaussian state: mean vector and covariance matrix.

    Parameters
    ----------
    mean : ndarray, shape (2N,)
        Quadrature means ordered (X1, P1, X2, P2, ...).
    cov : ndarray, shape (2N, 2N)
        Symmetric covariance matrix; the vacuum is the identity.
    """

    mean: np.ndarray
    cov: np.ndarray

    @property
    def n_modes(self) -> int:
        return len(self.mean) // 2


def vacuum(n_modes: int) -> GaussianState:
    """The n-mode vacuum state."""
    return GaussianState(np.zeros(2 * n_modes), np.eye(2 * n_modes))


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal symplectic form, [[0, 1], [-1, 0]] per mode."""
    omega = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        omega[2 * k, 2 * k + 1] = 1.0
        omega[2 * k + 1, 2 * k] = -1.0
    return omega


def is_physical(state: GaussianState, tol: float = 1e-9) -> bool:
    """Check cov + i*Omega >= 0 via its eigenvalues."""
    m = state.cov + 1j * symplectic_form(state.n_modes)
    return bool(np.linalg.eigvalsh(m).min() >= -tol)


def _check_mode(state: GaussianState, mode: int) -> None:
    if not 0 <= mode < state.n_modes:
        raise DomainError(f"mode index {mode} out of range for {state.n_modes} modes")


def _apply_symplectic(state: GaussianState, s: np.ndarray) -> GaussianState:
    return GaussianState(s @ state.mean, s @ state.cov @ s.T)


def apply_squeeze(state: GaussianState, mode: int, b: float) -> GaussianState:
    """Squeeze one mode: (X, P) -> (e^{-b} X, e^{b} P)."""
    _check_mode(state, mode)
    s = np.eye(2 * state.n_modes)
    s[2 * mode, 2 * mode] = np.exp(-b)
    s[2 * mode + 1, 2 * mode + 1] = np.exp(b)
    return _apply_symplectic(state, s)


def apply_displacement(state: GaussianState, mode: int, amp: complex) -> GaussianState:
    """Displace one mode by a complex amplitude.

    With X = a + a† the mean shifts by (2 Re amp, 2 Im amp); the
    covariance is unchanged.
    """
    _check_mode(state, mode)
    mean = state.mean.copy()
    mean[2 * mode] += 2.0 * complex(amp).real
    mean[2 * mode + 1] += 2.0 * complex(amp).imag
    return GaussianState(mean, state.cov.copy())


def apply_beamsplitter(
    state: GaussianState, mode_a: int, mode_b: int, theta: float
) -> GaussianState:
    """Mix two modes with cos(theta)/sin(theta) weights.

    theta = 0 is the identity; theta = pi/2 exchanges the modes up to a
    sign on one of them.
    """
    _check_mode(state, mode_a)
    _check_mode(state, mode_b)
    if mode_a == mode_b:
        raise DomainError("beam splitter needs two distinct modes")
    c, s = np.cos(theta), np.sin(theta)
    m = np.eye(2 * state.n_modes)
    for off in (0, 1):  # same rotation on X and P sectors
        ia, ib = 2 * mode_a + off, 2 * mode_b + off
        m[ia, ia] = c
        m[ia, ib] = s
        m[ib, ia] = -s
        m[ib, ib] = c
    return _apply_symplectic(state, m)


def mode_variances(state: GaussianState, mode: int) -> tuple[float, float]:
    """(var_X, var_P) marginal of one mode."""
    _check_mode(state, mode)
    i = 2 * mode
    return float(state.cov[i, i]), float(state.cov[i + 1, i + 1])


def mean_field_ode(
    seed_amp: float,
    pump_amp: float,
    t_max: float,
    n_steps: int,
    g: float = 1.0,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    """Integrate the nonlinear mean-field pair with fixed-step RK4.

    The pair is dA_s/dt = g A_s A_p, dA_p/dt = -(g/2) A_s^2 with real
    initial amplitudes (seed_amp, pump_amp).

    Returns
    -------
    times, a_s, a_p : ndarray
        The step grid and the two amplitude trajectories on it.
    err_estimate : float
        Max absolute terminal difference against a half-step integration,
        a cheap a-posteriori error bound.
    """
    if t_max <= 0.0 or n_steps < 1:
        raise DomainError("t_max must be > 0 and n_steps >= 1")

    def run(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        h = t_max / n
        a_s = np.empty(n + 1)
        a_p = np.empty(n + 1)
        a_s[0], a_p[0] = seed_amp, pump_amp
        ys, yp = seed_amp, pump_amp
        for i in range(n):
            k1s, k1p = g * ys * yp, -0.5 * g * ys * ys
            s2, p2 = ys + 0.5 * h * k1s, yp + 0.5 * h * k1p
            k2s, k2p = g * s2 * p2, -0.5 * g * s2 * s2
            s3, p3 = ys + 0.5 * h * k2s, yp + 0.5 * h * k2p
            k3s, k3p = g * s3 * p3, -0.5 * g * s3 * s3
            s4, p4 = ys + h * k3s, yp + h * k3p
            k4s, k4p = g * s4 * p4, -0.5 * g * s4 * s4
            ys += (h / 6.0) * (k1s + 2.0 * k2s + 2.0 * k3s + k4s)
            yp += (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
            a_s[i + 1], a_p[i + 1] = ys, yp
        return np.linspace(0.0, t_max, n + 1), a_s, a_p

    times, a_s, a_p = run(n_steps)
    _, a_s2, a_p2 = run(2 * n_steps)
    err = max(abs(a_s[-1] - a_s2[-1]), abs(a_p[-1] - a_p2[-1]))
    return times, a_s, a_p, float(err)
