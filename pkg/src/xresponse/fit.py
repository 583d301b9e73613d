"""Power-law model for sign correlators and its least-squares fit.

The model is ``theta / (1 + (tau / tau0)**2) ** (gamma / 2)``: flat at
``theta`` for lags well below ``tau0`` and decaying like ``tau**-gamma``
beyond.  ``gamma >= 1`` is called short memory, ``gamma < 1`` long memory.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass

import numpy as np

from .errors import NonConvergence, TooFewPoints

MAX_ITER = 200
REL_TOL = 1e-10
_MU0 = 1e-3
_MU_MAX = 1e16
_MAX_STEP = 0.5


@dataclass(frozen=True)
class PowerLawFit:
    theta: float
    tau0: float
    gamma: float
    chi2: float = 0.0
    converged: bool = True
    n_points: int = 0
    degenerate: bool = False
    iterations: int = 0
    chi2_mode: str = "mean"

    def __post_init__(self):
        if not self.tau0 > 0:
            raise ValueError("tau0 must be positive")
        if self.chi2 < 0:
            raise ValueError("chi2 must be non-negative")

    @property
    def memory_class(self) -> str:
        return "short" if self.gamma >= 1 else "long"

    def __call__(self, tau):
        return model_eval(self, tau)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["memory_class"] = self.memory_class
        return d

    def to_json(self, **extra) -> str:
        d = self.to_dict()
        d.update(extra)
        return json.dumps(d, indent=2, sort_keys=True) + "\n"


def model_eval(fit, tau):
    """Evaluate the model; ``fit`` is a PowerLawFit or a (theta, tau0, gamma) triple."""
    if isinstance(fit, PowerLawFit):
        theta, tau0, gamma = fit.theta, fit.tau0, fit.gamma
    else:
        theta, tau0, gamma = fit
    tau = np.asarray(tau, dtype=np.float64)
    if np.any(tau < 0):
        raise ValueError("tau must be >= 0")
    out = theta / (1.0 + (tau / tau0) ** 2) ** (gamma / 2.0)
    return float(out) if out.ndim == 0 else out


def _profile(p, tau, y):
    """Residual and Jacobian with the amplitude eliminated.

    For fixed ``(log tau0, gamma)`` the best amplitude is the linear
    least-squares ``theta = b.y / b.b`` with ``b`` the unit-amplitude model;
    the Jacobian is Kaufman's projection of the derivative of ``theta * b``.
    """
    log_tau0, gamma = p
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        x2 = (tau / np.exp(log_tau0)) ** 2
        u = 1.0 + x2
        b = u ** (-gamma / 2.0)
        bb = float(b @ b)
        if not (bb > 0 and math.isfinite(bb)):
            return math.nan, np.full_like(y, np.inf), np.full((len(y), 2), np.nan)
        theta = float(b @ y) / bb
        r = theta * b - y
        db = np.column_stack([gamma * b * x2 / u, -0.5 * np.log(u) * b])
        jac = theta * (db - np.outer(b, b @ db) / bb)
    return theta, r, jac


def initial_guess(tau, y) -> tuple[float, float, float]:
    """Starting point read off the data's two asymptotic regimes.

    Amplitude from the smallest lag, exponent from the log-log slope over the
    largest decade of lags, decay period where the data first falls to
    ``theta / 2**(gamma/2)`` (the model's value at ``tau == tau0``).
    """
    order = np.argsort(tau)
    tau, y = np.asarray(tau, float)[order], np.asarray(y, float)[order]
    theta = float(y[0])
    gamma = 1.0
    if theta != 0:
        ratio = y / theta
        tail = (tau >= tau[-1] / 10) & (tau > 0) & (ratio > 0)
        if np.count_nonzero(tail) >= 2 and np.ptp(tau[tail]) > 0:
            slope = np.polyfit(np.log(tau[tail]), np.log(ratio[tail]), 1)[0]
            if np.isfinite(slope):
                gamma = max(-float(slope), 0.0)
        target = 2.0 ** (-gamma / 2.0)
        below = np.flatnonzero(ratio <= target)
        if len(below) == 0:
            tau0 = tau[-1]
        elif below[0] == 0:
            tau0 = tau[0]
        else:
            k = below[0]
            t0, t1 = tau[k - 1], tau[k]
            r0, r1 = ratio[k - 1], ratio[k]
            w = (r0 - target) / (r0 - r1) if r0 != r1 else 1.0
            if t0 > 0:
                tau0 = math.exp(math.log(t0) + w * (math.log(t1) - math.log(t0)))
            else:
                tau0 = t0 + w * (t1 - t0)
    else:
        tau0 = float(np.median(tau[tau > 0])) if np.any(tau > 0) else 1.0
    return theta, float(max(tau0, 1e-6)), gamma


def fit_power_law(series=None, tau_range: tuple[float, float] | None = None, *,
                  taus=None, values=None, chi2: str = "mean", guess=None,
                  max_iter: int = MAX_ITER, rel_tol: float = REL_TOL) -> PowerLawFit:
    """Least-squares fit of the power-law model.

    Pass either a series (anything with ``taus`` and ``values``) or the
    ``taus``/``values`` arrays.  Residuals are unweighted and taken in
    linear space.  ``chi2`` is the minimized residual sum of squares divided
    by the number of points (``"mean"``) or left as the sum (``"sum"``).

    The amplitude is linear and is solved for exactly at every step; damped
    Gauss-Newton steps in ``(log tau0, gamma)`` come from the normal
    equations with Marquardt's diagonal scaling.  A step is kept only if it lowers the
    residual; damping is divided by 10 after a kept step and multiplied by 10
    otherwise.  The fit stops once a kept step improves the residual by less
    than ``rel_tol`` relatively, once no damping yields descent, or after
    ``max_iter`` steps (then ``converged`` is False and a NonConvergence
    warning is issued).  A ``guess`` triple only seeds ``tau0`` and ``gamma``.
    """
    if series is not None:
        taus, values = series.taus, series.values
    tau = np.asarray(taus, dtype=np.float64)
    y = np.asarray(values, dtype=np.float64)
    if tau_range is not None:
        keep = (tau >= tau_range[0]) & (tau <= tau_range[1])
        tau, y = tau[keep], y[keep]
    if len(tau) < 4:
        raise TooFewPoints(f"need at least 4 points, got {len(tau)}")
    if not (np.all(np.isfinite(y)) and np.all(np.isfinite(tau))):
        raise ValueError("non-finite input")
    if chi2 not in ("mean", "sum"):
        raise ValueError("chi2 must be 'mean' or 'sum'")

    _, tau00, gamma0 = guess if guess is not None else initial_guess(tau, y)
    p = np.array([math.log(tau00), gamma0])
    theta, r, jac = _profile(p, tau, y)
    cost = float(r @ r)
    mu = _MU0
    converged = cost == 0.0
    it = 0
    while not converged and it < max_iter:
        it += 1
        a = jac.T @ jac
        g = jac.T @ r
        d = np.diag(a).copy()
        d = np.maximum(d, 1e-12 * max(d.max(), 1e-300))
        try:
            step = np.linalg.solve(a + mu * np.diag(d), -g)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(a + mu * np.diag(d), -g, rcond=None)[0]
        # a trust cap keeps one step from jumping across the basin onto the
        # flat tau0 -> 0 or tau0 -> inf plateaus
        big = np.max(np.abs(step))
        if big > _MAX_STEP:
            step *= _MAX_STEP / big
        trial = p + step
        theta_t, r_t, jac_t = _profile(trial, tau, y)
        cost_t = float(r_t @ r_t)
        if np.isfinite(cost_t) and np.all(np.isfinite(jac_t)) and cost_t < cost:
            improvement = (cost - cost_t) / cost
            p, theta, jac, r, cost = trial, theta_t, jac_t, r_t, cost_t
            mu = max(mu / 10, 1e-15)
            if cost == 0.0 or improvement < rel_tol:
                converged = True
        else:
            mu *= 10
            if mu > _MU_MAX:
                # no damping gives descent: stationary to working precision
                converged = True
    if not converged:
        warnings.warn(f"power-law fit stopped after {max_iter} iterations", NonConvergence)

    tau0, gamma = math.exp(p[0]), float(p[1])
    total = float(r @ r)
    return PowerLawFit(
        theta=theta, tau0=tau0, gamma=gamma,
        chi2=total / len(tau) if chi2 == "mean" else total,
        converged=converged, n_points=len(tau),
        degenerate=abs(gamma) < 1e-8 or theta == 0.0,
        iterations=it, chi2_mode=chi2,
    )


def table_row(label: str, inc: PowerLawFit, exc: PowerLawFit) -> str:
    """One CSV row with include/exclude-zero fits side by side.

    Columns: label, theta inc/exc, tau0 inc/exc, gamma inc/exc, chi2 inc/exc.
    """
    vals = [inc.theta, exc.theta, inc.tau0, exc.tau0, inc.gamma, exc.gamma, inc.chi2, exc.chi2]
    return ",".join([label] + [repr(float(v)) for v in vals])


TABLE_HEADER = "stock,theta_inc0,theta_exc0,tau0_inc0,tau0_exc0,gamma_inc0,gamma_exc0,chi2_inc0,chi2_exc0"
