"""Minimum modulus of a function on a circle ``|z| = r``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .catalog import FunctionDescriptor, psi_prime_zero_sign
from .errors import DomainError, EvaluationError, RuleInapplicableError

DEFAULT_GRID_N = 2048
DEFAULT_REFINE_TOL = 1e-12


@dataclass(frozen=True)
class CircleMinResult:
    r: float
    theta_star: float
    m_value: float
    method: str


def _check_r(r):
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r must lie in [0, 1), got {r!r}")


def min_modulus(
    desc: FunctionDescriptor,
    r: float,
    grid_n: int = DEFAULT_GRID_N,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> CircleMinResult:
    """Global minimum of ``theta -> |psi(r e^{i theta})|``.

    A uniform angular grid locates the best cell, then a bounded Brent
    (golden-section with parabolic steps) search refines inside the two
    neighbouring cells.  With real coefficients ``|psi|`` is symmetric under
    conjugation and only ``[0, pi]`` is searched.
    """
    _check_r(r)
    if grid_n < 64:
        raise ValueError("grid_n must be at least 64")
    if r == 0.0:
        return CircleMinResult(0.0, 0.0, abs(desc.value_at_zero), "grid_refined")

    if desc.real_coefficients:
        theta = np.linspace(0.0, math.pi, grid_n)
        lo_lim, hi_lim = 0.0, math.pi
    else:
        theta = np.linspace(0.0, 2 * math.pi, grid_n, endpoint=False)
        lo_lim, hi_lim = -math.inf, math.inf

    with np.errstate(all="ignore"):
        vals = np.abs(desc.eval(r * np.exp(1j * theta)))
    bad = ~np.isfinite(vals)
    if bad.any():
        angle = float(theta[np.argmax(bad)])
        raise EvaluationError(f"non-finite |psi| on |z|={r} at theta={angle}", angle)

    i = int(np.argmin(vals))
    step = theta[1] - theta[0]
    lo = max(theta[i] - step, lo_lim)
    hi = min(theta[i] + step, hi_lim)

    def modulus(t):
        return float(abs(desc.eval(np.asarray(r * np.exp(1j * t)))))

    res = minimize_scalar(modulus, bounds=(lo, hi), method="bounded",
                          options={"xatol": refine_tol})
    if res.fun < vals[i]:
        t_star, m = float(res.x), float(res.fun)
    else:
        t_star, m = float(theta[i]), float(vals[i])
    return CircleMinResult(float(r), t_star % (2 * math.pi), m, "grid_refined")


def closed_form_m(desc: FunctionDescriptor, r):
    """``psi(-r)`` when Re psi'(0) > 0, ``psi(r)`` when it is negative.

    Accepts scalar or array ``r``; returns the real part.
    """
    sign = psi_prime_zero_sign(desc)
    if sign == "zero":
        raise RuleInapplicableError(
            "psi'(0) has zero real part; use min_modulus instead"
        )
    r_arr = np.asarray(r, dtype=float)
    if np.any((r_arr < 0) | (r_arr >= 1)):
        raise DomainError("r must lie in [0, 1)")
    point = -r_arr if sign == "positive" else r_arr
    out = np.asarray(np.real(desc.eval(point.astype(complex))))
    return float(out) if out.ndim == 0 else out


def closed_form_result(desc: FunctionDescriptor, r: float) -> CircleMinResult:
    theta = math.pi if psi_prime_zero_sign(desc) == "positive" else 0.0
    return CircleMinResult(float(r), theta, closed_form_m(desc, r), "closed_form")
