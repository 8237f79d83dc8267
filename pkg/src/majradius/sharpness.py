"""Numerical check that the radius is both valid and best possible.

Inside the radius the bound ``h(beta, r) = beta + (1 - beta^2) r / ((1 - r^2) m(r))``
never exceeds one.  Beyond it the Moebius factor ``(z + delta) / (1 + delta z)``
applied to the extremal function gives ``g'(r) / f'(r) = K(delta, r) > 1`` for
some ``delta`` close to one.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .catalog import FunctionDescriptor, psi_prime_zero_sign
from .circle import closed_form_m
from .errors import DomainError, RuleInapplicableError
from .radius import RadiusResult, radius_function

INSIDE_TOL = 1e-12
GRID_POINTS = 1000


def h_value(beta, r, m_value):
    if np.any((np.asarray(beta) < 0) | (np.asarray(beta) > 1)):
        raise DomainError("beta must lie in [0, 1]")
    if not (0 < r < 1) or not m_value > 0:
        raise DomainError("need 0 < r < 1 and m > 0")
    return beta + (1 - beta * beta) / (1 - r * r) * (r / m_value)


def K_value(delta, r, ratio):
    """``(r + delta) / (1 + delta r) + (1 - delta^2) / (1 + delta r)^2 * ratio``.

    ``ratio`` is ``k(r) / k'(r)`` for the extremal function.
    """
    den = 1 + np.asarray(delta) * r
    if np.any(den == 0):
        raise DomainError("1 + delta r vanishes")
    return (r + delta) / den + (1 - delta * delta) / den**2 * ratio


def dK_ddelta_at_one(r, psi_at_minus_r):
    return 2 / (1 + r) ** 2 * ((1 - r * r) / 2 - r / psi_at_minus_r)


def _grid_then_refine(fn, lo, hi, n, endpoint=True):
    """Maximize ``fn`` on [lo, hi] (or [lo, hi) without ``endpoint``)."""
    xs = np.linspace(lo, hi, n + 1)
    if not endpoint:
        xs = xs[:-1]
    vals = fn(xs)
    i = int(np.argmax(vals))
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, len(xs) - 1)]
    res = minimize_scalar(lambda x: -fn(x), bounds=(a, b), method="bounded",
                          options={"xatol": 1e-14})
    if -res.fun > vals[i]:
        return float(res.x), float(-res.fun)
    return float(xs[i]), float(vals[i])


def sup_h(r: float, m_value: float) -> tuple[float, float]:
    """``(argmax, max)`` of ``h(., r)`` over ``beta`` in [0, 1]."""
    return _grid_then_refine(lambda b: h_value(np.clip(b, 0, 1), r, m_value),
                             0.0, 1.0, GRID_POINTS)


def best_delta(r: float, ratio: float, lo: float = 0.9) -> tuple[float, float]:
    """``(delta, K)`` maximizing ``K(delta, r)`` over ``delta`` in [lo, 1)."""
    return _grid_then_refine(lambda d: K_value(d, r, ratio), lo, 1.0,
                             GRID_POINTS, endpoint=False)


@dataclass
class InsideCheck:
    r: float
    sup_h: float
    passed: bool


@dataclass
class OutsideCheck:
    r: float
    best_delta: float
    K_max: float
    dK_at_1: float
    passed: bool


@dataclass
class SharpnessReport:
    case_id: str
    params: dict
    r_psi: float
    r2: float
    F_at_root: float
    dK_at_root: float
    inside_checks: list = field(default_factory=list)
    outside_checks: list = field(default_factory=list)
    verdict: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def verify_sharpness(
    desc: FunctionDescriptor,
    result: RadiusResult,
    n_samples: int = 10,
    root_tol: float = 1e-10,
    dk_root_tol: float = 1e-8,
) -> SharpnessReport:
    """Sample radii on both sides of ``r_psi`` and record pass/fail per radius.

    The extremal ratio ``k(r) / k'(r)`` is taken as ``r / psi(-r)``; that needs
    the ``psi'(0) > 0`` branch of the closed-form minimum.
    """
    if psi_prime_zero_sign(desc) != "positive":
        raise RuleInapplicableError("sharpness check needs m(r) = psi(-r), i.e. psi'(0) > 0")
    r_psi, r2 = result.r_psi, result.r2
    F = radius_function(desc, "closed_form")

    def m(r):
        return closed_form_m(desc, r)

    report = SharpnessReport(
        case_id=desc.case_id,
        params=dict(desc.params),
        r_psi=r_psi,
        r2=r2,
        F_at_root=float(F(r_psi)),
        dK_at_root=float(dK_ddelta_at_one(r_psi, m(r_psi))),
    )
    for k in range(1, n_samples + 1):
        r = r_psi * k / n_samples
        _, s = sup_h(r, m(r))
        report.inside_checks.append(InsideCheck(r, s, bool(s <= 1 + INSIDE_TOL)))
    for k in range(1, n_samples + 1):
        r = r_psi + k * (r2 - r_psi) / (n_samples + 1)
        ratio = r / m(r)
        dk = float(dK_ddelta_at_one(r, m(r)))
        d, kmax = best_delta(r, ratio)
        ok = dk < 0 and kmax > 1 and d < 1
        report.outside_checks.append(OutsideCheck(r, d, kmax, dk, bool(ok)))
    report.verdict = bool(
        abs(report.F_at_root) <= root_tol
        and abs(report.dK_at_root) <= dk_root_tol
        and all(c.passed for c in report.inside_checks)
        and all(c.passed for c in report.outside_checks)
    )
    return report
