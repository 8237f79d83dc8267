"""Direct checks of majorization ``g = Phi f`` with bounded analytic ``Phi``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .catalog import FunctionDescriptor, custom
from .errors import DomainError, SingularityError

RATIO_TOL = 1e-10
DEFAULT_ANGLES = 4096


@dataclass(frozen=True)
class MoebiusParam:
    """``Phi(z) = (z + delta) / (1 + delta z)`` for real ``delta`` in [-1, 1]."""

    delta: float

    def __post_init__(self):
        if not -1.0 <= self.delta <= 1.0:
            raise DomainError(f"delta must lie in [-1, 1], got {self.delta}")

    def __call__(self, z):
        d = self.delta
        return (z + d) / (1 + d * z)

    def derivative(self, z):
        d = self.delta
        return (1 - d * d) / (1 + d * z) ** 2


@dataclass(frozen=True)
class BoundedFactor:
    """A user-supplied analytic ``Phi`` with ``|Phi| <= 1`` on the disk."""

    eval: Callable
    deriv: Callable

    def __call__(self, z):
        return self.eval(z)

    def derivative(self, z):
        return self.deriv(z)


@dataclass(frozen=True)
class SampledFunctionPair:
    f: FunctionDescriptor
    phi: MoebiusParam | BoundedFactor

    def g_eval(self, z):
        z = np.asarray(z, dtype=complex)
        return self.phi(z) * self.f.eval(z)

    def g_prime_eval(self, z):
        return g_prime_from(self, z)


def schwarz_pick_gap(phi: MoebiusParam, z) -> float:
    """``(1 - |Phi|^2) / (1 - |z|^2) - |Phi'|``; zero for disk automorphisms."""
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1):
        raise DomainError("|z| must be < 1")
    w = phi(z)
    gap = (1 - np.abs(w) ** 2) / (1 - np.abs(z) ** 2) - np.abs(phi.derivative(z))
    return float(gap) if gap.ndim == 0 else gap


def g_prime_from(pair: SampledFunctionPair, z):
    z_arr = np.asarray(z, dtype=complex)
    out = (pair.phi(z_arr) * pair.f.deriv(z_arr)
           + pair.phi.derivative(z_arr) * pair.f.eval(z_arr))
    return complex(out) if out.ndim == 0 else out


@dataclass
class MajorizationReport:
    r: float
    holds: bool
    worst_ratio: float
    worst_angle: float
    premise_ok: bool

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "holds": self.holds,
            "worst_ratio": self.worst_ratio,
            "worst_angle": self.worst_angle,
            "premise_ok": self.premise_ok,
        }


def check_majorization_radius(
    pair: SampledFunctionPair,
    r: float,
    n_angles: int = DEFAULT_ANGLES,
    premise_samples: int = 256,
    seed: int = 0,
) -> MajorizationReport:
    """Sample ``|g'| / |f'|`` on ``|z| = r``; holds iff the max is <= 1 + 1e-10.

    The premise ``|g| <= |f|`` is first checked on random points of the
    closed disk of radius ``r`` and on the sampled circle.
    """
    if not 0 < r < 1:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    rng = np.random.default_rng(seed)
    rad = r * np.sqrt(rng.uniform(0, 1, premise_samples))
    ang = rng.uniform(0, 2 * math.pi, premise_samples)
    theta = np.linspace(0, 2 * math.pi, n_angles, endpoint=False)
    z = r * np.exp(1j * theta)
    probe = np.concatenate([rad * np.exp(1j * ang), z])
    premise_ok = bool(np.all(np.abs(pair.g_eval(probe))
                             <= np.abs(pair.f.eval(probe)) * (1 + 1e-12) + 1e-300))

    fp = np.abs(pair.f.deriv(z))
    if np.any(fp < 1e-300):
        raise SingularityError(f"f' vanishes on |z| = {r}")
    ratio = np.abs(g_prime_from(pair, z)) / fp
    i = int(np.argmax(ratio))
    worst = float(ratio[i])
    return MajorizationReport(
        r=float(r),
        holds=bool(premise_ok and worst <= 1 + RATIO_TOL),
        worst_ratio=worst,
        worst_angle=float(theta[i]),
        premise_ok=premise_ok,
    )


def koebe_like(sign: int = 1) -> FunctionDescriptor:
    """``z / (1 + s z)^2``: the extremal with ``z f'/f = (1 - s z)/(1 + s z)``."""
    s = float(sign)
    return custom(
        lambda z: z / (1 + s * z) ** 2,
        lambda z: (1 - s * z) / (1 + s * z) ** 3,
        real_coefficients=True,
        label=f"z/(1{'+' if s > 0 else '-'}z)^2",
    )


def z_over_one_plus_z(sign: int = 1) -> FunctionDescriptor:
    """``z / (1 + s z)``."""
    s = float(sign)
    return custom(
        lambda z: z / (1 + s * z),
        lambda z: 1 / (1 + s * z) ** 2,
        real_coefficients=True,
        label=f"z/(1{'+' if s > 0 else '-'}z)",
    )
