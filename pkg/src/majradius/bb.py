"""Briot-Bouquet solutions from the explicit integral representation.

For a generator ``phi`` with ``phi(0) = 1``::

    q(z)   = z * exp( int_0^z (phi(t) - 1) / t dt )
    k'(z)  = q(z) / z
    k(z)   = int_0^z q(t) / t dt
    psi(z) = q(z) / k(z)

``psi`` solves ``psi + z psi' / psi = phi`` and ``k`` solves
``1 + z k'' / k' = phi`` with ``k(0) = k'(0) - 1 = 0``.

Every integral runs along the radial segment ``t = z s``, ``s in [0, 1]``,
with Gauss-Legendre nodes doubled until two successive estimates agree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .catalog import FunctionDescriptor, custom
from .errors import DomainError, QuadratureError, SingularityError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadratureConfig:
    base_nodes: int = 64
    max_doublings: int = 6
    tol: float = 1e-10

    def __post_init__(self):
        if self.base_nodes < 16:
            raise ValueError("base_nodes must be >= 16")
        if self.max_doublings < 1:
            raise ValueError("max_doublings must be >= 1")
        if not self.tol > 0:
            raise ValueError("tol must be positive")


@lru_cache(maxsize=None)
def unit_gauss(n: int):
    """Gauss-Legendre nodes and weights on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    s = 0.5 * (x + 1.0)
    s.setflags(write=False)
    w = 0.5 * w
    w.setflags(write=False)
    return s, w


def _doubling(rule, cfg: QuadratureConfig, what: str):
    """Apply ``rule(n)`` for n = base, 2 base, ... until successive values agree."""
    n = cfg.base_nodes
    prev = rule(n)
    history = [prev]
    for _ in range(cfg.max_doublings):
        n *= 2
        cur = rule(n)
        history.append(cur)
        if np.all(np.abs(cur - prev) < cfg.tol):
            return cur
        prev = cur
    raise QuadratureError(
        f"{what}: no convergence to {cfg.tol} after {cfg.max_doublings} doublings",
        [np.ravel(h)[np.argmax(np.abs(np.ravel(history[-1] - history[-2])))]
         for h in history[-2:]],
    )


def _as_disk_array(z):
    arr = np.asarray(z, dtype=complex)
    if np.any(np.abs(arr) >= 1.0):
        raise DomainError("|z| must be < 1")
    return arr


def log_kprime(phi: FunctionDescriptor, z, cfg: QuadratureConfig):
    """``int_0^1 (phi(z s) - 1) / s ds``, i.e. ``log(q(z) / z)``.

    The integrand tends to ``z phi'(0)`` as ``s -> 0``; Gauss nodes never
    reach the endpoint, but an exact zero node would use that limit.
    """
    z = np.asarray(z, dtype=complex)
    slope = z * phi.deriv(np.zeros_like(z))

    def rule(n):
        s, w = unit_gauss(n)
        zs = z[..., None] * s
        integrand = (phi.eval(zs) - 1.0) / s
        integrand = np.where(s == 0, slope[..., None], integrand)
        return integrand @ w

    return _doubling(rule, cfg, "q integral")


def _out(z_in, value):
    return complex(value) if np.ndim(z_in) == 0 else value


def q_of(phi: FunctionDescriptor, z, cfg: QuadratureConfig = QuadratureConfig()):
    z_arr = _as_disk_array(z)
    return _out(z, z_arr * np.exp(log_kprime(phi, z_arr, cfg)))


def kphi_prime(phi: FunctionDescriptor, z, cfg: QuadratureConfig = QuadratureConfig()):
    z_arr = _as_disk_array(z)
    q = z_arr * np.exp(log_kprime(phi, z_arr, cfg))
    nz = z_arr != 0
    out = np.ones_like(z_arr)
    out[nz] = q[nz] / z_arr[nz]
    return _out(z, out)


def kphi(phi: FunctionDescriptor, z, cfg: QuadratureConfig = QuadratureConfig()):
    """``int_0^1 q(z s) / s ds``; the integrand tends to ``z`` as ``s -> 0``."""
    z_arr = _as_disk_array(z)

    def rule(n):
        s, w = unit_gauss(n)
        zs = z_arr[..., None] * s
        integrand = zs * np.exp(log_kprime(phi, zs, cfg)) / s
        integrand = np.where(s == 0, z_arr[..., None], integrand)
        return integrand @ w

    return _out(z, _doubling(rule, cfg, "k integral"))


def psi_from_phi(phi: FunctionDescriptor, z, cfg: QuadratureConfig = QuadratureConfig()):
    z_arr = _as_disk_array(z)
    q = z_arr * np.exp(log_kprime(phi, z_arr, cfg))
    den = np.asarray(kphi(phi, z_arr, cfg))
    nz = z_arr != 0
    if np.any(np.abs(den[nz]) < 1e-14):
        raise SingularityError("denominator of psi vanished")
    out = np.ones_like(z_arr)
    out[nz] = q[nz] / den[nz]
    return _out(z, out)


def richardson_derivative(f, z, h: float = 1e-5):
    """Central difference with one Richardson step, error O(h**4)."""
    d1 = (f(z + h) - f(z - h)) / (2 * h)
    d2 = (f(z + h / 2) - f(z - h / 2)) / h
    return (4 * d2 - d1) / 3


def bb_residual(phi: FunctionDescriptor, psi_eval, z: complex, fd_step: float = 1e-5) -> float:
    """``|psi(z) + z psi'(z) / psi(z) - phi(z)|`` with a finite-difference psi'."""
    z = complex(z)
    if abs(z) >= 1 - fd_step:
        raise DomainError("need |z| < 1 - fd_step")
    p = complex(psi_eval(z))
    if abs(p) < 1e-14:
        raise SingularityError(f"psi vanishes near z={z}")
    dp = complex(richardson_derivative(psi_eval, z, fd_step))
    return abs(p + z * dp / p - complex(phi(z)))


@dataclass(frozen=True)
class BBSolution:
    """Numerically realized ``q``, ``psi``, ``k`` and ``k'`` for one generator."""

    phi: FunctionDescriptor
    cfg: QuadratureConfig = field(default_factory=QuadratureConfig)

    def __post_init__(self):
        if abs(self.phi.value_at_zero - 1) > 1e-12:
            raise DomainError("generator must satisfy phi(0) = 1")

    def q_eval(self, z):
        return q_of(self.phi, z, self.cfg)

    def psi_eval(self, z):
        return psi_from_phi(self.phi, z, self.cfg)

    def kphi_eval(self, z):
        return kphi(self.phi, z, self.cfg)

    def kphi_prime_eval(self, z):
        return kphi_prime(self.phi, z, self.cfg)

    def residual(self, z, fd_step: float = 1e-5) -> float:
        return bb_residual(self.phi, self.psi_eval, z, fd_step)

    def psi_descriptor(self) -> FunctionDescriptor:
        """``psi`` as a descriptor; its derivative is a finite difference."""
        return custom(
            self.psi_eval,
            lambda z: richardson_derivative(self.psi_eval, z),
            real_coefficients=self.phi.real_coefficients,
            label=f"bb[{self.phi.case_id}]",
            params=dict(self.phi.params),
        )
