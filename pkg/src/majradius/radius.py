"""Majorization radius: smallest root of ``F(r) = (1 - r^2) m(r) - 2 r``."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .catalog import FunctionDescriptor, make_case, specialized_q
from .circle import DEFAULT_GRID_N, DEFAULT_REFINE_TOL, closed_form_m, min_modulus
from .errors import DomainError, NoRootError

log = logging.getLogger(__name__)

M_SOURCES = ("closed_form", "grid", "specialized")
SCAN_N = 512
DEFAULT_TOL = 1e-12
XTOL = 1e-14
# closed-form and grid m(r) may differ by this much before the grid wins
AGREEMENT_TOL = 1e-8

# (ii) appears twice; order follows the catalog
TABLE_DEFAULTS = (
    ("janowski", {"D": 0.5, "E": -0.5}),
    ("half_plane_alpha", {"alpha": 0.0}),
    ("half_plane_alpha", {"alpha": 0.5}),
    ("strong_power", {"eta": 0.5}),
    ("root_lemniscate", {}),
    ("ab_power", {"a": 2.0, "b": 1.0}),
    ("exponential", {}),
    ("lune", {}),
    ("sigmoid", {}),
    ("sine", {}),
)


@dataclass
class RadiusResult:
    case_id: str
    params: dict
    r_psi: float
    residual: float
    bracket: tuple
    r2: float
    m_source: str
    iterations: int
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "case": self.case_id,
            "params": dict(self.params),
            "r_psi": self.r_psi,
            "residual": self.residual,
            "bracket": list(self.bracket),
            "r2": self.r2,
            "m_source": self.m_source,
            "iterations": self.iterations,
            "warnings": list(self.warnings),
        }


def radius_function(
    desc: FunctionDescriptor,
    m_source: str = "closed_form",
    grid_n: int = DEFAULT_GRID_N,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> Callable:
    """Return ``r -> F(r)`` (vectorized over ``r``) for the chosen m(r) route.

    ``"specialized"`` returns the printed case-specific ``q(r)`` instead,
    which has the same sign as ``F`` but is not equal to it in general.
    """
    if m_source == "closed_form":
        def F(r):
            r = np.asarray(r, dtype=float)
            return (1 - r * r) * closed_form_m(desc, r) - 2 * r
    elif m_source == "grid":
        def F(r):
            r_arr = np.asarray(r, dtype=float)
            m = np.array([min_modulus(desc, float(x), grid_n, refine_tol).m_value
                          for x in np.ravel(r_arr)]).reshape(r_arr.shape)
            return (1 - r_arr * r_arr) * m - 2 * r_arr
    elif m_source == "specialized":
        def F(r):
            return specialized_q(desc.case_id, desc.params, r)
    else:
        raise ValueError(f"m_source must be one of {M_SOURCES}, got {m_source!r}")

    def scalar_or_array(r):
        out = F(r)
        return float(out) if np.ndim(out) == 0 else out

    return scalar_or_array


def radius_F(desc: FunctionDescriptor, r, m_source: str = "closed_form", **kw):
    r_arr = np.asarray(r, dtype=float)
    if np.any((r_arr < 0) | (r_arr >= 1)):
        raise DomainError("r must lie in [0, 1)")
    return radius_function(desc, m_source, **kw)(r)


def _refine(F, lo, hi, flo, fhi):
    if flo == 0.0:
        return lo, 0
    if fhi == 0.0:
        return hi, 0
    # brentq: bisection with secant / inverse-quadratic steps, bracket kept
    root, info = brentq(F, lo, hi, xtol=XTOL, rtol=4 * np.finfo(float).eps,
                        maxiter=200, full_output=True)
    return root, info.iterations


def _scan_points(lo: float, n: int) -> np.ndarray:
    return np.linspace(lo, 1.0, n + 2)[1:-1]


def solve_radius(
    desc: FunctionDescriptor,
    tol: float = DEFAULT_TOL,
    m_source: str = "closed_form",
    grid_n: int = DEFAULT_GRID_N,
    refine_tol: float = DEFAULT_REFINE_TOL,
    scan_n: int = SCAN_N,
    with_second_root: bool = True,
) -> RadiusResult:
    """Smallest root of ``F`` in (0, 1), found by a sign scan and bracketed refinement.

    The smallest-root guarantee is relative to the ``scan_n``-point grid.
    """
    if tol < 1e-14:
        raise ValueError("tol must be >= 1e-14")
    F = radius_function(desc, m_source, grid_n, refine_tol)
    rs = np.concatenate([[0.0], _scan_points(0.0, scan_n)])
    vals = np.asarray(F(rs))
    if not vals[0] > 0:
        raise NoRootError(f"F(0) = {vals[0]} is not positive")
    neg = np.nonzero(vals <= 0)[0]
    if neg.size == 0:
        raise NoRootError(f"F has no sign change on the {scan_n}-point scan of (0, 1)")
    k = int(neg[0])
    lo, hi = float(rs[k - 1]), float(rs[k])
    root, iters = _refine(F, lo, hi, float(vals[k - 1]), float(vals[k]))
    residual = float(F(root))
    if m_source == "specialized":
        # report the residual of the generic radius function
        residual = float(radius_function(desc, "closed_form")(root))
    result = RadiusResult(
        case_id=desc.case_id,
        params=dict(desc.params),
        r_psi=float(root),
        residual=residual,
        bracket=(lo, hi),
        r2=1.0,
        m_source=m_source,
        iterations=iters,
    )
    if abs(residual) > tol:
        result.warnings.append(f"|F(r_psi)| = {abs(residual):.3e} exceeds tol {tol:.1e}")
    if m_source == "closed_form":
        _cross_check(desc, result, tol, grid_n, refine_tol, scan_n)
    if with_second_root:
        result.r2 = second_root(desc, result.r_psi, result.m_source, grid_n, refine_tol, scan_n)
    return result


def _cross_check(desc, result, tol, grid_n, refine_tol, scan_n):
    grid_m = min_modulus(desc, result.r_psi, grid_n, refine_tol).m_value
    closed_m = closed_form_m(desc, result.r_psi)
    if closed_m > grid_m + AGREEMENT_TOL:
        msg = (f"closed-form m({result.r_psi:.6g}) = {closed_m:.12g} exceeds grid "
               f"minimum {grid_m:.12g}; re-solved with grid m(r)")
        log.warning(msg)
        grid = solve_radius(desc, tol, "grid", grid_n, refine_tol, scan_n,
                            with_second_root=False)
        result.r_psi, result.residual = grid.r_psi, grid.residual
        result.bracket, result.iterations = grid.bracket, grid.iterations
        result.m_source = "grid"
        result.warnings.append(msg)


def second_root(
    desc: FunctionDescriptor,
    r_psi: float,
    m_source: str = "closed_form",
    grid_n: int = DEFAULT_GRID_N,
    refine_tol: float = DEFAULT_REFINE_TOL,
    scan_n: int = SCAN_N,
) -> float:
    """First negative-to-positive crossing of ``F`` after ``r_psi``, else 1."""
    F = radius_function(desc, m_source, grid_n, refine_tol)
    rs = _scan_points(r_psi, scan_n)
    vals = np.asarray(F(rs))
    pos = np.nonzero(vals > 0)[0]
    if pos.size == 0:
        return 1.0
    k = int(pos[0])
    if k == 0:
        lo, flo = r_psi, float(F(r_psi))
        if flo > 0:
            return 1.0
    else:
        lo, flo = float(rs[k - 1]), float(vals[k - 1])
    root, _ = _refine(F, lo, float(rs[k]), flo, float(vals[k]))
    return float(root)


@dataclass
class TableRow:
    result: RadiusResult
    grid_root: float
    specialized_root: float
    sharp_verified: bool | None = None
    notes: list = field(default_factory=list)

    @property
    def route_spread(self) -> float:
        roots = (self.result.r_psi, self.grid_root, self.specialized_root)
        return max(roots) - min(roots)


def radius_table(
    defaults=TABLE_DEFAULTS,
    tol: float = DEFAULT_TOL,
    grid_n: int = DEFAULT_GRID_N,
    refine_tol: float = DEFAULT_REFINE_TOL,
    verify: bool = True,
    n_samples: int = 10,
) -> list[TableRow]:
    """Solve every default case by closed-form m, grid m and the printed q(r)."""
    from .sharpness import verify_sharpness

    rows = []
    for case, params in defaults:
        desc = make_case(case, **params)
        main = solve_radius(desc, tol, "closed_form", grid_n, refine_tol)
        grid = solve_radius(desc, tol, "grid", grid_n, refine_tol, with_second_root=False)
        spec = solve_radius(desc, tol, "specialized", with_second_root=False)
        row = TableRow(main, grid.r_psi, spec.r_psi)
        if abs(desc.value_at_zero - 1) > 1e-12:
            row.notes.append(f"psi(0) = {desc.value_at_zero.real:.12g} != 1")
        if verify:
            row.sharp_verified = verify_sharpness(desc, main, n_samples).verdict
        rows.append(row)
    return rows

