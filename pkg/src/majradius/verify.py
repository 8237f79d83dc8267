"""Runtime invariant suite behind ``majradius verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bb
from .catalog import CASE_IDS, make_case, specialized_q
from .circle import closed_form_m, min_modulus
from .majorization import (
    MoebiusParam,
    SampledFunctionPair,
    check_majorization_radius,
    g_prime_from,
    koebe_like,
    schwarz_pick_gap,
)
from .radius import TABLE_DEFAULTS, radius_F, solve_radius
from .sharpness import K_value, dK_ddelta_at_one, sup_h, verify_sharpness


@dataclass
class Check:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": bool(self.passed), "detail": self.detail}


def _disk_sample(rng, n, rmax=0.95):
    rad = rmax * np.sqrt(rng.uniform(0, 1, n))
    return rad * np.exp(2j * math.pi * rng.uniform(0, 1, n))


def catalog_checks(rng) -> list[Check]:
    out = []
    z = _disk_sample(rng, 1000)
    h = 1e-6
    for case in CASE_IDS:
        d = make_case(case)
        w = d.eval(z)
        out.append(Check(f"catalog.{case}.positive_real_part", bool(np.all(w.real > 0)),
                         f"min Re = {w.real.min():.3e}"))
        sym = np.max(np.abs(d.eval(np.conj(z)) - np.conj(w)))
        out.append(Check(f"catalog.{case}.conjugate_symmetry", bool(sym <= 1e-12),
                         f"max dev = {sym:.3e}"))
        zi = z * (0.9 / 0.95)
        fd = (d.eval(zi + h) - d.eval(zi - h)) / (2 * h)
        an = d.deriv(zi)
        err = np.max(np.abs(an - fd) / (1 + np.abs(an)))
        out.append(Check(f"catalog.{case}.derivative", bool(err <= 1e-6), f"max rel err = {err:.3e}"))
        rs = np.linspace(0.001, 0.999, 999)
        q = specialized_q(case, d.params, rs)
        F = radius_F(d, rs)
        agree = bool(np.all(np.sign(q) == np.sign(F)))
        out.append(Check(f"catalog.{case}.q_sign_matches_F", agree, "999 radii"))
    return out


def circle_checks() -> list[Check]:
    out = []
    for case in CASE_IDS:
        d = make_case(case)
        worst = max(abs(min_modulus(d, r).m_value - closed_form_m(d, r))
                    for r in np.arange(1, 10) / 10)
        out.append(Check(f"circle.{case}.closed_form_agreement", bool(worst <= 1e-8),
                         f"max |grid - closed| = {worst:.3e}"))
    return out


def bb_checks(rng) -> list[Check]:
    out = []
    cfg = bb.QuadratureConfig()
    z = _disk_sample(rng, 20, 0.9)
    for case in ("half_plane_alpha", "exponential"):
        phi = make_case(case)
        k = bb.kphi(phi, z, cfg)
        kp = bb.kphi_prime(phi, z, cfg)
        psi = bb.psi_from_phi(phi, z, cfg)
        ext = np.max(np.abs(z * kp / k - psi))
        out.append(Check(f"bb.{case}.extremal_identity", bool(ext <= 1e-8), f"{ext:.3e}"))
        res = max(bb.bb_residual(phi, lambda w: bb.psi_from_phi(phi, w, cfg), zz) for zz in z)
        out.append(Check(f"bb.{case}.residual", bool(res <= 1e-6), f"{res:.3e}"))
        out.append(Check(f"bb.{case}.positive_real_part", bool(np.all(psi.real > 0)),
                         f"min Re = {psi.real.min():.3e}"))
    return out


def radius_checks() -> list[Check]:
    out = []
    for case, params in TABLE_DEFAULTS:
        d = make_case(case, **params)
        roots = [solve_radius(d, m_source=s, with_second_root=False).r_psi
                 for s in ("closed_form", "grid", "specialized")]
        spread = max(roots) - min(roots)
        out.append(Check(f"radius.{case}{params}.route_agreement", bool(spread <= 1e-8),
                         f"spread = {spread:.3e}"))
    r = solve_radius(make_case("half_plane_alpha", alpha=0.0)).r_psi
    err = abs(r - (2 - math.sqrt(3)))
    out.append(Check("radius.half_plane_constant", bool(err <= 1e-9), f"|r - (2-sqrt3)| = {err:.3e}"))
    rj = solve_radius(make_case("janowski", D=1.0, E=-1.0)).r_psi
    out.append(Check("radius.janowski_matches_half_plane", bool(abs(rj - r) <= 1e-12),
                     f"{abs(rj - r):.3e}"))
    return out


def sharpness_checks(rng) -> list[Check]:
    out = []
    for case, params in TABLE_DEFAULTS:
        d = make_case(case, **params)
        res = solve_radius(d)
        rep = verify_sharpness(d, res)
        out.append(Check(f"sharpness.{case}{params}.verdict", rep.verdict,
                         f"r_psi = {res.r_psi:.12g}"))
    r = rng.uniform(0.01, 0.99, 100)
    ratio = rng.uniform(0.01, 10, 100)
    dev = float(np.max(np.abs(K_value(1.0, r, ratio) - 1)))
    out.append(Check("sharpness.K_at_one", dev <= 1e-15, f"{dev:.3e}"))
    mismatches = sign_mismatches = 0
    for k in range(100):
        case = CASE_IDS[k % len(CASE_IDS)]
        d = make_case(case)
        rr = float(rng.uniform(0.02, 0.98))
        ok_h = sup_h(rr, min_modulus(d, rr).m_value)[1] <= 1 + 1e-12
        ok_F = radius_F(d, rr) >= 0
        mismatches += ok_h != ok_F
        sign_dk = np.sign(dK_ddelta_at_one(rr, closed_form_m(d, rr)))
        # dK/ddelta at 1 equals F / (m (1 + r)^2)
        sign_mismatches += sign_dk != np.sign(radius_F(d, rr))
    out.append(Check("sharpness.h_F_equivalence", mismatches == 0,
                     f"{mismatches} mismatches in 100 pairs"))
    out.append(Check("sharpness.dK_sign_matches_F", sign_mismatches == 0,
                     f"{sign_mismatches} mismatches in 100 pairs"))
    return out


def majorization_checks(rng, n_angles: int = 4096) -> list[Check]:
    out = []
    z = _disk_sample(rng, 1000, 0.99)
    deltas = rng.uniform(-1, 1, 1000)
    gaps = np.array([schwarz_pick_gap(MoebiusParam(float(dl)), zz) for dl, zz in zip(deltas, z)])
    worst = float(np.max(np.abs(gaps)))
    out.append(Check("majorization.schwarz_pick_equality", worst <= 1e-12, f"{worst:.3e}"))
    f = koebe_like()
    h = 1e-5
    worst = 0.0
    for dl, zz in zip(deltas[:50], z[:50] * 0.9):
        pair = SampledFunctionPair(f, MoebiusParam(float(dl)))
        an = g_prime_from(pair, zz)
        fd = (pair.g_eval(zz + h) - pair.g_eval(zz - h)) / (2 * h)
        worst = max(worst, abs(an - complex(fd)) / (1 + abs(an)))
    out.append(Check("majorization.product_rule", worst <= 1e-6, f"{worst:.3e}"))
    d = make_case("half_plane_alpha", alpha=0.0)
    res = solve_radius(d)
    holds = all(check_majorization_radius(SampledFunctionPair(f, MoebiusParam(float(dl))),
                                          res.r_psi, n_angles).holds
                for dl in np.linspace(-1, 1, 41))
    out.append(Check("majorization.extremal_holds_at_radius", holds, f"r = {res.r_psi:.12g}"))
    return out


def run_all(seed: int = 20240101, n_angles: int = 4096) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    checks += catalog_checks(rng)
    checks += circle_checks()
    checks += bb_checks(rng)
    checks += radius_checks()
    checks += sharpness_checks(rng)
    checks += majorization_checks(rng, n_angles)
    return checks
