
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majradius.catalog import make_case
from majradius.errors import DomainError, SingularityError
from majradius.majorization import (
    BoundedFactor,
    MoebiusParam,
    SampledFunctionPair,
    check_majorization_radius,
    g_prime_from,
    koebe_like,
    schwarz_pick_gap,
    z_over_one_plus_z,
)
from majradius.radius import solve_radius
from majradius.sharpness import best_delta

from conftest import HALF_PLANE_RADIUS, disk_points


def test_schwarz_pick_examples():
    assert schwarz_pick_gap(MoebiusParam(0.0), 0.3) == pytest.approx(0, abs=1e-15)
    assert schwarz_pick_gap(MoebiusParam(1.0), 0.4 + 0.2j) == 0
    assert schwarz_pick_gap(MoebiusParam(0.5), 0.3j) == pytest.approx(0, abs=1e-12)


def test_schwarz_pick_random_automorphisms(rng):
    z = disk_points(rng, 1000, 0.99)
    for delta in rng.uniform(-1, 1, 20):
        assert np.max(np.abs(schwarz_pick_gap(MoebiusParam(float(delta)), z))) <= 1e-12


def test_schwarz_pick_blaschke_product(rng):
    # Phi = z * Moebius is a self-map but not an automorphism: gap >= 0
    m = MoebiusParam(0.4)
    phi = BoundedFactor(lambda z: z * m(z), lambda z: m(z) + z * m.derivative(z))
    z = disk_points(rng, 1000, 0.99)
    gap = (1 - np.abs(phi(z)) ** 2) / (1 - np.abs(z) ** 2) - np.abs(phi.derivative(z))
    assert gap.min() >= -1e-12


def test_moebius_domain():
    with pytest.raises(DomainError):
        MoebiusParam(1.5)
    with pytest.raises(DomainError):
        schwarz_pick_gap(MoebiusParam(0.2), 1.0)


def test_g_prime_examples():
    f = z_over_one_plus_z()
    z = 0.3 - 0.2j
    assert g_prime_from(SampledFunctionPair(f, MoebiusParam(1.0)), z) == pytest.approx(f.derivative(z))
    assert g_prime_from(SampledFunctionPair(koebe_like(), MoebiusParam(0.0)), 0) == 0
    # g = z f: f(0.2) + 0.2 f'(0.2) = 1/6 + 0.2/1.44
    assert g_prime_from(SampledFunctionPair(f, MoebiusParam(0.0)), 0.2) == pytest.approx(
        0.3055555555555556, abs=1e-15)


@settings(max_examples=80, deadline=None)
@given(delta=st.floats(-1, 1), x=st.floats(-0.6, 0.6), y=st.floats(-0.6, 0.6))
def test_product_rule_vs_finite_difference(delta, x, y):
    pair = SampledFunctionPair(koebe_like(), MoebiusParam(delta))
    z, h = complex(x, y), 1e-5
    an = g_prime_from(pair, z)
    fd = (pair.g_eval(z + h) - pair.g_eval(z - h)) / (2 * h)
    assert abs(an - complex(fd)) / (1 + abs(an)) <= 1e-6


@settings(max_examples=40, deadline=None)
@given(delta=st.floats(-1, 1))
def test_premise_holds_for_moebius(delta):
    f = koebe_like()
    rng = np.random.default_rng(0)
    z = disk_points(rng, 500, 0.99)
    pair = SampledFunctionPair(f, MoebiusParam(delta))
    assert np.all(np.abs(pair.g_eval(z)) <= np.abs(f.eval(z)) * (1 + 1e-12))


def test_identity_factor_ratio_one():
    rep = check_majorization_radius(SampledFunctionPair(make_case("sine"), MoebiusParam(1.0)), 0.7)
    assert rep.holds
    assert rep.worst_ratio == pytest.approx(1.0, abs=1e-15)


def test_z_over_one_plus_z_at_half_plane_radius():
    pair = SampledFunctionPair(z_over_one_plus_z(), MoebiusParam(0.0))
    assert check_majorization_radius(pair, HALF_PLANE_RADIUS).holds


def test_z_over_one_plus_z_own_radius_is_one_third():
    # z f'/f = 1/(1+z): m(r) = 1/(1+r) and (1 - r^2)/(1 + r) - 2 r = 1 - 3 r
    f = z_over_one_plus_z()
    for delta in np.linspace(-1, 1, 81):
        assert check_majorization_radius(SampledFunctionPair(f, MoebiusParam(delta)), 1 / 3 - 1e-3).holds
    fails = [check_majorization_radius(SampledFunctionPair(f, MoebiusParam(d)), 1 / 3 + 0.05).holds
             for d in np.linspace(0.9, 0.999, 100)]
    assert not all(fails)


def test_extremal_consistency_with_sharpness():
    desc = make_case("half_plane_alpha", alpha=0)
    res = solve_radius(desc)
    f = koebe_like()
    for delta in np.linspace(-1, 1, 41):
        assert check_majorization_radius(SampledFunctionPair(f, MoebiusParam(delta)), res.r_psi).holds
    r = res.r_psi + 0.05
    delta, k = best_delta(r, r / desc(-r).real)
    rep = check_majorization_radius(SampledFunctionPair(f, MoebiusParam(delta)), r)
    assert not rep.holds
    assert rep.worst_angle == pytest.approx(0.0, abs=1e-12)
    assert rep.worst_ratio == pytest.approx(k, rel=1e-12)


def test_fails_at_theta_zero_for_delta_near_one():
    r = HALF_PLANE_RADIUS + 0.05
    rep = check_majorization_radius(SampledFunctionPair(koebe_like(), MoebiusParam(0.999)), r)
    assert not rep.holds and rep.worst_angle == 0.0


def test_premise_violation_detected():
    wild = BoundedFactor(lambda z: 2 + 0 * z, lambda z: 0 * z)
    rep = check_majorization_radius(SampledFunctionPair(koebe_like(), wild), 0.2)
    assert not rep.premise_ok and not rep.holds


def test_degenerate_f_prime():
    f = koebe_like()
    # f'(z) = (1 - z)/(1 + z)^3 never vanishes in |z| < 1; use a custom with f'(0.5) = 0
    from majradius.catalog import custom
    g = custom(lambda z: z - z * z, lambda z: 1 - 2 * z, real_coefficients=True)
    with pytest.raises(SingularityError):
        check_majorization_radius(SampledFunctionPair(g, MoebiusParam(0.3)), 0.5, n_angles=64)
    with pytest.raises(DomainError):
        check_majorization_radius(SampledFunctionPair(f, MoebiusParam(0.3)), 1.0)
