import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majradius.catalog import (
    CASE_IDS,
    custom,
    eval_psi,
    eval_psi_derivative,
    make_case,
    psi_prime_zero_sign,
    specialized_q,
)
from majradius.errors import DomainError, ParameterError

from conftest import HALF_PLANE_RADIUS, disk_points


def test_half_plane_normalized():
    assert eval_psi(make_case("half_plane_alpha", alpha=0), 0) == 1


def test_janowski_substitution():
    d = make_case("janowski", D=1, E=-1)
    assert eval_psi(d, -0.5) == pytest.approx(1 / 3, abs=1e-15)


def test_exponential_matches_series():
    # 20-term power series of exp at 0.5
    assert eval_psi(make_case("exponential"), 0.5) == pytest.approx(1.6487212707001278, rel=1e-15)


@pytest.mark.parametrize("case,params,expected", [
    ("exponential", {}, 1.0),
    ("sine", {}, 1.0),
    ("janowski", {"D": 1, "E": -1}, 2.0),
])
def test_derivative_at_zero(case, params, expected):
    d = make_case(case, **params)
    assert eval_psi_derivative(d, 0) == pytest.approx(expected, abs=1e-15)


def test_janowski_derivative_finite_difference_oracle():
    h = 1e-6
    f = lambda z: (1 + z) / (1 - z)
    assert eval_psi_derivative(make_case("janowski", D=1, E=-1), 0) == pytest.approx(
        (f(h) - f(-h)) / (2 * h), rel=1e-9)


def test_specialized_q_examples():
    assert specialized_q("half_plane_alpha", {"alpha": 0}, HALF_PLANE_RADIUS) == pytest.approx(0, abs=1e-15)
    assert specialized_q("half_plane_alpha", {"alpha": 0}, 0.0) == 1.0
    assert specialized_q("exponential", {}, 0.5) == pytest.approx(-0.8987212707001282, abs=1e-14)


def test_sign_rule():
    assert psi_prime_zero_sign(make_case("janowski", D=1, E=-1)) == "positive"
    assert psi_prime_zero_sign(make_case("sine")) == "positive"
    reflected = custom(lambda z: np.exp(-z), lambda z: -np.exp(-z), real_coefficients=True)
    assert psi_prime_zero_sign(reflected) == "negative"
    flat = custom(lambda z: 1 + z * z, lambda z: 2 * z)
    assert psi_prime_zero_sign(flat) == "zero"


def test_aliases_and_roman_numerals():
    assert make_case("exp").case_id == "exponential"
    assert make_case("ii", alpha=0.25).params["alpha"] == 0.25
    assert make_case("ix").case_id == "sine"


@pytest.mark.parametrize("case,params", [
    ("janowski", {"D": -0.5, "E": 0.5}),
    ("janowski", {"D": 0.5, "E": 0.5}),
    ("janowski", {"D": 1.5, "E": 0}),
    ("half_plane_alpha", {"alpha": 1.0}),
    ("half_plane_alpha", {"alpha": -0.1}),
    ("strong_power", {"eta": 0.0}),
    ("strong_power", {"eta": 1.2}),
    ("ab_power", {"a": 0.5}),
    ("ab_power", {"b": 0.4}),
    ("exponential", {"alpha": 0.1}),
])
def test_parameter_domain_rejected(case, params):
    with pytest.raises(ParameterError):
        make_case(case, **params)


def test_unknown_case():
    with pytest.raises(ParameterError, match="janowski"):
        make_case("nosuch")


def test_outside_disk():
    with pytest.raises(DomainError):
        eval_psi(make_case("sine"), 1.0)
    with pytest.raises(DomainError):
        specialized_q("sine", {}, 1.0)


def test_ab_power_value_at_zero_not_normalized():
    d = make_case("ab_power", a=2, b=4)
    assert d.value_at_zero == pytest.approx(2.0)
    assert make_case("ab_power").value_at_zero == 1


def test_catalog_invariants(catalog_case, rng):
    d = catalog_case
    z = disk_points(rng, 1000)
    w = d.eval(z)
    assert d(0) == d.value_at_zero == 1
    assert np.all(w.real > 0)
    np.testing.assert_allclose(d.eval(np.conj(z)), np.conj(w), rtol=0, atol=1e-13)
    h = 1e-6
    zi = z * 0.9 / 0.95
    an = d.deriv(zi)
    fd = (d.eval(zi + h) - d.eval(zi - h)) / (2 * h)
    assert np.max(np.abs(an - fd) / (1 + np.abs(an))) <= 1e-6


# positive factor c with specialized_q = c * F for the closed-form F
CLEARING = {
    "exponential": lambda r: np.exp(r),
    "sigmoid": lambda r: (1 + np.exp(r)) / 2,
}


@pytest.mark.parametrize("case", CASE_IDS)
def test_specialized_q_is_positive_multiple_of_F(case):
    d = make_case(case)
    r = np.linspace(0.0, 0.999, 2000)
    F = (1 - r * r) * d.eval(-r.astype(complex)).real - 2 * r
    c = CLEARING.get(case, lambda r: np.ones_like(r))(r)
    np.testing.assert_allclose(specialized_q(case, d.params, r), c * F, atol=1e-13)


@settings(max_examples=60, deadline=None)
@given(alpha=st.floats(0, 0.999), r=st.floats(0, 0.999))
def test_half_plane_q_equals_F_exactly(alpha, r):
    d = make_case("half_plane_alpha", alpha=alpha)
    F = (1 - r * r) * d(-r).real - 2 * r
    assert specialized_q("half_plane_alpha", {"alpha": alpha}, r) == pytest.approx(F, abs=1e-13)


@settings(max_examples=60, deadline=None)
@given(D=st.floats(-0.99, 1.0), gap=st.floats(0.01, 1.0), x=st.floats(-0.9, 0.9), y=st.floats(-0.4, 0.4))
def test_janowski_closed_form_derivative(D, gap, x, y):
    E = max(-1.0, D - gap)
    if not E < D:
        return
    d = make_case("janowski", D=D, E=E)
    z = complex(x, y)
    assert d.derivative(z) == pytest.approx((D - E) / (1 + E * z) ** 2, rel=1e-12)


def test_descriptor_is_immutable():
    d = make_case("sine")
    with pytest.raises(Exception):
        d.case_id = "lune"
    with pytest.raises(TypeError):
        d.params["x"] = 1.0


def test_lune_and_lemniscate_at_minus_r():
    r = 0.4
    assert make_case("lune")(-r).real == pytest.approx(math.sqrt(1 + r * r) - r)
    c = 2 * (math.sqrt(2) - 1)
    expected = math.sqrt(2) - (math.sqrt(2) - 1) * math.sqrt((1 + r) / (1 - c * r))
    assert make_case("root_lemniscate")(-r).real == pytest.approx(expected, rel=1e-14)
