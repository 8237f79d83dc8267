"""Catalog of analytic functions on the unit disk.

Each :class:`FunctionDescriptor` bundles a vectorized evaluator, its analytic
derivative and the parameter record it was built from.  All fractional powers
use the principal branch, ``w**eta = exp(eta * Log w)``.

The nine named families and their printed radius functions ``q(r)``:

====================  ==========================================  ============
case id               psi(z)                                      parameters
====================  ==========================================  ============
``janowski``          (1 + D z) / (1 + E z)                       -1<=E<D<=1
``half_plane_alpha``  (1 + (1 - 2 alpha) z) / (1 - z)             0<=alpha<1
``strong_power``      ((1 + z) / (1 - z))**eta                    0<eta<=1
``root_lemniscate``   sqrt2 - (sqrt2-1) sqrt((1-z)/(1+2(sqrt2-1)z))
``ab_power``          (b (1 + z))**(1/a)                          a>=1, b>=1/2
``exponential``       exp(z)
``lune``              z + sqrt(1 + z**2)
``sigmoid``           2 / (1 + exp(-z))
``sine``              1 + sin(z)
====================  ==========================================  ============
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Mapping

import numpy as np

from .errors import DomainError, ParameterError

SQRT2 = math.sqrt(2.0)
LEMNISCATE_C = 2.0 * (SQRT2 - 1.0)

CASE_IDS = (
    "janowski",
    "half_plane_alpha",
    "strong_power",
    "root_lemniscate",
    "ab_power",
    "exponential",
    "lune",
    "sigmoid",
    "sine",
)

ROMAN = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix")

ALIASES = {"exp": "exponential", "half_plane": "half_plane_alpha"}
ALIASES.update(dict(zip(ROMAN, CASE_IDS)))

PARAM_NAMES = {
    "janowski": ("D", "E"),
    "half_plane_alpha": ("alpha",),
    "strong_power": ("eta",),
    "root_lemniscate": (),
    "ab_power": ("a", "b"),
    "exponential": (),
    "lune": (),
    "sigmoid": (),
    "sine": (),
}

DEFAULT_PARAMS = {
    "janowski": {"D": 0.5, "E": -0.5},
    "half_plane_alpha": {"alpha": 0.0},
    "strong_power": {"eta": 0.5},
    "root_lemniscate": {},
    "ab_power": {"a": 2.0, "b": 1.0},
    "exponential": {},
    "lune": {},
    "sigmoid": {},
    "sine": {},
}

Evaluator = Callable[[np.ndarray], np.ndarray]


def _principal_power(w, p):
    return np.exp(p * np.log(w))


@dataclass(frozen=True)
class FunctionDescriptor:
    """An analytic map on the unit disk with its derivative.

    ``eval`` and ``deriv`` take and return complex numpy arrays; use
    :meth:`__call__` / :meth:`derivative` for checked scalar-or-array access.
    """

    case_id: str
    params: Mapping[str, float]
    eval: Evaluator = field(repr=False, compare=False)
    deriv: Evaluator = field(repr=False, compare=False)
    real_coefficients: bool = True
    value_at_zero: complex = 1.0 + 0.0j
    label: str = ""

    def __call__(self, z):
        return _apply(self.eval, z)

    def derivative(self, z):
        return _apply(self.deriv, z)

    @property
    def is_catalog(self) -> bool:
        return self.case_id in CASE_IDS

    def describe(self) -> dict:
        return {"case": self.case_id, "params": dict(self.params)}


def _apply(fn: Evaluator, z):
    arr = np.asarray(z, dtype=complex)
    if np.any(np.abs(arr) >= 1.0):
        raise DomainError(f"|z| must be < 1, got max |z| = {np.max(np.abs(arr))!r}")
    out = fn(arr)
    if arr.ndim == 0:
        return complex(out)
    return out


def canonical_case(case: str) -> str:
    key = case.strip().lower()
    key = ALIASES.get(key, key)
    if key not in CASE_IDS and key != "custom":
        raise ParameterError(
            f"unknown case {case!r}; valid case ids: {', '.join(CASE_IDS)}"
        )
    return key


def validate_params(case_id: str, params: Mapping[str, float]) -> dict:
    """Merge ``params`` over the defaults and check the admissible domain."""
    allowed = PARAM_NAMES[case_id]
    extra = set(params) - set(allowed)
    if extra:
        raise ParameterError(
            f"case {case_id!r} takes parameters {list(allowed) or 'none'}, "
            f"got unexpected {sorted(extra)}"
        )
    p = dict(DEFAULT_PARAMS[case_id])
    p.update({k: float(v) for k, v in params.items()})
    if any(not math.isfinite(v) for v in p.values()):
        raise ParameterError(f"non-finite parameter in {p}")
    if case_id == "janowski" and not (-1.0 <= p["E"] < p["D"] <= 1.0):
        raise ParameterError(f"janowski needs -1 <= E < D <= 1, got D={p['D']}, E={p['E']}")
    if case_id == "half_plane_alpha" and not (0.0 <= p["alpha"] < 1.0):
        raise ParameterError(f"half_plane_alpha needs 0 <= alpha < 1, got {p['alpha']}")
    if case_id == "strong_power" and not (0.0 < p["eta"] <= 1.0):
        raise ParameterError(f"strong_power needs 0 < eta <= 1, got {p['eta']}")
    if case_id == "ab_power" and not (p["a"] >= 1.0 and p["b"] >= 0.5):
        raise ParameterError(f"ab_power needs a >= 1 and b >= 1/2, got a={p['a']}, b={p['b']}")
    return p


def _janowski(D, E):
    return (
        lambda z: (1 + D * z) / (1 + E * z),
        lambda z: (D - E) / (1 + E * z) ** 2,
    )


def _half_plane(alpha):
    c = 1 - 2 * alpha
    return (
        lambda z: (1 + c * z) / (1 - z),
        lambda z: (2 - 2 * alpha) / (1 - z) ** 2 + 0 * z,
    )


def _strong_power(eta):
    def f(z):
        return _principal_power((1 + z) / (1 - z), eta)

    return f, lambda z: 2 * eta * f(z) / (1 - z * z)


def _root_lemniscate():
    def u(z):
        return (1 - z) / (1 + LEMNISCATE_C * z)

    def f(z):
        return SQRT2 - (SQRT2 - 1) * np.sqrt(u(z))

    def df(z):
        du = -(1 + LEMNISCATE_C) / (1 + LEMNISCATE_C * z) ** 2
        return -(SQRT2 - 1) * du / (2 * np.sqrt(u(z)))

    return f, df


def _ab_power(a, b):
    def f(z):
        return _principal_power(b * (1 + z), 1.0 / a)

    return f, lambda z: f(z) / (a * (1 + z))


def _lune():
    return (
        lambda z: z + np.sqrt(1 + z * z),
        lambda z: 1 + z / np.sqrt(1 + z * z),
    )


def _sigmoid():
    def df(z):
        e = np.exp(-z)
        return 2 * e / (1 + e) ** 2

    return lambda z: 2 / (1 + np.exp(-z)), df


_BUILDERS = {
    "janowski": lambda p: _janowski(p["D"], p["E"]),
    "half_plane_alpha": lambda p: _half_plane(p["alpha"]),
    "strong_power": lambda p: _strong_power(p["eta"]),
    "root_lemniscate": lambda p: _root_lemniscate(),
    "ab_power": lambda p: _ab_power(p["a"], p["b"]),
    "exponential": lambda p: (np.exp, np.exp),
    "lune": lambda p: _lune(),
    "sigmoid": lambda p: _sigmoid(),
    "sine": lambda p: (lambda z: 1 + np.sin(z), np.cos),
}


def make_case(case: str, **params: float) -> FunctionDescriptor:
    """Build the descriptor of a named family; missing parameters take defaults."""
    case_id = canonical_case(case)
    if case_id == "custom":
        raise ParameterError("use custom() to build a user-supplied descriptor")
    p = validate_params(case_id, params)
    f, df = _BUILDERS[case_id](p)
    v0 = complex(f(np.asarray(0j)))
    return FunctionDescriptor(
        case_id=case_id,
        params=MappingProxyType(p),
        eval=f,
        deriv=df,
        real_coefficients=True,
        value_at_zero=v0,
    )


def custom(
    eval: Evaluator,
    deriv: Evaluator,
    *,
    real_coefficients: bool = False,
    label: str = "custom",
    params: Mapping[str, float] | None = None,
) -> FunctionDescriptor:
    """Wrap user evaluators.  Catalog invariants are not enforced here."""
    v0 = complex(eval(np.asarray(0j)))
    return FunctionDescriptor(
        case_id="custom",
        params=MappingProxyType(dict(params or {})),
        eval=eval,
        deriv=deriv,
        real_coefficients=real_coefficients,
        value_at_zero=v0,
        label=label,
    )


def constant_one() -> FunctionDescriptor:
    return custom(
        lambda z: np.ones_like(z),
        lambda z: np.zeros_like(z),
        real_coefficients=True,
        label="one",
    )


def eval_psi(desc: FunctionDescriptor, z):
    return desc(z)


def eval_psi_derivative(desc: FunctionDescriptor, z):
    return desc.derivative(z)


def psi_prime_zero_sign(desc: FunctionDescriptor) -> str:
    """Sign of Re psi'(0): ``"positive"``, ``"negative"`` or ``"zero"``."""
    d = desc.derivative(0.0).real
    if d > 0:
        return "positive"
    if d < 0:
        return "negative"
    return "zero"


def specialized_q(case: str, params: Mapping[str, float], r):
    """The case-specific radius function exactly as printed for each family.

    Its smallest root in (0, 1) is the majorization radius.  Accepts scalar
    or array ``r`` in [0, 1).
    """
    case_id = canonical_case(case)
    if case_id == "custom":
        raise ParameterError("no printed radius function for custom descriptors")
    p = validate_params(case_id, params)
    r = np.asarray(r, dtype=float)
    if np.any((r < 0) | (r >= 1)):
        raise DomainError("r must lie in [0, 1)")
    s = 1 - r * r
    if case_id == "janowski":
        out = s * ((1 - p["D"] * r) / (1 - p["E"] * r)) - 2 * r
    elif case_id == "half_plane_alpha":
        out = (1 - r) * (1 - (1 - 2 * p["alpha"]) * r) - 2 * r
    elif case_id == "strong_power":
        out = s * ((1 - r) / (1 + r)) ** p["eta"] - 2 * r
    elif case_id == "root_lemniscate":
        out = s * (SQRT2 - (SQRT2 - 1) * np.sqrt((1 + r) / (1 - LEMNISCATE_C * r))) - 2 * r
    elif case_id == "ab_power":
        out = s * (p["b"] * (1 - r)) ** (1 / p["a"]) - 2 * r
    elif case_id == "exponential":
        out = s - 2 * r * np.exp(r)
    elif case_id == "lune":
        out = s * (np.sqrt(1 + r * r) - r) - 2 * r
    elif case_id == "sigmoid":
        out = s - r * (1 + np.exp(r))
    else:
        out = s * (1 - np.sin(r)) - 2 * r
    return float(out) if out.ndim == 0 else out
