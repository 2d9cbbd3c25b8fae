"""Parametric integrals f_k(x) entering the n = 1 radiation formulas.

Two families, one per particle kind.  f_1 is elementary for both; f_2 and
f_3 are one-dimensional integrals evaluated in a regularized form obtained
by the substitution y = (1 - t^2)/(1 - x^2 t^2), whose integrand stays
finite for |x| < 1 (the original y-form integrands are improper at y = 1).
f_0 = f_2 + f_3.

Electron f_2, f_3 develop a logarithmic boundary layer as x -> 1; close to
that endpoint the known (1 - x) ln(1 - x) expansions are used instead of
quadrature, and at x = 1 the exact limits f_1 = f_2 = f_3 = 2 - 3/e hold.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, quad_adaptive

# below this x the elementary f_1 closed forms lose digits to cancellation
_SERIES_X = 1e-4
# electron boundary switch: use the (1-x)ln(1-x) expansion when 1-x < this
BOUNDARY_EPS = 1e-6

_F_AT_ONE_E = 2.0 - 3.0 / math.e


def _check(kind, k, x):
    if k not in (0, 1, 2, 3):
        raise DomainError(f"integral index must be 0, 1, 2 or 3, got {k}")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"argument must lie in [0, 1], got {x}")
    if kind == "b" and k in (2, 3) and x == 1.0:
        raise DomainError(
            "boson f_2, f_3 are evaluated by quadrature only for x < 1"
        )


def _sub_weight(x, t):
    # common exponential factor of the substituted integrands
    return np.exp(-x * (1.0 - t * t) / (1.0 - x * x * t * t))


def f1_b(x: float) -> float:
    """Elementary member of the boson family, ((1+x)^2 e^-x - 1)/x."""
    if x < _SERIES_X:
        return 1.0 + x * (-0.5 + x * (-1.0 / 6.0 + x * 5.0 / 24.0))
    return ((1.0 + x) ** 2 * math.exp(-x) - 1.0) / x


def f1_e(x: float) -> float:
    """Elementary member of the electron family, (2 - (2+x) e^-x)/x."""
    if x < _SERIES_X:
        return 1.0 + x * x * (-1.0 / 6.0 + x / 12.0)
    return (2.0 - (2.0 + x) * math.exp(-x)) / x


def _f2_b_integrand(x):
    def g(t):
        u = 1.0 - x * x * t * t
        return (1.0 - x * t * t) * (1.0 + x * t * t) ** 2 / u**4 * _sub_weight(x, t)

    return g


def _f3_b_integrand(x):
    def g(t):
        u = 1.0 - x * x * t * t
        return (1.0 - x * t * t) * t * t / u**4 * _sub_weight(x, t)

    return g


def _f2_e_integrand(x):
    def g(t):
        u = 1.0 - x * x * t * t
        return (1.0 - x * t * t) / u**3 * _sub_weight(x, t)

    return g


def _f3_e_integrand(x):
    def g(t):
        u = 1.0 - x * x * t * t
        return (1.0 - x * t * t) * t * t / u**3 * _sub_weight(x, t)

    return g


def f_b(k: int, x: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Boson integral f_k(x) for k in {0, 1, 2, 3}; f_0 = f_2 + f_3."""
    _check("b", k, x)
    if k == 0:
        return f_b(2, x, cfg) + f_b(3, x, cfg)
    if k == 1:
        return f1_b(x)
    if k == 2:
        pref = 2.0 * (1.0 + x) * (1.0 - x) ** 2
        return pref * quad_adaptive(_f2_b_integrand(x), 0.0, 1.0, cfg)
    pref = 2.0 * (1.0 + x) * (1.0 - x * x) ** 2
    return pref * quad_adaptive(_f3_b_integrand(x), 0.0, 1.0, cfg)


def f_e(k: int, x: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Electron integral f_k(x) for k in {0, 1, 2, 3}; f_0 = f_2 + f_3."""
    _check("e", k, x)
    if k == 0:
        return f_e(2, x, cfg) + f_e(3, x, cfg)
    if k == 1:
        return f1_e(x)
    if x == 1.0:
        return _F_AT_ONE_E
    if 1.0 - x < BOUNDARY_EPS:
        w = (1.0 - x) * math.log(1.0 - x)
        if k == 2:
            return _F_AT_ONE_E - 4.0 / math.e * w
        return _F_AT_ONE_E + 2.0 / math.e * w
    pref = 2.0 * (1.0 + x) * (1.0 - x * x)
    integrand = _f2_e_integrand(x) if k == 2 else _f3_e_integrand(x)
    return pref * quad_adaptive(integrand, 0.0, 1.0, cfg)
