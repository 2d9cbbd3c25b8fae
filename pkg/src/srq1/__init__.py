"""Synchrotron radiation of a boson and an electron in the first excited
Landau level (n = 1): frequencies, angular distributions, polarization
fractions, total powers, limits and extrema.

All frequencies are in units m0*c^2/hbar, powers in units
Q0 = e^2*m0^2*c^3/hbar^2, angles in radians, magnetic field in units of the
critical field H0 = m0^2*c^3/(|e|*hbar).
"""

__version__ = "0.1.0"

from .errors import AmbiguousLimitError, ConvergenceError, DomainError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, quad_adaptive

__all__ = [
    "AmbiguousLimitError",
    "ConvergenceError",
    "DomainError",
    "DEFAULT_CONFIG",
    "QuadratureConfig",
    "quad_adaptive",
    "__version__",
]
