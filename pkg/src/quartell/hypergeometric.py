"""Gauss hypergeometric evaluation: the general power series plus the two
closed forms needed by the integrand and the classical cross-check.
"""

from __future__ import annotations

import math

from .errors import ConvergenceError, DomainError
from .numerics import DEFAULT_TOL, Tolerance

_MAX_TERMS = 10000


def gauss_series(
    a: float, b: float, c: float, z: float, tol: Tolerance = DEFAULT_TOL
) -> float:
    """Sum of the 2F1(a, b; c; z) power series for |z| < 1."""
    if abs(z) >= 1.0:
        raise DomainError(f"series requires |z| < 1, got z = {z}")
    if c <= 0.0 and c == math.floor(c):
        raise DomainError(f"c = {c} is a non-positive integer")
    total = 1.0
    term = 1.0
    # the term ratio tends to z, so bound the tail by the geometric sum
    # |term| * |z| / (1 - |z|); the 1/20 margin keeps the truncation error
    # comfortably inside the requested tolerance
    tail_factor = abs(z) / (1.0 - abs(z))
    for n in range(_MAX_TERMS):
        term *= (a + n) * (b + n) / ((c + n) * (1.0 + n)) * z
        total += term
        if abs(term) * tail_factor <= 0.05 * (tol.rel * abs(total) + tol.abs):
            return total
    raise ConvergenceError(f"series did not converge at z = {z}")


def f_quarter(z: float) -> float:
    """Closed form of 2F1(1/4, 3/4; 1/2; z) for real z < 1.

    With z = sin^2(psi) this is cos(psi/2)/cos(psi); algebraically
    sqrt((1 + sqrt(1 - z))/2) / sqrt(1 - z).
    """
    if z >= 1.0:
        raise DomainError(f"closed form requires z < 1, got z = {z}")
    w = math.sqrt(1.0 - z)
    return math.sqrt(0.5 * (1.0 + w)) / w


def f_classical(z: float) -> float:
    """Closed form of 2F1(1/2, 1/2; 1/2; z) = (1 - z)^(-1/2) for z < 1."""
    if z >= 1.0:
        raise DomainError(f"closed form requires z < 1, got z = {z}")
    return 1.0 / math.sqrt(1.0 - z)
