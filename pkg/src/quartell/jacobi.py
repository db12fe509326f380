"""Classical Jacobi layer: complete integrals via the AGM, sn/cn/dn for real
and complex arguments, and the classical amplitude construction.

Real-argument sn/cn/dn follow the descending Landen / AGM scheme of
https://dlmf.nist.gov/22.20#ii; complex arguments go through the addition
formulas with purely real transcendental kernels.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Tuple

from .errors import DomainError, PoleProximityError
from .hypergeometric import f_classical
from .numerics import (
    DEFAULT_TOL,
    QUADRATURE_TOL,
    Tolerance,
    agm,
    integrate_adaptive,
    solve_monotone,
)

#: Pole guard radius as a fraction of min(K, K') — keeps condition numbers
#: bounded so identity residuals stay near 1e-10 in double precision.
POLE_EXCLUSION_FACTOR = 1e-3


@lru_cache(maxsize=256)
def complete_K(k: float) -> float:
    """Complete elliptic integral of the first kind, K = pi / (2 agm(1, k'))."""
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got k = {k}")
    kprime = math.sqrt((1.0 - k) * (1.0 + k))
    return math.pi / (2.0 * agm(1.0, kprime))


def _landen_scales(k: float):
    a, b, c = 1.0, math.sqrt((1.0 - k) * (1.0 + k)), k
    aa, cc = [a], [c]
    while abs(c) > 1e-15 and len(aa) < 32:
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        aa.append(a)
        cc.append(c)
    return aa, cc


def sn_cn_dn_real(x: float, k: float) -> Tuple[float, float, float]:
    """Jacobi sn, cn, dn at real ``x`` by the descending AGM recursion."""
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got k = {k}")
    if k == 0.0:
        return math.sin(x), math.cos(x), 1.0
    if x == 0.0:
        return 0.0, 1.0, 1.0
    K = complete_K(k)
    # reduce to |r| <= K so every arcsin below is principal
    m = math.floor(x / (2.0 * K) + 0.5)
    r = x - 2.0 * K * m
    sign = -1.0 if m % 2 else 1.0

    aa, cc = _landen_scales(k)
    n = len(aa) - 1
    phi = (2.0**n) * aa[n] * r
    for i in range(n, 0, -1):
        arg = cc[i] / aa[i] * math.sin(phi)
        arg = max(-1.0, min(1.0, arg))
        phi = 0.5 * (phi + math.asin(arg))
    sn, cn = math.sin(phi), math.cos(phi)
    # dn > 0 on the real line; this form avoids the 0/0 of the angle ratio
    # at quarter periods
    kprime2 = (1.0 - k) * (1.0 + k)
    dn = math.sqrt(kprime2 + (k * cn) ** 2)
    return sign * sn, sign * cn, dn


def _torus_distance(x: float, y: float, px: float, py: float) -> float:
    """Distance from (x, y) to the lattice {(m px, n py)}."""
    dx = x - px * math.floor(x / px + 0.5)
    dy = y - py * math.floor(y / py + 0.5)
    return math.hypot(dx, dy)


def pole_distance(z: complex, k: float) -> float:
    """Distance from ``z`` to the sn pole lattice i K' + 2mK + 2inK'."""
    K = complete_K(k)
    Kp = complete_K(math.sqrt((1.0 - k) * (1.0 + k)))
    return _torus_distance(z.real, z.imag - Kp, 2.0 * K, 2.0 * Kp)


def sn_cn_dn_complex(
    z: complex, k: float, exclusion: float | None = None
) -> Tuple[complex, complex, complex]:
    """Jacobi sn, cn, dn at complex ``z`` via the addition formulas.

    Combines real-argument values at modulus k (real part) and k' (imaginary
    part); raises within ``exclusion`` of the sn pole lattice.
    """
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got k = {k}")
    kprime = math.sqrt((1.0 - k) * (1.0 + k))
    if exclusion is None:
        exclusion = POLE_EXCLUSION_FACTOR * min(complete_K(k), complete_K(kprime))
    if pole_distance(z, k) < exclusion:
        raise PoleProximityError(f"z = {z} is within {exclusion} of an sn pole")
    s, c, d = sn_cn_dn_real(z.real, k)
    s1, c1, d1 = sn_cn_dn_real(z.imag, kprime)
    den = c1 * c1 + (k * s * s1) ** 2
    if den == 0.0:
        raise PoleProximityError(f"z = {z} lies on the sn pole lattice")
    sn = complex(s * d1, c * d * s1 * c1) / den
    cn = complex(c * c1, -s * d * s1 * d1) / den
    dn = complex(d * c1 * d1, -k * k * s * c * s1) / den
    return sn, cn, dn


_AM_TOL = Tolerance(abs=1e-13, rel=1e-13, max_iterations=64)


@lru_cache(maxsize=64)
def _am_quarter_u(kappa: float) -> float:
    return integrate_adaptive(
        lambda t: f_classical(kappa**2 * math.sin(t) ** 2),
        0.0,
        0.5 * math.pi,
        Tolerance(abs=1e-13, rel=1e-13, max_iterations=40),
    )


def classical_am(x: float, kappa: float) -> float:
    """Classical Jacobi amplitude am(x, kappa) by quadrature inversion."""
    if kappa == 0.0:
        return x
    if not 0.0 < kappa < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got {kappa}")

    def integrand(t: float) -> float:
        return f_classical(kappa**2 * math.sin(t) ** 2)

    quarter = _am_quarter_u(kappa)
    m = math.floor(x / (2.0 * quarter) + 0.5)
    r = x - 2.0 * quarter * m

    def f(phi: float) -> float:
        return integrate_adaptive(integrand, 0.0, phi, _AM_TOL) - r

    half = 0.5 * math.pi
    phi = solve_monotone(f, integrand, (-half - 0.05, half + 0.05), _AM_TOL)
    return phi + m * math.pi
