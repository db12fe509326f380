"""Real-line construction: the defining integral u(phi), its inversion,
the companion angle psi, the trio (s, c, d) and the closed-form derivatives.

The integrand F(1/4, 3/4; 1/2; kappa^2 sin^2 theta) is pi-periodic, so
arguments are reduced modulo pi (in phi) / modulo the full real period
(in u) before any quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Tuple

from .hypergeometric import f_quarter
from .modulus import ModulusContext
from .numerics import Tolerance, integrate_adaptive, solve_monotone

_TOL = Tolerance(abs=1e-13, rel=1e-13, max_iterations=64)
_QTOL = Tolerance(abs=1e-13, rel=1e-13, max_iterations=40)


@dataclass(frozen=True)
class AmplitudePoint:
    """A matched triple (u, phi, psi) with sin(psi) = kappa sin(phi)."""

    u: float
    phi: float
    psi: float


def _integrand(kappa: float) -> Callable[[float], float]:
    k2 = kappa * kappa
    return lambda theta: f_quarter(k2 * math.sin(theta) ** 2)


@lru_cache(maxsize=64)
def _quarter_u(kappa: float) -> float:
    """u(pi/2) by quadrature alone (no AGM); one half of the real period."""
    return integrate_adaptive(_integrand(kappa), 0.0, 0.5 * math.pi, _QTOL)


def u_of_phi(ctx: ModulusContext, phi: float) -> float:
    """The defining integral u(phi), odd and strictly increasing."""
    n = math.floor(phi / math.pi + 0.5)
    r = phi - n * math.pi
    u = integrate_adaptive(_integrand(ctx.kappa), 0.0, r, _QTOL)
    if n:
        u += 2.0 * n * _quarter_u(ctx.kappa)
    return u


def phi_of_u(ctx: ModulusContext, u: float) -> float:
    """Inverse of u_of_phi, via period reduction plus safeguarded Newton."""
    period = 2.0 * _quarter_u(ctx.kappa)
    m = math.floor(u / period + 0.5)
    r = u - m * period
    integrand = _integrand(ctx.kappa)

    def f(phi: float) -> float:
        return integrate_adaptive(integrand, 0.0, phi, _QTOL) - r

    half = 0.5 * math.pi
    # after reduction |r| <= period/2, so phi lies within [-pi/2, pi/2]
    phi = solve_monotone(f, integrand, (-half - 0.05, half + 0.05), _TOL)
    return phi + m * math.pi


def amplitude_point(ctx: ModulusContext, u: float) -> AmplitudePoint:
    phi = phi_of_u(ctx, u)
    psi = math.asin(ctx.kappa * math.sin(phi))
    return AmplitudePoint(u=u, phi=phi, psi=psi)


def trio_real(ctx: ModulusContext, u: float) -> Tuple[float, float, float]:
    """(s, c, d) = (sin phi, cos phi, cos psi) at real u."""
    pt = amplitude_point(ctx, u)
    return math.sin(pt.phi), math.cos(pt.phi), math.cos(pt.psi)


def derivatives_closed_form(
    ctx: ModulusContext, u: float
) -> Tuple[float, float, float]:
    """Closed forms (phi', psi', d') at real u:

    phi' = cos(psi)/cos(psi/2), psi' = kappa cos(phi)/cos(psi/2),
    d'   = -2 kappa sin(psi/2) cos(phi).
    """
    pt = amplitude_point(ctx, u)
    half = 0.5 * pt.psi
    cos_half = math.cos(half)
    phi_prime = math.cos(pt.psi) / cos_half
    psi_prime = ctx.kappa * math.cos(pt.phi) / cos_half
    d_prime = -2.0 * ctx.kappa * math.sin(half) * math.cos(pt.phi)
    return phi_prime, psi_prime, d_prime
