"""Complex-analytic layer: the elliptic extensions of d and c, the s^2 form,
the grid residual report over every verified identity, the conjugate zeros
of d, and the double-pole expansion at i*omega'.

The complex extension of d is defined by its Jacobian form
    d(z) = 1 - (1 - lambda) sn^2(scale * z);
the real-axis amplitude construction is required to agree with it there.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .amplitude import derivatives_closed_form, trio_real
from .errors import ConditioningError, DomainError, PoleProximityError
from .jacobi import complete_K, sn_cn_dn_complex
from .modulus import ModulusContext
from .weierstrass import wp, wp_prime


@dataclass(frozen=True)
class GridSpec:
    """Rectangle sweep description for complex-plane residual checks."""

    corner_min: complex
    corner_max: complex
    points_per_axis: int
    pole_exclusion: float

    def __post_init__(self):
        if self.points_per_axis < 1:
            raise DomainError("points_per_axis must be positive")
        if self.pole_exclusion <= 0.0:
            raise DomainError("pole_exclusion must be positive")
        if (
            self.corner_max.real <= self.corner_min.real
            or self.corner_max.imag <= self.corner_min.imag
        ):
            raise DomainError("grid rectangle must have positive extents")

    def to_dict(self) -> dict:
        return {
            "corner_min": {"re": self.corner_min.real, "im": self.corner_min.imag},
            "corner_max": {"re": self.corner_max.real, "im": self.corner_max.imag},
            "points_per_axis": self.points_per_axis,
            "pole_exclusion": self.pole_exclusion,
        }


@dataclass(frozen=True)
class ZeroPair:
    """The conjugate simple zeros of d in the fundamental rectangle."""

    z_plus: complex
    z_minus: complex


@dataclass
class ResidualReport:
    """Named per-identity maximum residuals over an evaluation grid."""

    kappa: float
    grid: GridSpec
    residuals: Dict[str, float] = field(default_factory=dict)

    def max_residual(self) -> float:
        return max(self.residuals.values()) if self.residuals else 0.0

    def to_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "grid": self.grid.to_dict(),
            "residuals": dict(sorted(self.residuals.items())),
        }


def _triple(ctx: ModulusContext, z: complex):
    return sn_cn_dn_complex(ctx.scale * z, ctx.k)


def d_complex(ctx: ModulusContext, z: complex) -> complex:
    """Jacobian form d(z) = 1 - (1 - lambda) sn^2(scale z)."""
    sn, _, _ = _triple(ctx, z)
    return 1.0 - (1.0 - ctx.lam) * sn * sn


def c_complex(ctx: ModulusContext, z: complex) -> complex:
    """Elliptic extension of c: cn(scale z) dn(scale z)."""
    _, cn, dn = _triple(ctx, z)
    return cn * dn


def s_squared(ctx: ModulusContext, z: complex) -> complex:
    """Elliptic form of s^2: sn^2 (k^2 + dn^2) at the scaled argument."""
    sn, _, dn = _triple(ctx, z)
    return sn * sn * (ctx.k**2 + dn * dn)


def default_grid(
    ctx: ModulusContext, points_per_axis: int = 11, margin_fraction: float = 0.15
) -> GridSpec:
    """Grid over one fundamental rectangle, clear of both pole lattices."""
    m = margin_fraction * min(ctx.omega, ctx.omega_prime)
    return GridSpec(
        corner_min=complex(m, m),
        corner_max=complex(2.0 * ctx.omega - m, 2.0 * ctx.omega_prime - m),
        points_per_axis=points_per_axis,
        pole_exclusion=max(1e-3 * min(ctx.omega, ctx.omega_prime), 0.5 * m),
    )


def _pole_clear(ctx: ModulusContext, z: complex, radius: float) -> bool:
    """True if z is at least `radius` from both the 0- and i*omega'-lattices."""
    px, py = 2.0 * ctx.omega, 2.0 * ctx.omega_prime

    def dist(x: float, y: float) -> float:
        dx = x - px * math.floor(x / px + 0.5)
        dy = y - py * math.floor(y / py + 0.5)
        return math.hypot(dx, dy)

    return (
        dist(z.real, z.imag) >= radius
        and dist(z.real, z.imag - ctx.omega_prime) >= radius
    )


def grid_points(ctx: ModulusContext, grid: GridSpec) -> List[complex]:
    """Grid nodes with pole neighborhoods removed."""
    n = grid.points_per_axis
    pts = []
    for i in range(n):
        for j in range(n):
            fx = i / (n - 1) if n > 1 else 0.5
            fy = j / (n - 1) if n > 1 else 0.5
            z = complex(
                grid.corner_min.real + fx * (grid.corner_max.real - grid.corner_min.real),
                grid.corner_min.imag + fy * (grid.corner_max.imag - grid.corner_min.imag),
            )
            if _pole_clear(ctx, z, grid.pole_exclusion):
                pts.append(z)
    return pts


def identity_residuals(ctx: ModulusContext, grid: GridSpec) -> ResidualReport:
    """Maximum residual of every structural identity over the grid.

    Complex-grid identities pair the Jacobian forms with the coperiodic
    Weierstrass function; the real-axis entries pair them with the
    amplitude-route construction and its closed-form derivatives.
    """
    lam2 = ctx.lam**2
    kap2 = ctx.kappa**2
    res: Dict[str, float] = {
        "theorem_product": 0.0,
        "translate_identification": 0.0,
        "ode_complex": 0.0,
        "jacobian_s_d": 0.0,
        "c_squared_modulus": 0.0,
        "conjugate_reality": 0.0,
    }
    for z in grid_points(ctx, grid):
        d = d_complex(ctx, z)
        c = c_complex(ctx, z)
        s2 = s_squared(ctx, z)
        p = wp(ctx, z)
        pp = wp_prime(ctx, z)
        res["theorem_product"] = max(
            res["theorem_product"], abs((d - 1.0) * (p + 1.0 / 3.0) + 0.5 * kap2)
        )
        res["translate_identification"] = max(
            res["translate_identification"],
            abs(d - (1.0 / 3.0 - 2.0 * wp(ctx, z + 1j * ctx.omega_prime))),
        )
        # d' by the chain rule on the wp identification; the residual is
        # normalized by (1+|d|)^3 since both sides grow like d^3 near poles
        dp = 0.5 * kap2 * pp / (p + 1.0 / 3.0) ** 2
        res["ode_complex"] = max(
            res["ode_complex"],
            abs(dp * dp - 2.0 * (1.0 - d) * (d * d - lam2)) / (1.0 + abs(d)) ** 3,
        )
        res["jacobian_s_d"] = max(res["jacobian_s_d"], abs(kap2 * s2 + d * d - 1.0))
        res["c_squared_modulus"] = max(
            res["c_squared_modulus"], abs(kap2 * c * c - (d * d - lam2))
        )
        res["conjugate_reality"] = max(
            res["conjugate_reality"],
            abs(d_complex(ctx, z.conjugate()).conjugate() - d),
        )

    # real-axis sub-grid: route agreement and the closed-form derivative laws
    res.update(
        {
            "ode_real": 0.0,
            "phi_prime_squared": 0.0,
            "psi_prime_squared": 0.0,
            "d_route_real": 0.0,
            "c_route_real": 0.0,
            "s2_route_real": 0.0,
        }
    )
    n_real = 41
    for i in range(n_real):
        u = -2.0 * ctx.omega + 0.05 + (4.0 * ctx.omega - 0.1) * i / (n_real - 1)
        s, c_r, d_r = trio_real(ctx, u)
        phi_p, psi_p, d_p = derivatives_closed_form(ctx, u)
        res["ode_real"] = max(
            res["ode_real"], abs(d_p**2 - 2.0 * (1.0 - d_r) * (d_r**2 - lam2))
        )
        res["phi_prime_squared"] = max(
            res["phi_prime_squared"], abs(phi_p**2 - 2.0 * d_r**2 / (d_r + 1.0))
        )
        res["psi_prime_squared"] = max(
            res["psi_prime_squared"],
            abs(psi_p**2 - 2.0 * (d_r**2 - lam2) / (d_r + 1.0)),
        )
        res["d_route_real"] = max(
            res["d_route_real"], abs(d_complex(ctx, complex(u, 0.0)) - d_r)
        )
        res["c_route_real"] = max(
            res["c_route_real"], abs(c_complex(ctx, complex(u, 0.0)) - c_r)
        )
        res["s2_route_real"] = max(
            res["s2_route_real"], abs(s_squared(ctx, complex(u, 0.0)) - s * s)
        )
    return ResidualReport(kappa=ctx.kappa, grid=grid, residuals=res)


_ZERO_BISECTIONS = 80


def find_zeros(ctx: ModulusContext) -> ZeroPair:
    """Conjugate zeros of d: bisection on the segment from omega to
    omega + i*omega', where d is real with endpoint values lambda, -lambda."""

    def d_on_segment(t: float) -> float:
        return d_complex(ctx, complex(ctx.omega, t * ctx.omega_prime)).real

    lo, hi = 0.0, 1.0
    flo = d_on_segment(lo)
    for _ in range(_ZERO_BISECTIONS):
        mid = 0.5 * (lo + hi)
        fmid = d_on_segment(mid)
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    z_plus = complex(ctx.omega, t * ctx.omega_prime)
    return ZeroPair(z_plus=z_plus, z_minus=z_plus.conjugate())


def locate_minus_one(ctx: ModulusContext) -> complex:
    """Point on the horizontal line through i*omega' where d = -1.

    There d(x + i omega') = 1/3 - 2 wp(x) runs from -inf to -lambda as x
    goes from 0 to omega, so a bisection bracket always exists.
    """
    def g(x: float) -> float:
        return d_complex(ctx, complex(x, ctx.omega_prime)).real + 1.0

    lo = 0.02 * ctx.omega
    while g(lo) > 0.0:
        lo *= 0.5
        if lo < 1e-8:
            raise ConditioningError("failed to bracket the d = -1 point")
    hi = ctx.omega
    for _ in range(_ZERO_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return complex(0.5 * (lo + hi), ctx.omega_prime)


_POLE_STEPS = (1e-2, 5e-3, 2.5e-3)
_POLE_DRIFT = 0.01


def pole_coefficient(ctx: ModulusContext, raw: bool = False):
    """Leading Laurent coefficient of d at i*omega' (approximately -2).

    Evaluates h^2 d(i omega' + h) over halving steps h and Richardson-
    extrapolates the O(h^2) error away.  With ``raw=True`` returns the
    unextrapolated estimates instead.
    """
    vals = [
        h * h * d_complex(ctx, complex(h, ctx.omega_prime)).real
        for h in _POLE_STEPS
    ]
    for a, b in zip(vals, vals[1:]):
        if abs(b - a) > _POLE_DRIFT * max(1.0, abs(a)):
            raise ConditioningError(
                f"pole estimates unstable across h-halving: {vals}"
            )
    if raw:
        return vals
    r1a = (4.0 * vals[1] - vals[0]) / 3.0
    r1b = (4.0 * vals[2] - vals[1]) / 3.0
    return (16.0 * r1b - r1a) / 15.0
