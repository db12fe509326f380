"""Aggregate verification suite: every structural check, per modulus.

This is the machine-checkable definition of correctness for the package:
each named entry is a residual that an exact implementation would make
zero, and the suite passes when all of them fall below the tolerance.
"""

from __future__ import annotations

import math
import random
from typing import Dict, Iterable, List, Optional

from .amplitude import phi_of_u, u_of_phi
from .errors import DomainError
from .extension import (
    GridSpec,
    ResidualReport,
    d_complex,
    default_grid,
    find_zeros,
    identity_residuals,
    locate_minus_one,
    pole_coefficient,
    s_squared,
)
from .jacobi import classical_am, complete_K, sn_cn_dn_real
from .hypergeometric import gauss_series
from .modulus import ModulusContext, context_from_kappa, discriminant
from .weierstrass import wp, wp_oracle, wp_prime

_RNG_SEED = 20230823


def _random_offpole_points(ctx: ModulusContext, count: int) -> List[complex]:
    rng = random.Random(_RNG_SEED + int(round(1000 * ctx.kappa)))
    pts: List[complex] = []
    margin = 0.15 * min(ctx.omega, ctx.omega_prime)
    while len(pts) < count:
        z = complex(
            rng.uniform(margin, 2.0 * ctx.omega - margin),
            rng.uniform(margin, 2.0 * ctx.omega_prime - margin),
        )
        near = min(
            abs(z - complex(2.0 * ctx.omega * m, ctx.omega_prime * n))
            for m in (0, 1)
            for n in (0, 1, 2)
        )
        if near >= margin:
            pts.append(z)
    return pts


def verify_kappa(
    kappa: float, grid: Optional[GridSpec] = None, grid_points: int = 11
) -> Dict[str, float]:
    """All named residuals for one modulus; smaller is better."""
    ctx = context_from_kappa(kappa)
    if grid is None:
        grid = default_grid(ctx, points_per_axis=grid_points)
    res: Dict[str, float] = {}

    # quadrature of the defining integral vs the AGM period route
    res["period_bridge"] = abs(
        u_of_phi(ctx, 0.5 * math.pi) - complete_K(ctx.k) / ctx.scale
    )

    worst = 0.0
    for i in range(21):
        phi = -1.4 + 2.8 * i / 20
        worst = max(worst, abs(phi_of_u(ctx, u_of_phi(ctx, phi)) - phi))
    res["inversion_round_trip"] = worst

    # midpoint values, discriminant, d values at the half periods
    res["midpoint_values"] = max(
        abs(wp(ctx, complex(ctx.omega, 0.0)) - ctx.e1),
        abs(wp(ctx, complex(ctx.omega, ctx.omega_prime)) - ctx.e3),
        abs(wp(ctx, complex(0.0, ctx.omega_prime)) - ctx.e2),
    )
    res["discriminant_identity"] = abs(
        discriminant(ctx) - kappa**4 * (1.0 - kappa**2)
    )
    res["half_period_d_values"] = max(
        abs(d_complex(ctx, complex(ctx.omega, 0.0)) - ctx.lam),
        abs(d_complex(ctx, complex(ctx.omega, ctx.omega_prime)) + ctx.lam),
    )

    res["pole_coefficient"] = abs(pole_coefficient(ctx) + 2.0)

    zeros = find_zeros(ctx)
    res["zero_of_d"] = abs(d_complex(ctx, zeros.z_plus))
    res["wp_at_zero"] = abs(wp(ctx, zeros.z_plus) - (0.5 * kappa**2 - 1.0 / 3.0))
    res["wp_at_shifted_zero"] = abs(
        wp(ctx, zeros.z_plus + 1j * ctx.omega_prime) - 1.0 / 6.0
    )
    res["wp_prime_sq_at_zero"] = abs(
        wp_prime(ctx, zeros.z_plus) ** 2 - 0.5 * kappa**4 * (kappa**2 - 1.0)
    )

    # simple-zero witness for s^2 where d = -1
    zm = locate_minus_one(ctx)
    res["s_squared_at_minus_one"] = abs(s_squared(ctx, zm))
    res["wp_prime_sq_at_minus_one"] = abs(wp_prime(ctx, zm) ** 2 - kappa**6 / 16.0)

    # two-route Weierstrass agreement at pseudo-random off-pole points
    worst = 0.0
    for z in _random_offpole_points(ctx, 25):
        worst = max(worst, abs(wp(ctx, z) - wp_oracle(ctx.g2, ctx.g3, z)))
    res["wp_two_route"] = worst

    # classical appendix cross-check against the AGM route
    worst_route = 0.0
    worst_dn = 0.0
    for x in (0.3, 0.8, 1.2):
        am = classical_am(x, kappa)
        sn, cn, dn = sn_cn_dn_real(x, kappa)
        worst_route = max(
            worst_route,
            abs(math.sin(am) - sn),
            abs(math.cos(am) - cn),
        )
        dn1 = 1.0 / gauss_series(0.5, 0.5, 0.5, kappa**2 * math.sin(am) ** 2)
        dn2 = math.sqrt(1.0 - kappa**2 * math.sin(am) ** 2)
        worst_dn = max(worst_dn, abs(dn1 - dn2), abs(dn2 - dn))
    res["classical_amplitude_route"] = worst_route
    res["classical_dn_definitions"] = worst_dn

    # double periodicity of d
    worst = 0.0
    for z in (0.4 + 0.3j, complex(ctx.omega * 0.7, ctx.omega_prime * 0.4), 1.1 + 0.2j):
        d0 = d_complex(ctx, z)
        worst = max(
            worst,
            abs(d_complex(ctx, z + 2.0 * ctx.omega) - d0),
            abs(d_complex(ctx, z + 2j * ctx.omega_prime) - d0),
        )
    res["d_double_periodicity"] = worst

    res.update(identity_residuals(ctx, grid).residuals)
    return res


def run_verification_suite(
    kappas: Iterable[float], tol: float = 1e-8, grid_points: int = 11
) -> dict:
    """Run the per-kappa suites; pass iff every residual is <= tol.

    Returns a deterministic, JSON-serializable report.  A construction or
    domain failure marks that kappa as failed with the reason recorded.
    """
    results = []
    all_pass = True
    for kappa in kappas:
        entry: dict = {"kappa": kappa}
        try:
            residuals = verify_kappa(kappa, grid_points=grid_points)
            worst = max(residuals.values())
            passed = worst <= tol
            entry.update(
                residuals=dict(sorted(residuals.items())),
                max_residual=worst,
                passed=passed,
            )
        except (DomainError, ValueError, RuntimeError) as exc:
            entry.update(error=str(exc), passed=False)
            passed = False
        all_pass = all_pass and passed
        results.append(entry)
    return {"tol": tol, "results": results, "passed": all_pass}
