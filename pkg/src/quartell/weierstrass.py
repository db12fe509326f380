"""The coperiodic Weierstrass function.

Primary route goes through the sn bridge
    wp(z) = e2 + (e1 - e2) / sn^2(scale * z),
which makes wp exactly coperiodic with the Jacobi layer.  The independent
oracle uses the Laurent series near the origin plus repeated duplication.
"""

from __future__ import annotations

import cmath
import math
from typing import List, Tuple

from .errors import ConditioningError, DomainError, PoleProximityError
from .jacobi import complete_K, sn_cn_dn_real, sn_cn_dn_complex
from .modulus import ModulusContext

#: Exclusion radius around wp poles, as a fraction of min(omega, omega').
POLE_EXCLUSION_FACTOR = 1e-3


def _reduce(v: complex, K: float, Kp: float) -> Tuple[complex, complex]:
    """Representatives of v modulo (2K, 2iK') nearest to 0 and to iK'."""
    def centered(x: float, p: float) -> float:
        return x - p * math.floor(x / p + 0.5)

    w0 = complex(centered(v.real, 2.0 * K), centered(v.imag, 2.0 * Kp))
    w1 = complex(centered(v.real, 2.0 * K), centered(v.imag - Kp, 2.0 * Kp))
    return w0, w1


def _sn_frame(ctx: ModulusContext, z: complex):
    """Reduced Jacobi argument data for wp/wp' at z.

    Returns (near_pole_shift, sn, cn, dn) where the triple is evaluated at
    whichever of v, v - iK' lies further from the sn-zero lattice.
    """
    v = ctx.scale * z
    K = complete_K(ctx.k)
    Kp = complete_K(ctx.kprime)
    w0, w1 = _reduce(v, K, Kp)
    if abs(w0) < POLE_EXCLUSION_FACTOR * min(K, Kp):
        raise PoleProximityError(f"z = {z} is within the wp pole exclusion radius")
    if abs(w0) <= abs(w1):
        triple = sn_cn_dn_complex(w0, ctx.k)
        return False, *triple
    # nearer the sn pole lattice: use sn(v) = 1/(k sn(v - iK')) and friends
    triple = sn_cn_dn_complex(w1, ctx.k)
    return True, *triple


def wp(ctx: ModulusContext, z: complex) -> complex:
    """Weierstrass function with invariants (g2, g3) of the context."""
    shifted, sn, cn, dn = _sn_frame(ctx, z)
    e12 = ctx.e1 - ctx.e2
    if shifted:
        # 1/sn^2(v) = k^2 sn^2(v - iK')
        return ctx.e2 + e12 * (ctx.k * sn) ** 2
    return ctx.e2 + e12 / (sn * sn)


def wp_prime(ctx: ModulusContext, z: complex) -> complex:
    """Derivative of wp; wp' = -2 scale^3 cn dn / sn^3."""
    shifted, sn, cn, dn = _sn_frame(ctx, z)
    a3 = ctx.scale**3
    if shifted:
        # cn dn / sn^3 translated by iK' gives -k^2 sn cn dn
        return 2.0 * a3 * ctx.k**2 * sn * cn * dn
    return -2.0 * a3 * cn * dn / (sn * sn * sn)


def _laurent_coefficients(g2: float, g3: float, terms: int = 12) -> List[float]:
    """Coefficients c_m of wp(z) = 1/z^2 + sum c_m z^(2m-2), m >= 2."""
    c = [0.0, 0.0, g2 / 20.0, g3 / 28.0]
    for m in range(4, terms + 1):
        acc = sum(c[j] * c[m - j] for j in range(2, m - 1))
        c.append(3.0 * acc / ((2 * m + 1) * (m - 3)))
    return c


_SERIES_RADIUS = 0.5
_DENOM_FLOOR = 1e-12


def wp_oracle(g2: float, g3: float, z: complex) -> complex:
    """Series-plus-duplication evaluation of wp, independent of the sn route.

    Halves the argument until |z| <= 0.5, sums the Laurent series, then
    applies the duplication formula.  A too-small duplication denominator
    triggers a retry at greater halving depth.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("wp_oracle requires z != 0")
    depth = 0
    while abs(z) / 2.0**depth > _SERIES_RADIUS:
        depth += 1
    coeffs = _laurent_coefficients(g2, g3)
    for extra in range(4):
        try:
            return _duplicate_up(g2, g3, z, depth + extra, coeffs)
        except ConditioningError:
            continue
    raise ConditioningError(f"duplication ill-conditioned at z = {z}")


def _duplicate_up(g2, g3, z, depth, coeffs):
    w = z / 2.0**depth
    w2 = w * w
    p = 1.0 / w2
    zpow = w2
    for m in range(2, len(coeffs)):
        p += coeffs[m] * zpow
        zpow *= w2
    for _ in range(depth):
        num = (6.0 * p * p - 0.5 * g2) ** 2
        den = 4.0 * (4.0 * p**3 - g2 * p - g3)
        if abs(den) < _DENOM_FLOOR:
            raise ConditioningError("duplication denominator underflow")
        p = -2.0 * p + num / den
    return p
