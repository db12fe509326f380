"""Per-modulus context: every scalar the theory derives from kappa.

The context is immutable; all downstream evaluation is a pure function of
it.  Midpoint values are stored as exact expressions of lambda, never
re-solved from the cubic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict

from .errors import DomainError
from .jacobi import complete_K


@dataclass(frozen=True)
class ModulusContext:
    """All scalars derived from the hypergeometric modulus kappa in (0, 1).

    lam is the complement sqrt(1 - kappa^2); k is the associated Jacobi
    modulus; (e1, e3, e2) are the midpoint values in descending order;
    2*omega and 2i*omega_prime span the period lattice; scale maps lattice
    coordinates onto Jacobi arguments (scale^2 = e1 - e2 = 1/(1 + k^2)).
    """

    kappa: float
    lam: float
    k: float
    kprime: float
    g2: float
    g3: float
    e1: float
    e3: float
    e2: float
    omega: float
    omega_prime: float
    scale: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "kappa": self.kappa,
            "lambda": self.lam,
            "k": self.k,
            "kprime": self.kprime,
            "g2": self.g2,
            "g3": self.g3,
            "e1": self.e1,
            "e3": self.e3,
            "e2": self.e2,
            "omega": self.omega,
            "omega_prime": self.omega_prime,
            "scale": self.scale,
        }


def context_from_kappa(kappa: float) -> ModulusContext:
    """Build the full context for a modulus kappa in (0, 1)."""
    if not 0.0 < kappa < 1.0:
        raise DomainError(f"kappa must lie in (0, 1), got {kappa}")
    lam = math.sqrt((1.0 - kappa) * (1.0 + kappa))
    k = math.sqrt((1.0 - lam) / (1.0 + lam))
    kprime = math.sqrt((1.0 - k) * (1.0 + k))
    g2 = 4.0 / 3.0 - kappa**2
    g3 = 8.0 / 27.0 - kappa**2 / 3.0
    e1 = 1.0 / 6.0 + 0.5 * lam
    e3 = 1.0 / 6.0 - 0.5 * lam
    e2 = -1.0 / 3.0
    scale = math.sqrt(0.5 * (1.0 + lam))  # = sqrt(e1 - e2) = (1 + k^2)^(-1/2)
    omega = complete_K(k) / scale
    omega_prime = complete_K(kprime) / scale
    return ModulusContext(
        kappa=kappa,
        lam=lam,
        k=k,
        kprime=kprime,
        g2=g2,
        g3=g3,
        e1=e1,
        e3=e3,
        e2=e2,
        omega=omega,
        omega_prime=omega_prime,
        scale=scale,
    )


def context_from_jacobi_k(k: float) -> ModulusContext:
    """Build the context from the Jacobi modulus k, kappa = 2k/(1 + k^2)."""
    if not 0.0 < k < 1.0:
        raise DomainError(f"k must lie in (0, 1), got {k}")
    return context_from_kappa(2.0 * k / (1.0 + k * k))


def discriminant(ctx: ModulusContext) -> float:
    """Discriminant g2^3 - 27 g3^2; equals kappa^4 (1 - kappa^2) > 0."""
    return ctx.g2**3 - 27.0 * ctx.g3**2
