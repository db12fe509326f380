"""Scalar numerical kernels: AGM iteration, adaptive Simpson quadrature and
safeguarded Newton/bisection root finding.

Everything here is pure and dependency-free; the rest of the package builds
on these three primitives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .errors import AccuracyError, BracketError, ConvergenceError, DomainError


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative tolerance pair plus an iteration (or depth) budget."""

    abs: float = 1e-12
    rel: float = 1e-12
    max_iterations: int = 64

    def __post_init__(self):
        if self.abs < 0.0 or self.rel < 0.0:
            raise DomainError("tolerances must be non-negative")
        if self.abs == 0.0 and self.rel == 0.0:
            raise DomainError("at least one of abs, rel must be positive")
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be >= 1")


#: Default for AGM and root finding.
DEFAULT_TOL = Tolerance(abs=1e-12, rel=1e-12, max_iterations=64)
#: Default for quadrature; max_iterations is the refinement depth.
QUADRATURE_TOL = Tolerance(abs=1e-12, rel=1e-12, max_iterations=40)


def agm(a: float, b: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Common limit of the arithmetic-geometric mean iteration."""
    if a <= 0.0 or b <= 0.0:
        raise DomainError(f"agm requires positive inputs, got ({a}, {b})")
    for _ in range(tol.max_iterations):
        if abs(a - b) <= tol.abs * (1.0 + abs(a)):
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise ConvergenceError(
        f"agm did not converge within {tol.max_iterations} iterations"
    )


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h * (fa + 4.0 * fm + fb) / 6.0


def integrate_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: Tolerance = QUADRATURE_TOL,
) -> float:
    """Adaptive Simpson integration of ``f`` over ``[a, b]``.

    The interval is bisected until the classic |S2 - S1|/15 estimate drops
    below the local tolerance share; max_iterations bounds the depth.
    """
    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = _simpson(fa, fm, fb, b - a)
    eps = max(tol.abs, tol.rel * abs(whole))
    return _adapt(f, a, b, fa, fm, fb, whole, eps, tol.max_iterations)


def _adapt(f, a, b, fa, fm, fb, whole, eps, depth):
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    if abs(delta) <= 15.0 * eps:
        return left + right + delta / 15.0
    if depth <= 0:
        raise AccuracyError(
            f"quadrature tolerance not reached on [{a}, {b}]"
        )
    half = 0.5 * eps
    return _adapt(f, a, m, fa, flm, fm, left, half, depth - 1) + _adapt(
        f, m, b, fm, frm, fb, right, half, depth - 1
    )


def solve_monotone(
    f: Callable[[float], float],
    fprime: Optional[Callable[[float], float]],
    bracket: Tuple[float, float],
    tol: Tolerance = DEFAULT_TOL,
) -> float:
    """Root of ``f`` inside ``bracket`` by Newton safeguarded with bisection.

    Newton steps are accepted only while they stay inside the current
    bracket; otherwise the step falls back to bisection.  Requires a sign
    change across the bracket.
    """
    lo, hi = bracket
    if lo > hi:
        lo, hi = hi, lo
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise BracketError(f"f has equal signs at bracket endpoints ({lo}, {hi})")
    fscale = max(abs(flo), abs(fhi))
    x = 0.5 * (lo + hi)
    fx = f(x)
    for _ in range(tol.max_iterations):
        if abs(fx) <= max(tol.abs, tol.rel * fscale):
            return x
        # shrink the bracket around the sign change
        if (fx > 0.0) == (fhi > 0.0):
            hi, fhi = x, fx
        else:
            lo, flo = x, fx
        step_taken = False
        if fprime is not None:
            dfx = fprime(x)
            if dfx != 0.0:
                cand = x - fx / dfx
                if lo < cand < hi:
                    x = cand
                    step_taken = True
        if not step_taken:
            x = 0.5 * (lo + hi)
        if hi - lo <= tol.abs * (1.0 + abs(x)):
            return x
        fx = f(x)
    raise ConvergenceError(
        f"root iteration did not converge within {tol.max_iterations} steps"
    )
