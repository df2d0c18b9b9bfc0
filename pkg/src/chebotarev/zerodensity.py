"""Explicit upper bounds for counts and weighted sums of zeta zeros."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import DEFAULT_QUADRATURE, QuadratureSpec, digamma, integrate
from .profiles import DegreeProfile

# Coefficients of the explicit N_L(T) error term.
ERR_LOG = 0.296
ERR_DEGREE = 3.971
ERR_CONST = 3.969

_LOG_2PIE = math.log(2 * math.pi * math.e)


@dataclass(frozen=True)
class ZeroCountContext:
    profile: DegreeProfile
    L: float
    nL: int

    def __post_init__(self) -> None:
        p = self.profile
        if self.L < p.L0 * (1 - 1e-12):
            raise ValueError(f"L={self.L} below the profile floor L0={p.L0}")
        if not p.n0 <= self.nL <= p.Q0 * self.L * (1 + 1e-12):
            raise ValueError(f"nL={self.nL} outside [n0, Q0 L]")


def nl_upper(T: float, ctx: ZeroCountContext) -> float:
    """Upper bound for the number of zeros with 0 < beta < 1, |gamma| <= T."""
    if T < 1:
        raise ValueError("T must be at least 1")
    main = (T / math.pi) * (ctx.L + ctx.nL * math.log(T / (2 * math.pi * math.e)))
    return main + ERR_LOG * (ctx.L + ctx.nL * math.log(T)) + ERR_DEGREE * ctx.nL + ERR_CONST


def omega(alpha: float, p: DegreeProfile) -> float:
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    arg = digamma((2 + alpha) / 2) - math.log(math.pi) + 2 / p.n0
    return 0.5 + 0.5 * p.Q0 * max(arg, 0.0)


def n_small_upper(r: float, alpha: float, ctx: ZeroCountContext) -> float:
    """Bound for the number of zeros rho with |rho - 1| <= r."""
    if not 0 < r <= 1:
        raise ValueError("r must lie in (0, 1]")
    base = ((1 + alpha) / alpha) ** 2
    return base * (1 + alpha * r * omega(alpha, ctx.profile) * ctx.L)


def annulus_sum_upper(r: float, alpha: float, n_inner: int, ctx: ZeroCountContext) -> float:
    """Bound for the annulus sum of zeros around 1 at radius scale r.

    ``n_inner`` is the number of zeros already known to lie in the inner disc of
    radius 1/(r L): 0 without an exceptional zero, 1 with one.
    """
    if not 1 / (r * ctx.L) <= 1:
        raise ValueError("need 1/(r L) <= 1")
    if n_inner < 0:
        raise ValueError("n_inner must be non-negative")
    base = ((1 + alpha) / alpha) ** 2
    w = omega(alpha, ctx.profile)
    return (base * (r * r + 2 * r * alpha * w) - n_inner * r * r) * ctx.L ** 2


def _c6_inner_closed(n0: int) -> float:
    return (1 - _LOG_2PIE) / math.pi + ERR_LOG / 4 + (ERR_DEGREE + ERR_CONST / n0) / 2


def _c6_inner_quadrature(n0: int, spec: QuadratureSpec) -> float:
    def f(r: float) -> float:
        main = (r / math.pi) * math.log(r / (2 * math.pi * math.e))
        return (main + ERR_LOG * math.log(r) + ERR_DEGREE + ERR_CONST / n0) / r ** 3

    return integrate(f, 1.0, math.inf, spec)


def c6_const(p: DegreeProfile, *, quadrature: bool = False,
             spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """8(1/pi + 0.148 + Q0 max{0, I}) with I the integral of N_L's bound against r^-3."""
    inner = _c6_inner_quadrature(p.n0, spec) if quadrature else _c6_inner_closed(p.n0)
    return 8 * (1 / math.pi + ERR_LOG / 2 + p.Q0 * max(0.0, inner))


def c13_const(p: DegreeProfile) -> float:
    return 1 / math.pi + ERR_LOG + p.Q0 * (ERR_DEGREE - _LOG_2PIE / math.pi) + ERR_CONST / p.L0
