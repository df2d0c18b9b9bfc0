"""Zero-repulsion constant pairs (c1, c2) and the exceptional-zero exponent c3.

Three pairs are produced from the free parameters (eps, sigma, eta):

* ``general``  zeros anywhere in the region, via B(d, T0) with T0 = inf
* ``strip``    zeros with |t| <= 1, via B'(d)
* ``real``     real zeros, via B''(d)

In every case c2 = (sigma - 1)/(2 (8 + eps) A B_kind) and
c1 = eps c2 / (8 (8 + eps)), where A = (sigma - 1 + eta)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal
from typing import Literal

import numpy as np
from scipy.optimize import minimize

from .numerics import digamma, g_bound
from .profiles import DegreeProfile, delta0

# Zero-free region constant: no zeros with sigma > 1 - 1/(R (L + n_L log(|t| + 2))).
R_ZFR = 29.57
R0 = 20.0
R1 = 1.24
R1_FALLBACK = 2.0

Kind = Literal["general", "strip", "real"]
KINDS: tuple[Kind, ...] = ("general", "strip", "real")

# Search box of the optimizer (log eps, sigma).
EPS_BOX = (1e-3, 50.0)
SIGMA_BOX = (2.0, 20.0)


@dataclass(frozen=True)
class RepulsionParams:
    eps: float
    sigma: float
    eta: float

    def __post_init__(self) -> None:
        if not self.eps > 0:
            raise ValueError("eps must be positive")
        if not self.sigma >= 2:
            raise ValueError("sigma must be at least 2")
        if not 0 < self.eta <= 1:
            raise ValueError("eta must lie in (0, 1]")

    @property
    def ratio(self) -> float:
        """c1/c2 = eps/(8(8 + eps)), shared by all three pairs."""
        return self.eps / (8 * (8 + self.eps))


@dataclass(frozen=True)
class RepulsionConstants:
    c1: float
    c2: float
    c1p: float
    c2p: float
    c1pp: float
    c2pp: float
    c3: float

    # c1, c2 only enter as lower bounds and c3 as an upper bound, so rounding
    # the former down and the latter up keeps every constant admissible.
    ROUNDING = {"c1": "down", "c2": "down", "c1p": "down", "c2p": "down",
                "c1pp": "down", "c2pp": "down", "c3": "up"}

    def rounded(self, digits: int = 4) -> "RepulsionConstants":
        return replace(self, **{k: safe_round(getattr(self, k), digits, d)
                                for k, d in self.ROUNDING.items()})


def safe_round(value: float, digits: int, direction: str) -> float:
    """Round to ``digits`` significant figures towards -inf ("down") or +inf ("up")."""
    if value == 0 or not math.isfinite(value):
        return value
    exp = math.floor(math.log10(abs(value))) - digits + 1
    quantum = Decimal(1).scaleb(exp)
    mode = ROUND_FLOOR if direction == "down" else ROUND_CEILING
    return float(Decimal(repr(value)).quantize(quantum, rounding=mode))


def geometry(params: RepulsionParams) -> tuple[float, float]:
    """A = (sigma - 1 + eta)^2 and d = sqrt(sigma^2 + A)."""
    A = (params.sigma - 1 + params.eta) ** 2
    return A, math.sqrt(params.sigma ** 2 + A)


def _check_d(d: float) -> None:
    if not d > 1:
        raise ValueError(f"d must exceed 1, got {d}")


def b_general(d: float, t0: float, p: DegreeProfile) -> float:
    """B(d, T0) = max over delta in [0, Delta0(T0)] of (b1 + b2 delta)/(1 + delta), over d - 1."""
    _check_d(d)
    L0 = p.L0
    b1 = 1 + 2 / (L0 * (d - 1)) + 2 / (L0 * d)
    g = max(g_bound(d, t0), g_bound(d + 1, t0))
    b2 = 0.5 + max(digamma((d + 1) / 2) + g - 2 * math.log(math.pi), 0.0) / (2 * math.log(2))
    # (b1 + b2 delta)/(1 + delta) is monotone in delta: compare both endpoints.
    if math.isinf(t0):
        top = b2
    else:
        dmax = delta0(t0, p)
        top = (b1 + b2 * dmax) / (1 + dmax)
    return max(b1, top) / (d - 1)


def h_strip(d: float) -> float:
    def tail(x: float) -> float:
        return math.log(math.sqrt(x * x + 1)) - x / (x * x + 1) + 1 / (3 * x * x)

    return (0.5 * digamma((d + 1) / 2) + 0.5 * max(tail(d), tail(d + 1))
            - (math.log(2) + 2 * math.log(math.pi)) / 2)


def b_strip(d: float, p: DegreeProfile) -> float:
    _check_d(d)
    extra = h_strip(d) + (4 * d - 2) / (d * (d - 1) * p.n0)
    return (1 + p.Q0 * max(0.0, extra)) / (d - 1)


def b_real(d: float, p: DegreeProfile) -> float:
    _check_d(d)
    extra = 0.5 * digamma((d + 1) / 2) - math.log(math.pi) / 2 + (2 * d - 1) / (d * (d - 1) * p.n0)
    return (0.5 + p.Q0 * max(0.0, extra)) / (d - 1)


def b_kind(kind: Kind, d: float, p: DegreeProfile) -> float:
    if kind == "general":
        return b_general(d, math.inf, p)
    if kind == "strip":
        return b_strip(d, p)
    if kind == "real":
        return b_real(d, p)
    raise ValueError(f"unknown kind {kind!r}")


def repulsion_pair(kind: Kind, params: RepulsionParams, p: DegreeProfile) -> tuple[float, float]:
    A, d = geometry(params)
    c2 = (params.sigma - 1) / (2 * (8 + params.eps) * A * b_kind(kind, d, p))
    return params.ratio * c2, c2


def c3_const(params: RepulsionParams, p: DegreeProfile) -> float:
    """c3 with 1 - beta_1 >= d_L^{-c3} for an exceptional zero beta_1."""
    c1pp, c2pp = repulsion_pair("real", params, p)
    return params.eta / c2pp + (math.log(p.L0) - math.log(c1pp)) / p.L0


def all_constants(params: RepulsionParams, p: DegreeProfile) -> RepulsionConstants:
    c1, c2 = repulsion_pair("general", params, p)
    c1p, c2p = repulsion_pair("strip", params, p)
    c1pp, c2pp = repulsion_pair("real", params, p)
    return RepulsionConstants(c1, c2, c1p, c2p, c1pp, c2pp, c3_const(params, p))


def _in_box(eps: float, sigma: float) -> bool:
    return EPS_BOX[0] <= eps <= EPS_BOX[1] and SIGMA_BOX[0] <= sigma <= SIGMA_BOX[1]


def optimize_repulsion(p: DegreeProfile, eta: float = 1.0, grid: int = 20,
                       max_iter: int = 400) -> tuple[dict[Kind, RepulsionParams], RepulsionConstants]:
    """Choose (eps, sigma) minimizing c3 and evaluate all three pairs there.

    c2 alone grows without bound as eps -> 0 (at the price of c1 -> 0), so the
    pairs are taken at the single point that makes c3 smallest. Grid seed over
    (log eps, sigma), then Nelder-Mead. Returns full-precision constants; use
    ``RepulsionConstants.rounded`` for reporting.
    """

    def objective(v: np.ndarray) -> float:
        eps, sigma = math.exp(v[0]), v[1]
        if not _in_box(eps, sigma):
            return math.inf
        return c3_const(RepulsionParams(eps, sigma, eta), p)

    log_eps = np.linspace(math.log(EPS_BOX[0]), math.log(EPS_BOX[1]), grid)
    sigmas = np.linspace(SIGMA_BOX[0], SIGMA_BOX[1], grid)
    seed = min(((objective(np.array([le, s])), le, s) for le in log_eps for s in sigmas))
    res = minimize(objective, np.array([seed[1], seed[2]]), method="Nelder-Mead",
                   options={"xatol": 1e-10, "fatol": 1e-13, "maxiter": max_iter})
    best = res.x if res.fun <= seed[0] else np.array([seed[1], seed[2]])
    params = RepulsionParams(math.exp(best[0]), float(best[1]), eta)
    return {k: params for k in KINDS}, all_constants(params, p)


def zfr_enlarged_check(R0: float, r: float, R: float) -> bool:
    """Whether 1/2 (1 - 1/sqrt 5) + r >= r R0/(R0 + r) + r R (R + r)/((R + r)^2 + r^2).

    The zero-free box can be enlarged to constant R exactly when this fails.
    """
    if R0 < 2:
        raise ValueError("R0 must be at least 2")
    if r < 1 / (5.2 * math.log(3)):
        raise ValueError("r below the admissible range")
    lhs = 0.5 * (1 - 1 / math.sqrt(5)) + r
    rhs = r * R0 / (R0 + r) + r * R * (R + r) / ((R + r) ** 2 + r * r)
    return lhs >= rhs
