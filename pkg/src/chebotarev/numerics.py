"""Real special functions, quadrature and root finding shared by the other modules."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate as _spi

EULER_GAMMA = 0.5772156649015329

# Bernoulli-number coefficients B_{2k}/(2k) of the digamma asymptotic series.
_DIGAMMA_SERIES = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)
_DIGAMMA_SHIFT = 10.0


class IntegrationError(RuntimeError):
    """Quadrature did not reach the requested tolerance."""

    def __init__(self, message: str, estimate: float, error: float):
        super().__init__(f"{message} (estimate={estimate!r}, error={error!r})")
        self.estimate = estimate
        self.error = error


class NoRootError(ValueError):
    """The objective is not positive at the top of the search interval."""


@dataclass(frozen=True)
class QuadratureSpec:
    rtol: float = 1e-9
    atol: float = 1e-14
    max_depth: int = 500

    def __post_init__(self) -> None:
        if not (self.rtol > 0 and self.atol >= 0):
            raise ValueError("quadrature tolerances must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")


DEFAULT_QUADRATURE = QuadratureSpec()


def digamma(x: float) -> float:
    """Gamma'/Gamma at a positive real point.

    Shifts the argument above 10 with psi(x) = psi(x+1) - 1/x and then sums the
    asymptotic series, which is accurate to about 1e-16 at that height.
    """
    if not x > 0:
        raise ValueError(f"digamma is only defined here for x > 0, got {x}")
    shift = []
    while x < _DIGAMMA_SHIFT:
        shift.append(1.0 / x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    for coeff in reversed(_DIGAMMA_SERIES):
        tail = tail * inv2 + coeff
    value = math.log(x) - 0.5 / x - tail * inv2
    return value - math.fsum(shift)


def _g_integrand(sigma: float, t):
    return np.log(np.sqrt(sigma * sigma + t * t) / (t + 2.0)) - sigma / (sigma * sigma + t * t)


def _golden_max(f: Callable[[float], float], a: float, b: float, tol: float = 1e-12) -> tuple[float, float]:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol * max(1.0, abs(a) + abs(b)):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    x = (a + b) / 2.0
    return x, f(x)


def g_bound(sigma: float, t0: float) -> float:
    """The constant g(sigma, T0) bounding Re Gamma'/Gamma on vertical segments.

    For finite T0 the maximum over |t| <= T0 is located on a grid of step 1e-3
    (at most 2e5 cells) and refined by golden-section search. For T0 = inf the
    closed majorant 1/2 log(sigma^2/4 + 1) + 1/(3 sigma^2) - log 2 is returned.
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if t0 < 0:
        raise ValueError(f"t0 must be non-negative, got {t0}")
    tail = 1.0 / (3.0 * sigma * sigma) - math.log(2.0)
    if math.isinf(t0):
        return 0.5 * math.log(sigma * sigma / 4.0 + 1.0) + tail
    if t0 == 0:
        return float(_g_integrand(sigma, 0.0)) + tail
    cells = min(200_000, max(1, math.ceil(t0 / 1e-3)))
    grid = np.linspace(0.0, t0, cells + 1)
    vals = _g_integrand(sigma, grid)
    i = int(np.argmax(vals))
    best = float(vals[i])
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, cells)]
    if hi > lo:
        _, refined = _golden_max(lambda t: float(_g_integrand(sigma, t)), lo, hi)
        best = max(best, refined)
    return best + tail


def integrate(f: Callable[[float], float], a: float, b: float,
              spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Adaptive Gauss-Kronrod quadrature (QUADPACK) of f over [a, b].

    ``b`` may be ``math.inf``; the infinite range is mapped onto a finite one.
    Raises IntegrationError carrying the best estimate when the tolerance is
    not met within ``spec.max_depth`` subdivisions.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", _spi.IntegrationWarning)
        out = _spi.quad(f, a, b, epsabs=spec.atol, epsrel=spec.rtol,
                        limit=spec.max_depth, full_output=1)
    value, err = out[0], out[1]
    if len(out) > 3:
        raise IntegrationError(str(out[3]).splitlines()[0], value, err)
    return value


def bisect_min_root(F: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    """Smallest x in [lo, hi], to within ``tol``, at which F becomes positive.

    Returns x with F(x) > 0 and either x == lo or F at some point within ``tol``
    below x non-positive.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if not F(hi) > 0:
        raise NoRootError(f"no admissible value in [{lo}, {hi}]")
    if F(lo) > 0:
        return lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if F(mid) > 0:
            hi = mid
        else:
            lo = mid
    return hi
