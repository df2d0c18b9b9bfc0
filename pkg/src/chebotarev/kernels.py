"""Mellin kernel pairs used in the explicit formula, and the weight phi_theta."""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

# Below this distance from a removable singularity the kernel is evaluated
# from its Taylor expansion.
_SERIES_RADIUS = 1e-4
_SERIES_TERMS = 6


class KernelKind(enum.Enum):
    SQUARED_DIFFERENCE = "squared-difference"
    GAUSSIAN = "gaussian"
    LOWER_BOUND = "lower-bound"


@dataclass(frozen=True)
class KernelSpec:
    kind: KernelKind
    x: float
    theta: float | None = None
    a: float | None = None

    def __post_init__(self) -> None:
        if not self.x > 1:
            raise ValueError("kernel scale x must exceed 1")
        if self.kind is KernelKind.SQUARED_DIFFERENCE:
            if self.theta is None or not self.theta > 1:
                raise ValueError("squared-difference kernel needs theta > 1")
        if self.kind is KernelKind.LOWER_BOUND:
            if self.a is None or not 1 < self.a <= 2:
                raise ValueError("lower-bound kernel needs 1 < a <= 2")
            if self.a > self.x:
                raise ValueError("lower-bound kernel needs a <= x")

    @property
    def log_x(self) -> float:
        return math.log(self.x)


def squared_difference(x: float, theta: float) -> KernelSpec:
    return KernelSpec(KernelKind.SQUARED_DIFFERENCE, x, theta=theta)


def gaussian(x: float) -> KernelSpec:
    return KernelSpec(KernelKind.GAUSSIAN, x)


def lower_bound(x: float, a: float) -> KernelSpec:
    return KernelSpec(KernelKind.LOWER_BOUND, x, a=a)


def _expm1_over(c: float, w: complex) -> complex:
    """(e^{c w} - 1)/w, by series when w is tiny."""
    if abs(w) < _SERIES_RADIUS:
        total, term = 0j, complex(c)
        for k in range(1, _SERIES_TERMS + 1):
            total += term
            term *= c * w / (k + 1)
        return total
    return (cmath.exp(c * w) - 1.0) / w


def k_eval(spec: KernelSpec, s: complex) -> complex:
    s = complex(s)
    lx = spec.log_x
    if spec.kind is KernelKind.SQUARED_DIFFERENCE:
        w = s - 1.0
        # (x^{theta w} - x^{w})/w = x^{w} (x^{(theta-1) w} - 1)/w
        ratio = cmath.exp(lx * w) * _expm1_over((spec.theta - 1.0) * lx, w)
        return ratio * ratio
    if spec.kind is KernelKind.GAUSSIAN:
        return cmath.exp(lx * (s * s + s))
    la = math.log(spec.a)
    return _expm1_over(lx, s) * _expm1_over(la, s) / la


def _k_eval_array(spec: KernelSpec, s: np.ndarray) -> np.ndarray:
    """Vectorized kernel values away from the removable points."""
    lx = spec.log_x
    if spec.kind is KernelKind.SQUARED_DIFFERENCE:
        w = s - 1.0
        ratio = (np.exp(spec.theta * lx * w) - np.exp(lx * w)) / w
        return ratio * ratio
    if spec.kind is KernelKind.GAUSSIAN:
        return np.exp(lx * (s * s + s))
    la = math.log(spec.a)
    return np.expm1(lx * s) * np.expm1(la * s) / (s * s * la)


def k_hat(spec: KernelSpec, u: float) -> float:
    """Inverse Mellin transform (1/2 pi i) int_{(2)} k(s) u^{-s} ds."""
    if not u > 0:
        raise ValueError("u must be positive")
    lx = spec.log_x
    lu = math.log(u)
    if spec.kind is KernelKind.SQUARED_DIFFERENCE:
        th = spec.theta
        if lu <= 2 * lx or lu >= 2 * th * lx:
            return 0.0
        if lu <= (th + 1) * lx:
            return (lu - 2 * lx) / u
        return (2 * th * lx - lu) / u
    if spec.kind is KernelKind.GAUSSIAN:
        return math.exp(-(lu - lx) ** 2 / (4 * lx)) / math.sqrt(4 * math.pi * lx)
    la = math.log(spec.a)
    if lu <= 0 or lu > la + lx:
        return 0.0
    if lu < la:
        return lu / la
    if lu <= lx:
        return 1.0
    return (la + lx - lu) / la


def _gauss_legendre_panels(f, t_max: float, panel: float, nodes: int = 16) -> float:
    xg, wg = np.polynomial.legendre.leggauss(nodes)
    n_panels = max(1, math.ceil(t_max / panel))
    edges = np.linspace(0.0, t_max, n_panels + 1)
    total = 0.0
    step = 20_000
    for start in range(0, n_panels, step):
        stop = min(start + step, n_panels)
        lo = edges[start:stop][:, None]
        hi = edges[start + 1:stop + 1][:, None]
        half = 0.5 * (hi - lo)
        t = lo + half + half * xg[None, :]
        total += float(np.sum(half * wg[None, :] * f(t)))
    return total


def mellin_invert(spec: KernelSpec, u: float, c: float = 2.0, t_max: float | None = None) -> float:
    """Numerical inverse Mellin transform along Re s = c.

    The integrand k(c+it) u^{-c-it} is conjugate-symmetric in t, so the value is
    (1/pi) int_0^T Re(...) dt. For the Gaussian kernel T is where the integrand
    falls below 1e-18; for the other two kernels the integrand is an oscillating
    O(1/t^2) term and T defaults to 2e4, leaving a truncation error of order
    1/(omega T^2) where omega is the distance from log u to the nearest
    breakpoint of k_hat.
    """
    lu = math.log(u)

    def integrand(t):
        s = c + 1j * t
        return np.real(_k_eval_array(spec, s) * np.exp(-s * lu))

    if spec.kind is KernelKind.GAUSSIAN:
        lx = spec.log_x
        if t_max is None:
            log_peak = lx * (c * c + c) - c * lu
            t_max = math.sqrt(max(c * c + c + (log_peak + 42.0) / lx, 1.0))
        panel = min(0.05, t_max / 64)
    else:
        if t_max is None:
            t_max = 2e4
        panel = 0.5
    return _gauss_legendre_panels(integrand, t_max, panel) / math.pi


def phi_theta(theta: float, v: float) -> float:
    """(theta-1)^2 - ((e^{-v} - e^{-theta v})/v)^2, with limit 0 at v = 0."""
    if not theta > 1:
        raise ValueError("theta must exceed 1")
    if v < 0:
        raise ValueError("v must be non-negative")
    if v == 0:
        return 0.0
    t1 = theta - 1.0
    q = -math.exp(-v) * math.expm1(-t1 * v) / v
    if theta * v < 1e-2:
        # t1 - q = sum_{k>=2} (-1)^k (theta^k - 1) v^{k-1} / k!, avoiding cancellation
        terms, tk, vk, fact = [], theta, 1.0, 1.0
        for k in range(2, 12):
            tk *= theta
            vk *= v
            fact *= k
            terms.append((-1) ** k * (tk - 1.0) * vk / fact)
        return math.fsum(terms) * (t1 + q)
    return t1 * t1 - q * q


def phi_lower(theta: float, v: float, b: float) -> float:
    """Linear minorant 2(theta-1)^2 e^{-2b} v of phi_theta on [0, b]."""
    if not theta > 1:
        raise ValueError("theta must exceed 1")
    if not 0 <= v <= b:
        raise ValueError(f"need 0 <= v <= b, got v={v}, b={b}")
    return 2.0 * (theta - 1.0) ** 2 * math.exp(-2.0 * b) * v
