"""The exponent B with N(p) <= d_L^B for the least prime in a Chebotarev class.

The argument splits on the position of a possible exceptional zero beta_1:

* non-exceptional   no exceptional zero
* medium            1 - beta_1 in [lambda/L_x, 1/(R0 L)]
* small             [mu/L^nu-scaled, lambda/...]
* very small        down to (kappa C1)^2 / L
* extremely small   closer still, handled with the Gaussian kernel

Each of the first four cases fixes a kernel scale x = d_L^{c4} and reports
B = 2 theta c4; the last reports B = 5 c12. The overall exponent is the largest
of the five.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields, replace
from functools import lru_cache

from scipy.optimize import minimize, minimize_scalar

from .kernels import phi_theta
from .numerics import DEFAULT_QUADRATURE, NoRootError, bisect_min_root, integrate
from .profiles import DegreeProfile, delta0
from .repulsion import R0, R1, R_ZFR, RepulsionParams, optimize_repulsion, repulsion_pair, safe_round
from .zerodensity import c6_const, c13_const, omega

ALPHA0 = 1.25506
ALPHA3 = 2 / 101 + 32.16 * ALPHA0 / math.log(3)
V_SHIFT = 4.452 + 83 / 5

# E4 coefficients of the extremely-small case.
_E4_CONST = 19.17
_E4_ROOT = 5.4568
_E4_DOUBLE = 1.8292

# Table-2 style search ranges.
C4_RANGE = (1e-3, 1e3)
THETA_MAX = 3.0
EXPONENT_TOL = 1e-4


class InfeasibleError(ValueError):
    """Some case admits no exponent at the given parameters."""


@dataclass(frozen=True)
class CaseParams:
    """Free parameters; the defaults are the worked degree-9 point."""

    theta_ne: float = 12.83
    alpha_ne: float = 2.56
    theta_m: float = 1.02
    alpha_m: float = 5.85
    theta_s: float = 1.02
    alpha_s: float = 0.17
    theta_vs: float = 1.029
    alpha_vs: float = 0.67
    eps1: float = 5.57
    sigma1: float = 4.45
    eta: float = 0.025
    eps2: float = 5.97
    sigma2: float = 4.5
    kappa: float = 23.0
    lam: float = 0.2
    mu: float = 0.1
    nu: float = 1.15

    def __post_init__(self) -> None:
        for name in ("theta_ne", "theta_m", "theta_s", "theta_vs"):
            if not getattr(self, name) > 1:
                raise ValueError(f"{name} must exceed 1")
        for name in ("alpha_ne", "alpha_m", "alpha_s", "alpha_vs", "eps1", "eps2"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not (self.sigma1 >= 2 and self.sigma2 >= 2):
            raise ValueError("sigma1 and sigma2 must be at least 2")
        if not 0 < self.eta <= 1:
            raise ValueError("eta must lie in (0, 1]")
        if not self.kappa >= 1:
            raise ValueError("kappa must be at least 1")
        if not (0 < self.lam <= 1 and 0 < self.mu <= 1):
            raise ValueError("lambda and mu must lie in (0, 1]")
        if not 1 < self.nu <= 2:
            raise ValueError("nu must lie in (1, 2]")

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class CaseBound:
    case: str
    exponent: float
    B: float
    slack: float
    feasible: bool
    notes: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class StructuralConstants:
    alpha3: float
    W0: float
    W1: float
    c5: float


@dataclass(frozen=True)
class ExceptionalSetup:
    """Quantities shared by the four exceptional cases."""

    c1p: float
    c2p: float
    c8: float
    c4: float
    C1: float
    C2: float
    c6: float
    c13: float


def _w_prefactor(theta: float) -> float:
    q = 101.0 ** (-1.5 * (theta - 1))
    return ((1 + q) / (1 - q)) ** 2


def v_weight(t: float) -> float:
    return math.log(math.sqrt(0.25 + t * t) + 1) + V_SHIFT


@lru_cache(maxsize=4096)
def _structural(theta: float) -> StructuralConstants:
    pre = _w_prefactor(theta)

    def W(t: float) -> float:
        return pre * 9 / (9 + 4 * t * t)

    W0 = integrate(W, 0.0, math.inf, DEFAULT_QUADRATURE) / math.pi
    W1 = integrate(lambda t: v_weight(t) * W(t), 0.0, math.inf, DEFAULT_QUADRATURE) / math.pi
    c5 = 2 / math.log(3) + (4 / 909) * (W0 + (2 / math.log(3)) * W1)
    return StructuralConstants(ALPHA3, W0, W1, c5)


def structural_constants(theta: float, p: DegreeProfile | None = None) -> StructuralConstants:
    """alpha3, W0, W1 and c5; none of them depends on the profile."""
    if not theta > 1:
        raise ValueError("theta must exceed 1")
    return _structural(float(theta))


def c8_of(eps1: float, sigma1: float, eta: float, p: DegreeProfile) -> float:
    c1p, c2p = repulsion_pair("strip", RepulsionParams(eps1, sigma1, eta), p)
    if c1p >= 1:
        raise ValueError("c1' must be below 1")
    return 1 / (1 / c2p + R_ZFR * (1 + delta0(1, p)) * math.log(1 / c1p))


def c4_of(c8: float) -> float:
    return 1 / (2 * c8) + 0.001


def exceptional_setup(p: DegreeProfile, params: CaseParams) -> ExceptionalSetup:
    c1p, c2p = repulsion_pair("strip", RepulsionParams(params.eps1, params.sigma1, params.eta), p)
    c8 = c8_of(params.eps1, params.sigma1, params.eta, p)
    C1, C2 = repulsion_pair("strip", RepulsionParams(params.eps2, params.sigma2, 0.5), p)
    return ExceptionalSetup(c1p, c2p, c8, c4_of(c8), C1, C2, c6_const(p), c13_const(p))


def eta_condition(params: CaseParams, p: DegreeProfile) -> bool:
    s = exceptional_setup(p, params)
    L0 = p.L0
    lhs = (s.c2p / L0) * (max(math.log(s.c1p / (params.kappa * s.C1) ** 2), 0.0) + math.log(L0))
    return lhs <= params.eta


def range_chain(params: CaseParams, c4: float, p: DegreeProfile) -> tuple[float, float, float, float]:
    """The four members (kappa C1)^2/L, mu/(c4 L^{nu-1}), lambda/c4, 1/R0 at L = L0."""
    s = exceptional_setup(p, params)
    L0 = p.L0
    return ((params.kappa * s.C1) ** 2 / L0, params.mu / (c4 * L0 ** (params.nu - 1)),
            params.lam / c4, 1 / R0)


def range_chain_check(params: CaseParams, c4: float, p: DegreeProfile) -> bool:
    a, b, c, d = range_chain(params, c4, p)
    return a < b < c < d


def c7_value(t: float, theta: float, alpha: float, p: DegreeProfile) -> float:
    K = R_ZFR * (1 + delta0(1, p))
    return (4 * (1 + alpha * omega(alpha, p)) * ((1 + alpha) / alpha) ** 2
            * (1 + math.exp((1 - theta) * t / K)) ** 2)


def c11_value(theta: float, alpha: float, c4: float, c8: float, p: DegreeProfile) -> float:
    base = ((1 + alpha) / alpha) ** 2
    decay = (1 + math.exp(-(theta - 1) * c4 * c8 * math.log(R0))) ** 2
    return decay * R1 * (base * (R1 + 2 * alpha * omega(alpha, p)) - R1)


# Error terms. Each takes the exponent t (c4 or c12) and is positive.

def e0(t: float, theta: float, p: DegreeProfile) -> float:
    L0, Q0 = p.L0, p.Q0
    c5 = structural_constants(theta).c5
    return (c6_const(p) / L0 + (R0 / L0) ** 2 * math.exp(-2 * t * L0 / R0)
            + Q0 * ALPHA3 * (theta - 1) * t * L0 * math.exp(-t * L0)
            + (c5 / L0) * math.exp(-2 * t * L0))


def e1(t: float, theta: float, p: DegreeProfile) -> float:
    L0, Q0 = p.L0, p.Q0
    c5 = structural_constants(theta).c5
    return (c6_const(p) / L0 + Q0 * ALPHA3 * (theta - 1) * L0 * t * math.exp(-t * L0)
            + 4 / (L0 - 0.5) ** 2 * math.exp(-t * (2 * L0 - 1))
            + (c5 / L0) * math.exp(-2 * t * L0))


def _exceptional_bracket(t: float, theta: float, p: DegreeProfile) -> float:
    L0, Q0 = p.L0, p.Q0
    c5 = structural_constants(theta).c5
    return (Q0 * ALPHA3 * (theta - 1) * L0 ** 2 * t * math.exp(-t * L0)
            + 4 / (L0 * (1 - 1 / (2 * L0)) ** 2) * math.exp(-t * (2 * L0 - 1))
            + c5 * math.exp(-2 * t * L0))


def e2(t: float, theta: float, mu: float, nu: float, p: DegreeProfile) -> float:
    return _exceptional_bracket(t, theta, p) * t * p.L0 ** (nu - 2) / mu


def e3(t: float, theta: float, kappa_c1: float, p: DegreeProfile) -> float:
    return _exceptional_bracket(t, theta, p) / kappa_c1 ** 2


def e4(t: float, c3: float, p: DegreeProfile) -> float:
    L0, Q0 = p.L0, p.Q0
    return (c13_const(p) / 2 * math.exp(-(1.25 * t - c3) * L0)
            + (_E4_CONST + _E4_ROOT * Q0 * L0 ** 1.5 * math.sqrt(t)) * math.exp(-(t - c3) * L0)
            + _E4_DOUBLE * math.exp(-(2 * t - c3) * L0))


# Slack functions: the case holds at exponent t when the slack is positive.

def slack_nonexceptional(t: float, theta: float, alpha: float, p: DegreeProfile) -> float:
    K = R_ZFR * (1 + delta0(1, p))
    return ((theta - 1) ** 2 * t * t - c7_value(t, theta, alpha, p) * math.exp(-2 * t / K)
            - e0(t, theta, p))


def slack_medium(theta: float, alpha: float, params: CaseParams, s: ExceptionalSetup,
                 p: DegreeProfile) -> float:
    c4, c8 = s.c4, s.c8
    c11 = c11_value(theta, alpha, c4, c8, p)
    return (phi_theta(theta, params.lam) * c4 * c4 - c11 * R0 ** (-2 * c4 * c8)
            - e1(c4, theta, p))


def slack_small(theta: float, alpha: float, params: CaseParams, s: ExceptionalSetup,
                p: DegreeProfile) -> float:
    c4, c8, L0 = s.c4, s.c8, p.L0
    lam, mu, nu = params.lam, params.mu, params.nu
    c11 = c11_value(theta, alpha, c4, c8, p)
    return (2 * (theta - 1) ** 2 * math.exp(-2 * lam) * c4 ** 3
            - c11 * (lam / c4) ** (2 * c4 * c8 - 1)
            - s.c6 * c4 * L0 ** (nu - 2) / mu - e2(c4, theta, mu, nu, p))


def slack_very_small(theta: float, alpha: float, params: CaseParams, s: ExceptionalSetup,
                     p: DegreeProfile) -> float:
    c4, c8, L0 = s.c4, s.c8, p.L0
    mu, nu = params.mu, params.nu
    kc1 = params.kappa * s.C1
    c11 = c11_value(theta, alpha, c4, c8, p)
    scale = L0 ** (nu - 1)
    return (2 * (theta - 1) ** 2 * math.exp(-2 * mu / scale) * c4 ** 3
            - c11 * (mu / (c4 * scale)) ** (2 * c4 * c8 - 1)
            - s.c6 / kc1 ** 2 - e3(c4, theta, kc1, p))


def phi0(t: float, kappa_c1: float, L0: float) -> float:
    k2 = kappa_c1 ** 2
    return math.exp(-3 * k2 * t / L0) * (3 - 2 * k2 / L0 ** 2)


def slack_extremely_small(t: float, params: CaseParams, s: ExceptionalSetup, c3: float,
                          p: DegreeProfile) -> float:
    L0, kappa = p.L0, params.kappa
    return (phi0(t, kappa * s.C1, L0) * t
            - (s.c13 * kappa ** 2 / 2) * (kappa ** 2 * s.C1 / L0) ** (2 * t * s.C2 - 2)
            - e4(t, c3, p))


# Case solvers.

def case_nonexceptional(p: DegreeProfile, theta: float, alpha: float,
                        tol: float = EXPONENT_TOL) -> CaseBound:
    F = lambda t: slack_nonexceptional(t, theta, alpha, p)
    try:
        c4 = bisect_min_root(F, *C4_RANGE, tol)
    except NoRootError:
        return CaseBound("non-exceptional", math.nan, math.inf, F(C4_RANGE[1]), False)
    return CaseBound("non-exceptional", c4, 2 * theta * c4, F(c4), True)


def _preconditions(params: CaseParams, s: ExceptionalSetup, p: DegreeProfile) -> tuple[str, ...]:
    notes = []
    if not eta_condition(params, p):
        notes.append("eta condition fails")
    if not range_chain_check(params, s.c4, p):
        notes.append("range chain fails at L0")
    return tuple(notes)


def _fixed_c4_case(name: str, slack, theta: float, alpha: float, p: DegreeProfile,
                   params: CaseParams, setup: ExceptionalSetup | None) -> CaseBound:
    s = setup or exceptional_setup(p, params)
    value = slack(theta, alpha, params, s, p)
    notes = _preconditions(params, s, p)
    return CaseBound(name, s.c4, 2 * theta * s.c4, value, value > 0 and not notes, notes)


def case_medium(p: DegreeProfile, params: CaseParams,
                setup: ExceptionalSetup | None = None) -> CaseBound:
    return _fixed_c4_case("medium", slack_medium, params.theta_m, params.alpha_m, p, params, setup)


def case_small(p: DegreeProfile, params: CaseParams,
               setup: ExceptionalSetup | None = None) -> CaseBound:
    return _fixed_c4_case("small", slack_small, params.theta_s, params.alpha_s, p, params, setup)


def case_very_small(p: DegreeProfile, params: CaseParams,
                    setup: ExceptionalSetup | None = None) -> CaseBound:
    return _fixed_c4_case("very small", slack_very_small, params.theta_vs, params.alpha_vs,
                          p, params, setup)


def case_extremely_small(p: DegreeProfile, params: CaseParams, c3: float,
                         setup: ExceptionalSetup | None = None,
                         tol: float = EXPONENT_TOL) -> CaseBound:
    s = setup or exceptional_setup(p, params)
    F = lambda t: slack_extremely_small(t, params, s, c3, p)
    lo = max(1 / s.C2, c3) * (1 + 1e-12)
    try:
        c12 = bisect_min_root(F, lo, C4_RANGE[1], tol)
    except NoRootError:
        return CaseBound("extremely small", math.nan, math.inf, F(C4_RANGE[1]), False)
    notes = []
    if c12 * p.L0 < 10 * math.log(10):
        notes.append("x = d0^c12 below 1e10")
    return CaseBound("extremely small", c12, 5 * c12, F(c12), not notes, tuple(notes))


CASE_NAMES = ("non-exceptional", "medium", "small", "very small", "extremely small")


def default_c3(p: DegreeProfile) -> float:
    """c3 for the profile from the repulsion optimizer at eta = 1, rounded up."""
    _, consts = optimize_repulsion(p, 1.0)
    return safe_round(consts.c3, 4, "up")


def evaluate_cases(p: DegreeProfile, params: CaseParams, c3: float | None = None) -> dict[str, CaseBound]:
    if c3 is None:
        c3 = default_c3(p)
    s = exceptional_setup(p, params)
    bounds = [
        case_nonexceptional(p, params.theta_ne, params.alpha_ne),
        case_medium(p, params, s),
        case_small(p, params, s),
        case_very_small(p, params, s),
        case_extremely_small(p, params, c3, s),
    ]
    return {b.case: b for b in bounds}


def overall_B(p: DegreeProfile, params: CaseParams, c3: float | None = None) -> float:
    cases = evaluate_cases(p, params, c3)
    bad = [name for name, b in cases.items() if not b.feasible]
    if bad:
        raise InfeasibleError(f"infeasible cases: {', '.join(bad)}")
    return max(b.B for b in cases.values())


# Optimizer.

def _min_theta(slack_of_theta, tol: float = 1e-7) -> float:
    return bisect_min_root(slack_of_theta, 1.0 + 1e-6, THETA_MAX, tol)


def _best_theta_alpha(slack, params: CaseParams, s: ExceptionalSetup, p: DegreeProfile,
                      alpha0: float, optimize_alpha: bool) -> tuple[float, float]:
    def theta_for(alpha: float) -> float:
        try:
            return _min_theta(lambda th: slack(th, alpha, params, s, p))
        except NoRootError:
            return math.inf

    if not optimize_alpha:
        return theta_for(alpha0), alpha0
    res = minimize_scalar(lambda la: theta_for(math.exp(la)),
                          bracket=(math.log(alpha0) - 0.5, math.log(alpha0)),
                          tol=1e-6, options={"maxiter": 60})
    alpha = math.exp(res.x)
    theta = theta_for(alpha)
    if theta_for(alpha0) <= theta:
        return theta_for(alpha0), alpha0
    return theta, alpha


def best_nonexceptional(p: DegreeProfile, theta0: float = 12.83, alpha0: float = 2.56) -> tuple[float, float]:
    """(theta, alpha) minimizing the non-exceptional B."""

    def objective(v) -> float:
        theta, alpha = 1 + math.exp(v[0]), math.exp(v[1])
        return case_nonexceptional(p, theta, alpha).B

    start = [math.log(theta0 - 1), math.log(alpha0)]
    res = minimize(objective, start, method="Nelder-Mead",
                   options={"xatol": 1e-4, "fatol": 1e-5, "maxiter": 300})
    v = res.x if res.fun <= objective(start) else start
    return 1 + math.exp(v[0]), math.exp(v[1])


def optimal_eps2(p: DegreeProfile, sigma2: float = 4.5) -> float:
    """eps2 maximizing C1 = c1'(eps2, sigma2, 1/2); larger C1 shrinks the very-small penalty."""
    res = minimize_scalar(
        lambda e: -repulsion_pair("strip", RepulsionParams(e, sigma2, 0.5), p)[0],
        bounds=(0.1, 60.0), method="bounded", options={"xatol": 1e-8})
    return float(res.x)


def optimize_B(p: DegreeProfile, base: CaseParams | None = None, c3: float | None = None,
               optimize_alpha: bool = False) -> tuple[CaseParams, float]:
    """Best overall B starting from the worked degree-9 parameters.

    eps2 is re-chosen for the degree; for each exceptional case theta is the
    smallest value with positive slack (alpha fixed unless ``optimize_alpha``);
    the non-exceptional (theta, alpha) are optimized jointly. The remaining
    parameters keep their base values. Returns B rounded up to 4 digits.
    """
    params = replace(base or CaseParams(), eps2=optimal_eps2(p, (base or CaseParams()).sigma2))
    s = exceptional_setup(p, params)
    th_m, al_m = _best_theta_alpha(slack_medium, params, s, p, params.alpha_m, optimize_alpha)
    th_s, al_s = _best_theta_alpha(slack_small, params, s, p, params.alpha_s, optimize_alpha)
    th_v, al_v = _best_theta_alpha(slack_very_small, params, s, p, params.alpha_vs, optimize_alpha)
    th_ne, al_ne = best_nonexceptional(p, params.theta_ne, params.alpha_ne)
    params = replace(params, theta_m=th_m, alpha_m=al_m, theta_s=th_s, alpha_s=al_s,
                     theta_vs=th_v, alpha_vs=al_v, theta_ne=th_ne, alpha_ne=al_ne)
    return params, safe_round(overall_B(p, params, c3), 4, "up")


# Lower bound for the prime counting function in a class.

@dataclass(frozen=True)
class LowerBoundExternals:
    c35: float
    c39: float
    c40: float
    c41: float


@dataclass(frozen=True)
class LowerBoundResult:
    a: float
    c43: float
    m: float
    approximate: bool
    externals: LowerBoundExternals


# Stand-in for the external zero-repulsion constant entering c35.
_C35_REPULSION = 0.04233


def default_externals(a: float, c6ext: float = 11.7) -> LowerBoundExternals:
    """Rough stand-ins for the externally defined constants (a close to 1)."""
    c39 = 1 / math.sqrt(R_ZFR)
    return LowerBoundExternals(
        c35=2 / (c6ext * math.log(3)) * _C35_REPULSION,
        c39=c39,
        c40=math.sqrt(a),
        c41=(5.7868 * c39 / c6ext) * (a + 1) / math.log(a),
    )


def lower_bound_m(a: float, externals: LowerBoundExternals | None = None,
                  c6ext: float = 11.7) -> LowerBoundResult:
    """m = c43(a)/a in pi_C(x) >= m (|C|/|G|) x/log x."""
    if not 1 < a <= 2:
        raise ValueError("a must lie in (1, 2]")
    approximate = externals is None
    ext = externals or default_externals(a, c6ext)
    x0 = 3.0 ** c6ext
    root = math.sqrt(x0 / 2)
    c43 = (0.49 * (a - 1) / math.log(a) - ext.c41 * math.exp(-ext.c39 * root)
           - (ext.c35 * x0 * math.log(x0) + ext.c40 * x0) * math.exp(-root))
    return LowerBoundResult(a, c43, c43 / a, approximate, ext)


def read_externals(path: str) -> LowerBoundExternals:
    from .cli import ConfigError, read_key_values

    values = read_key_values(path)
    missing = [k for k in ("c35", "c39", "c40", "c41") if k not in values]
    if missing:
        raise ConfigError(f"{path}: missing {', '.join(missing)}")
    try:
        return LowerBoundExternals(**{k: float(values[k]) for k in ("c35", "c39", "c40", "c41")})
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
