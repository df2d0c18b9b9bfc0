"""Fast internal consistency checks run by ``chebotarev selfcheck``."""

from __future__ import annotations

import math

from . import frobenius, kernels, leastprime, numerics, profiles, repulsion, turan, zerodensity


def _digamma_recurrence():
    worst = max(abs(numerics.digamma(x + 1) - numerics.digamma(x) - 1 / x)
                for x in [0.5 * k for k in range(1, 101)])
    return worst < 1e-12, f"max recurrence error {worst:.2e}"


def _closed_constants():
    ok = abs(leastprime.ALPHA3 - 36.7595) < 1e-3
    ok &= not any(repulsion.zfr_enlarged_check(2, 0.6, 1.7 + 0.01 * k) for k in range(831))
    ok &= not any(repulsion.zfr_enlarged_check(3.5, 0.6, 1.24 + 0.01 * k) for k in range(877))
    return ok, f"alpha3={leastprime.ALPHA3:.6f}"


def _c6_routes():
    p = profiles.profile(9, "2.29e7")
    a, b = zerodensity.c6_const(p), zerodensity.c6_const(p, quadrature=True)
    return abs(a - b) < 1e-8, f"closed {a:.10f} vs quadrature {b:.10f}"


def _worked_example():
    p = profiles.profile(9, "2.29e7")
    cases = leastprime.evaluate_cases(p, leastprime.CaseParams(), c3=9.85)
    exceptional = [c for name, c in cases.items() if name != "non-exceptional"]
    ok = all(c.feasible for c in exceptional)
    worst = max(c.B for c in exceptional)
    return ok and abs(worst / 309.5380 - 1) < 5e-3, f"exceptional-case max B={worst:.4f}"


def _turan():
    s = turan.run_trials(1000, seed=12345)
    return s.passed, f"{s.trials} trials, {s.failures} failures, max j0={s.max_j0}"


def _kernels():
    specs = [kernels.squared_difference(3.0, 1.5), kernels.gaussian(3.0), kernels.lower_bound(5.0, 1.5)]
    us = [1.3, 2.2, 3.7, 6.1, 11.5, 18.0, 24.0]
    worst = max(abs(kernels.mellin_invert(s, u) - kernels.k_hat(s, u)) for s in specs for u in us)
    return worst < 1e-6, f"max inversion error {worst:.2e}"


def _quadratic():
    worst = frobenius.corpus_scan(frobenius.quadratic_corpus(16)).worst[2]
    got = (worst["A"].value, worst["B"].value, worst["C"].value)
    ok = all(abs(g - e) < 1e-3 for g, e in zip(got, (1.7712, 5.7997, 136.0600)))
    return ok, "A,B,C = " + ", ".join(f"{g:.4f}" for g in got)


CHECKS = {
    "digamma recurrence": _digamma_recurrence,
    "closed constants": _closed_constants,
    "c6 two routes": _c6_routes,
    "worked degree-9 exceptional cases": _worked_example,
    "power-sum witnesses": _turan,
    "Mellin inversion": _kernels,
    "quadratic height 16": _quadratic,
}


def run_checks() -> list[tuple[str, bool, str]]:
    out = []
    for name, check in CHECKS.items():
        try:
            ok, detail = check()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, bool(ok), detail))
    return out
