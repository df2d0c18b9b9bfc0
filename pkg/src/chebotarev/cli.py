"""Command-line front end.

Subcommands: repulsion, least-prime, lower-bound, turan, verify-quadratic,
verify-corpus, selfcheck. Options may also come from a ``key = value`` config
file given with --config; command-line flags take precedence.

Exit status: 0 success, 1 infeasible or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Callable, Sequence

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


def read_key_values(path: str) -> dict[str, str]:
    """Parse ``key = value`` lines; '#' starts a comment."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    out: dict[str, str] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip().replace("_", "-"), value.strip()
        if not sep or not key or not value:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        out[key] = value
    return out


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


# Config keys and their converters; names match the long flags.
CONFIG_KEYS: dict[str, Callable[[str], Any]] = {
    "profile": int, "all": _bool, "eta": float, "optimize": _bool, "worked-params": _bool,
    "height": int, "ceiling": int, "trials": int, "seed": int, "a": float,
    "constants": str, "format": str, "out": str, "workers": int, "detail": _bool,
}


def _fmt(value: Any) -> Any:
    if isinstance(value, float):
        return "nan" if math.isnan(value) else f"{value:.10g}"
    return value


def render(rows: list[dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        clean = [{k: (float(_fmt(v)) if isinstance(v, float) and math.isfinite(v) else v)
                  for k, v in r.items()} for r in rows]
        return json.dumps(clean, indent=2) + "\n"
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _fmt(v) for k, v in r.items()})
    return buf.getvalue()


def _rounding(directions: dict[str, str]) -> str:
    return ";".join(f"{k}={v}" for k, v in directions.items())


# Commands. Each returns (rows, exit status).

def _selected_profiles(args, profiles):
    from .profiles import find_profile

    if args.profile is not None and not args.all:
        return [find_profile(profiles, args.profile)]
    return profiles


def cmd_repulsion(args) -> tuple[list[dict], int]:
    from .profiles import builtin_profiles
    from .repulsion import RepulsionConstants, optimize_repulsion

    eta = 1.0 if args.eta is None else args.eta
    if not 0 < eta <= 1:
        raise ConfigError("eta must lie in (0, 1]")
    rows = []
    for p in _selected_profiles(args, builtin_profiles()):
        _, consts = optimize_repulsion(p, eta)
        r = consts.rounded()
        rows.append({"n0": p.label, "d0": p.d0_text, "c1": r.c1, "c2": r.c2, "c1p": r.c1p,
                     "c2p": r.c2p, "c1pp": r.c1pp, "c2pp": r.c2pp, "c3": r.c3,
                     "rounding": _rounding(RepulsionConstants.ROUNDING)})
    return rows, EXIT_OK


def cmd_least_prime(args) -> tuple[list[dict], int]:
    from .leastprime import CaseParams, default_c3, evaluate_cases, optimize_B
    from .profiles import leastprime_profiles
    from .repulsion import safe_round

    status = EXIT_OK
    rows = []
    for p in _selected_profiles(args, leastprime_profiles()):
        c3 = default_c3(p)
        params = optimize_B(p, c3=c3)[0] if args.optimize else CaseParams()
        cases = evaluate_cases(p, params, c3)
        feasible = all(b.feasible for b in cases.values())
        status = status if feasible else EXIT_FAIL
        up = [safe_round(b.B, 4, "up") for b in cases.values()]
        rows.append({"n0": p.label, "d0": p.d0_text, "B_ne": up[0], "B_med": up[1],
                     "B_small": up[2], "B_vsmall": up[3], "B_xsmall": up[4],
                     "B": max(up) if feasible else math.nan, "feasible": feasible,
                     "rounding": "B*=up"})
    return rows, status


def cmd_lower_bound(args) -> tuple[list[dict], int]:
    from .leastprime import lower_bound_m, read_externals

    if args.a is None:
        raise ConfigError("lower-bound needs --a")
    ext = read_externals(args.constants) if args.constants else None
    res = lower_bound_m(args.a, ext)
    return [{"a": res.a, "c43": res.c43, "m": res.m,
             "status": "approximate" if res.approximate else "exact-constants",
             "c35": res.externals.c35, "c39": res.externals.c39, "c40": res.externals.c40,
             "c41": res.externals.c41, "rounding": "c43=nearest;m=nearest"}], EXIT_OK


def cmd_turan(args) -> tuple[list[dict], int]:
    from .turan import run_trials

    trials = 10_000 if args.trials is None else args.trials
    seed = 0 if args.seed is None else args.seed
    s = run_trials(trials, seed)
    return [{"trials": s.trials, "seed": seed, "failures": s.failures, "max_j0": s.max_j0,
             "max_ratio": s.max_ratio, "result": "pass" if s.passed else "fail",
             "rounding": "max_ratio=nearest"}], EXIT_OK if s.passed else EXIT_FAIL


def _scan_rows(report, detail: bool) -> list[dict]:
    rows = []
    if detail:
        for r in report.rows:
            e = r.result.exponents if r.result else None
            rows.append({"degree": r.degree, "worst": "", "disc": r.discriminant, "sigma": r.sigma,
                         "p": r.result.p if r.result else "", "A": e.A if e else math.nan,
                         "B": e.B if e else math.nan, "C": e.C if e else math.nan,
                         "skipped": " ".join(map(str, r.result.skipped)) if r.result else "",
                         "rounding": "A,B,C=nearest"})
        return rows
    by_key = {(r.degree, r.discriminant, r.sigma): r for r in report.rows}
    for degree in sorted(report.worst):
        for shape, w in sorted(report.worst[degree].items()):
            e = by_key[(degree, w.discriminant, w.sigma)].result.exponents
            rows.append({"degree": degree, "worst": shape, "disc": w.discriminant,
                         "sigma": w.sigma, "p": w.p, "A": e.A, "B": e.B, "C": e.C,
                         "rounding": "A,B,C=nearest"})
    return rows


def cmd_verify_quadratic(args) -> tuple[list[dict], int]:
    from .frobenius import DEFAULT_CEILING, corpus_scan, quadratic_corpus

    height = 16 if args.height is None else args.height
    if height < 3:
        raise ConfigError("height must be at least 3")
    report = corpus_scan(quadratic_corpus(height), args.ceiling or DEFAULT_CEILING, args.workers or 1)
    return _scan_rows(report, bool(args.detail)), EXIT_FAIL if report.failures else EXIT_OK


def cmd_verify_corpus(args) -> tuple[list[dict], int]:
    from .frobenius import DEFAULT_CEILING, corpus_scan, read_corpus

    report = corpus_scan(read_corpus(args.corpus), args.ceiling or DEFAULT_CEILING, args.workers or 1)
    return _scan_rows(report, bool(args.detail)), EXIT_FAIL if report.failures else EXIT_OK


def cmd_selfcheck(args) -> tuple[list[dict], int]:
    from .selfcheck import run_checks

    results = run_checks()
    rows = [{"check": name, "result": "pass" if ok else "fail", "detail": detail}
            for name, ok, detail in results]
    return rows, EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


COMMANDS = {
    "repulsion": cmd_repulsion,
    "least-prime": cmd_least_prime,
    "lower-bound": cmd_lower_bound,
    "turan": cmd_turan,
    "verify-quadratic": cmd_verify_quadratic,
    "verify-corpus": cmd_verify_corpus,
    "selfcheck": cmd_selfcheck,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--config", default=None, help="key = value file; flags win")
    common.add_argument("--workers", type=int, default=None)

    parser = argparse.ArgumentParser(prog="chebotarev", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def profile_flags(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--profile", type=int, default=None, metavar="N")
        g.add_argument("--all", action="store_const", const=True, default=None)

    sp = sub.add_parser("repulsion", parents=[common], help="repulsion constants per degree")
    profile_flags(sp)
    sp.add_argument("--eta", type=float, default=None)

    sp = sub.add_parser("least-prime", parents=[common], help="exponent B per degree")
    profile_flags(sp)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--optimize", action="store_const", const=True, default=None)
    g.add_argument("--worked-params", dest="worked_params", action="store_const", const=True,
                   default=None, help="use the fixed worked degree-9 parameters")

    sp = sub.add_parser("lower-bound", parents=[common], help="density constant m")
    sp.add_argument("--a", type=float, default=None)
    sp.add_argument("--constants", default=None, help="key = value file with c35 c39 c40 c41")

    sp = sub.add_parser("turan", parents=[common], help="randomized power-sum witness trials")
    sp.add_argument("--trials", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)

    for name, extra in (("verify-quadratic", None), ("verify-corpus", "corpus")):
        sp = sub.add_parser(name, parents=[common], help="least Frobenius prime scan")
        if extra:
            sp.add_argument(extra, help="corpus file")
        else:
            sp.add_argument("--height", type=int, default=None)
        sp.add_argument("--ceiling", type=int, default=None)
        sp.add_argument("--detail", action="store_const", const=True, default=None,
                        help="one row per (field, automorphism)")

    sub.add_parser("selfcheck", parents=[common], help="quick internal consistency checks")
    return parser


def _merge_config(args: argparse.Namespace) -> None:
    if not args.config:
        return
    values = read_key_values(args.config)
    for key, text in values.items():
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{args.config}: unknown key {key!r}")
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            continue
        if getattr(args, attr) is None:
            try:
                setattr(args, attr, CONFIG_KEYS[key](text))
            except ValueError as exc:
                raise ConfigError(f"{args.config}: {key}: {exc}") from exc


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_config(args)
        if args.format not in (None, "csv", "json"):
            raise ConfigError(f"unknown format {args.format!r}")
        rows, status = COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(rows, args.format or "csv")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
