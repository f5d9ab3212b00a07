"""Command-line entry point: ``ramanujan-pi <command> ...``.

Exit status is 0 on success, 1 when a verification or identity check fails
and 2 for invalid arguments or parameter constraint violations.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import ConstraintViolation
from .families import Family, FamilyParams, derivation_check
from .hypergeom import IDENTITIES, run_identity_trials
from .render import render
from .report import ReportConfig, report_dict, serialize
from .verify import DEFAULT_SEED, VerificationReport, pi_from_instance, scan_grid, verify_instance

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--r", type=int, default=None, help="only for T1 and T2 (default 0)")


def _params(args) -> FamilyParams:
    fam = Family(args.family)
    if args.r is not None and not fam.has_r:
        raise ConstraintViolation(f"{fam.value} takes no --r")
    return FamilyParams(fam, args.p, args.q, args.r).validate()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramanujan-pi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="print one family instance as a formula")
    _add_family_args(g)
    g.add_argument("--format", choices=["latex", "json", "text"], default="text")

    v = sub.add_parser("verify", help="sum an instance and compare with its constant")
    _add_family_args(v)
    v.add_argument("--digits", type=int, default=40)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)

    i = sub.add_parser("identity-check", help="exact random trials of a terminating 7F6 identity")
    i.add_argument("--which", required=True, choices=IDENTITIES)
    i.add_argument("--trials", type=int, default=200)
    i.add_argument("--n-max", type=int, default=12)
    i.add_argument("--seed", type=int, default=DEFAULT_SEED)

    pi = sub.add_parser("pi", help="compute pi from an instance")
    _add_family_args(pi)
    pi.add_argument("--digits", type=int, default=100)

    s = sub.add_parser("scan", help="verify every admissible instance in a parameter box")
    s.add_argument("--p-max", type=int, default=2)
    s.add_argument("--q-max", type=int, default=2)
    s.add_argument("--r-max", type=int, default=4)
    s.add_argument("--digits", type=int, default=40)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--out", type=Path, default=None, help="report file (stdout if omitted)")
    s.add_argument("--jobs", type=int, default=1, help="parallel worker count")

    sub.add_parser("selfcheck", help="Gamma-reduction cross-check of every family constant")
    return parser


def _cmd_generate(args) -> int:
    r = render(_params(args))
    if args.format == "latex":
        print(r.latex)
    elif args.format == "json":
        print(json.dumps(r.to_dict(), sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print(r.plaintext)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.digits < 1:
        raise ConstraintViolation("--digits must be >= 1")
    rep = verify_instance(_params(args), args.digits, args.seed)
    doc = report_dict([rep], ReportConfig(seed=args.seed, digits=args.digits))["results"][0]
    doc["digits_requested"] = rep.digits_requested
    doc["seed"] = rep.seed
    print(json.dumps(doc, sort_keys=True, indent=2))
    return EXIT_OK if rep.matched else EXIT_FAIL


def _cmd_identity(args) -> int:
    if args.trials < 0 or args.n_max < 0:
        raise ConstraintViolation("--trials and --n-max must be >= 0")
    summary = run_identity_trials(args.which, args.trials, args.n_max, args.seed)
    print(f"{summary.passed}/{summary.trials} exact")
    print(f"identity={summary.which} n_max={summary.n_max} seed={summary.seed} redrawn={summary.resampled}")
    for point, check in summary.failures:
        print(f"FAIL at {tuple(str(x) for x in point)}: lhs={check.lhs} rhs={check.rhs}")
    return EXIT_OK if summary.ok else EXIT_FAIL


def _cmd_pi(args) -> int:
    if args.digits < 1:
        raise ConstraintViolation("--digits must be >= 1")
    res = pi_from_instance(_params(args), args.digits)
    print(f"pi = {res.value.format_certified(args.digits)}")
    print(f"terms {res.terms_used}, {res.digits_per_term:.4f} digits/term")
    return EXIT_OK


def _cmd_scan(args) -> int:
    if min(args.p_max, args.q_max, args.r_max) < 0:
        raise ConstraintViolation("bounds must be >= 0")
    entries = scan_grid(args.p_max, args.q_max, args.r_max, args.digits, args.seed, args.jobs)
    config = ReportConfig(
        seed=args.seed, digits=args.digits, bounds={"p_max": args.p_max, "q_max": args.q_max, "r_max": args.r_max}
    )
    text = serialize(entries, config)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
    reports = [e for e in entries if isinstance(e, VerificationReport)]
    failed = [e for e in reports if not e.matched]
    print(
        f"{len(reports) - len(failed)}/{len(reports)} matched, {len(entries) - len(reports)} skipped",
        file=sys.stderr,
    )
    return EXIT_FAIL if failed else EXIT_OK


def selfcheck_params():
    """|q| <= p <= 2, plus q = -p-1 where the family allows it; r in 0..3."""
    for fam in Family:
        for p in range(3):
            for q in range(-p - 1, p + 1):
                for r in (range(4) if fam.has_r else [None]):
                    params = FamilyParams(fam, p, q, r)
                    if params.violation() is None:
                        yield params


def _cmd_selfcheck(args) -> int:
    bad = 0
    total = 0
    for params in selfcheck_params():
        d = derivation_check(params)
        total += 1
        bad += not d.equal
        status = "ok" if d.equal else "MISMATCH"
        print(f"{params.label():<12} stated {d.stated}  derived {d.derived}  {status}")
    print(f"{total - bad}/{total} constants reproduced by Gamma reduction")
    return EXIT_FAIL if bad else EXIT_OK


COMMANDS = {
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "identity-check": _cmd_identity,
    "pi": _cmd_pi,
    "scan": _cmd_scan,
    "selfcheck": _cmd_selfcheck,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except ConstraintViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
