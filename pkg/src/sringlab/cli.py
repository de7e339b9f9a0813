"""Command line: ``sringlab {explore,verify-paper,survey,localize,krull}``.

Exit status is 0 when every check passes, 1 on a counterexample or golden
mismatch, and 2 on a usage error (bad spec, order cap, 0 in a strict S).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import report as rep
from .errors import IdealAxiomError, RingLabError, TheoremViolation
from .krull import CHAIN_READINGS
from .ring import DEFAULT_MAX_ORDER
from .spec import build_ring, parse_ideal, parse_mult_set
from .survey import FAMILIES, INVARIANTS, SurveyConfig, normalize_invariant, run_survey

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    """Shared flags, accepted before or after the command name."""
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", metavar="PATH", default=d(None), help="write the JSON report here ('-' for stdout)")
    p.add_argument("--max-order", type=int, default=d(DEFAULT_MAX_ORDER), help="ring order cap")
    p.add_argument("--chain-reading", choices=CHAIN_READINGS, default=d("corrected"),
                   help="strictness reading for S-chains of primes")  # fmt: skip
    p.add_argument("--no-timestamp", action="store_true", default=d(False),
                   help="omit timestamp and elapsed time so reports are byte-stable")  # fmt: skip
    p.add_argument("--strict-mult-set", action="store_true", default=d(False),
                   help="reject a multiplicative set containing 0")  # fmt: skip
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sringlab", description=__doc__.splitlines()[0],
                                     parents=[_global_flags(False)])  # fmt: skip
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_flags(True)]

    p = sub.add_parser("explore", parents=common, help="classify a ring against a multiplicative set")
    p.add_argument("--ring", required=True)
    p.add_argument("--mult-set", required=True, help="generators, e.g. '2' or '1,2,4'")

    p = sub.add_parser("verify-paper", parents=common, help="run the worked-example battery against goldens")
    p.add_argument("--inject-fault", action="store_true", help="corrupt one product entry of Z12 first")

    p = sub.add_parser("survey", parents=common, help="exhaustive invariant sweep")
    p.add_argument("--up-to", type=int, default=24, help="largest Z_n order (default 24)")
    p.add_argument("--other-max", type=int, default=16, help="largest order of the non-cyclic families")
    p.add_argument("--family", choices=FAMILIES, default="standard")
    p.add_argument("--invariants", default="", help=f"comma list; default all of: {', '.join(INVARIANTS)}")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--inject-fault", action="store_true", help="corrupt one product entry of Z12 first")

    p = sub.add_parser("localize", parents=common, help="build the ring of fractions and check it")
    p.add_argument("--ring", required=True)
    p.add_argument("--mult-set", required=True)

    p = sub.add_parser("krull", parents=common, help="power chains, witnesses and S-primary decomposition")
    p.add_argument("--ring", required=True)
    p.add_argument("--mult-set", required=True)
    p.add_argument("--ideal", required=True, help="generators of the ideal")
    return parser


def _config(args) -> dict:
    return {"max_order": args.max_order, "chain_reading": args.chain_reading, "strict_mult_set": args.strict_mult_set}


def _ring_and_set(args):
    R = build_ring(args.ring, args.max_order)
    return R, parse_mult_set(R, args.mult_set, strict=args.strict_mult_set)


def _parse_invariants(text: str) -> tuple[str, ...]:
    if not text.strip():
        return tuple(INVARIANTS)
    try:
        names = [normalize_invariant(t) for t in text.split(",") if t.strip()]
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    # ring axioms always run first so a broken table is named as such
    return tuple(dict.fromkeys(["ring-axioms", *names]))


def run(args) -> dict:
    ts = not args.no_timestamp
    cfg = _config(args)
    if args.command == "verify-paper":
        return rep.verify_paper(inject=args.inject_fault, timestamp=ts, config=cfg)
    if args.command == "explore":
        R, S = _ring_and_set(args)
        return rep.explore(R, S, args.chain_reading, ts, cfg)
    if args.command == "localize":
        R, S = _ring_and_set(args)
        return rep.localize_report(R, S, ts, cfg)
    if args.command == "krull":
        R, S = _ring_and_set(args)
        return rep.krull_report(R, S, parse_ideal(R, args.ideal), args.chain_reading, ts, cfg)
    if args.command == "survey":
        if args.up_to > args.max_order or args.other_max > args.max_order:
            raise UsageError(f"survey bounds exceed the order cap {args.max_order}")
        started = time.perf_counter()
        sc = SurveyConfig(args.family, args.up_to, args.other_max, _parse_invariants(args.invariants),
                          max(1, args.jobs), args.inject_fault)  # fmt: skip
        return rep.survey_report(run_survey(sc), ts, cfg, started)
    raise UsageError(f"unknown command {args.command!r}")


def summarize(report: dict) -> str:
    cmd = report["command"]
    lines = [f"{cmd}: {report['inputs']}"]
    if cmd == "verify-paper":
        for r in report["records"]:
            lines.append(f"  [{r['status']}] {r['name']}" + (f"  diff={r['diff']}" if r.get("diff") else ""))
    elif cmd == "survey":
        for inv in report["invariants"]:
            lines.append(f"  {inv['name']}: checked {inv['checked']}, counterexamples {len(inv['counterexamples'])}")
            for cex in inv["counterexamples"][:5]:
                lines.append(f"    {cex}")
        for err in report["errors"][:5]:
            lines.append(f"  error: {err}")
    elif cmd == "explore":
        props = report["ring_properties"]
        lines.append(f"  order {report['ring']['order']}, ideals {report['summary']['ideals']}")
        for key in ("s_integral_domain", "s_field", "s_cancellation", "s_reduced"):
            if key in props:
                lines.append(f"  {key}: {props[key]['verdict']} {props[key]['data']}")
        lines.append(f"  localization order {report['localization']['order']}")
    elif cmd == "localize":
        lines.append(f"  local order {report['local_ring']['order']}, oracle isomorphic {report['oracle_isomorphic']}")
        lines.append(f"  kernel {[e['index'] for e in report['kernel']['elements']]}")
    elif cmd == "krull":
        pc = report["power_chain"]
        lines.append(f"  B = {[e['index'] for e in pc['intersection']['elements']]}, "
                     f"stabilises at {pc['stabilization_index']}")  # fmt: skip
        lines.append(f"  decomposition {[[e['index'] for e in q['elements']] for q in report['decomposition']]}")
        lines.append(f"  S-dimension {report['s_dimension']['value']} ({report['s_dimension']['reading']})")
    lines.append(f"summary: {report['summary']}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report = run(args)
    except (TheoremViolation, IdealAxiomError) as exc:
        print(f"sringlab: check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, RingLabError, ValueError) as exc:
        # everything else is an input problem: bad spec, order cap, 0 in S
        print(f"sringlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = rep.dumps(report)
    if args.json == "-":
        sys.stdout.write(text)
    else:
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
        print(summarize(report))
    return EXIT_FAIL if report["summary"]["failed"] else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
