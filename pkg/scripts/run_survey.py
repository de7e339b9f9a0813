#!/usr/bin/env python3
"""Run the exhaustive invariant survey and write a JSON report.

    python3 scripts/run_survey.py --jobs 4 --out survey.json
"""

import argparse
import sys
import time

from sringlab.report import dumps, survey_report
from sringlab.survey import FAMILIES, SurveyConfig, run_survey


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=FAMILIES, default="standard")
    ap.add_argument("--up-to", type=int, default=24)
    ap.add_argument("--other-max", type=int, default=16)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--inject-fault", action="store_true")
    ap.add_argument("--out", default="survey.json")
    args = ap.parse_args()

    started = time.perf_counter()
    config = SurveyConfig(args.family, args.up_to, args.other_max, jobs=args.jobs, inject_fault=args.inject_fault)
    result = run_survey(config)
    report = survey_report(result, timestamp=True, started=started)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(dumps(report))

    width = max(map(len, result.tallies))
    print(f"{len(result.rings)} rings, {result.mult_set_count} (ring, S) pairs, "
          f"{time.perf_counter() - started:.1f}s")  # fmt: skip
    for name, t in result.tallies.items():
        print(f"  {name:<{width}}  checked {t.checked:>7}  counterexamples {len(t.counterexamples)}")
    if result.errors:
        print(f"  errors: {len(result.errors)}")
    print(f"report written to {args.out}")
    return 1 if result.counterexample_count else 0


if __name__ == "__main__":
    sys.exit(main())
