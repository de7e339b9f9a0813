#!/usr/bin/env python3
"""Print the worked-example battery and a few headline facts as a table."""

import sys

from sringlab.ideals import mult_closure
from sringlab.localization import localize
from sringlab.report import verify_paper
from sringlab.ring import are_isomorphic, make_zn
from sringlab.spec import build_ring

# (ring, generators of S, the cyclic ring the fraction ring should match)
LOCALIZATIONS = [("Z6", [2], 3), ("Z12", [2], 3), ("Z12", [3], 4), ("Z30", [2], 15), ("Z5", [1], 5)]


def main() -> int:
    report = verify_paper(timestamp=False)
    for rec in report["records"]:
        print(f"{rec['status']:<5} {rec['name']}")
        for key in rec.get("diff", []):
            print(f"      {key}: expected {rec['expected'].get(key)!r}, got {rec['observed'].get(key)!r}")
    print()
    ok = report["summary"]["failed"] == 0
    for spec, gens, n in LOCALIZATIONS:
        R = build_ring(spec)
        L = localize(R, mult_closure(R, gens))
        match = are_isomorphic(L.local_ring, make_zn(n))
        ok &= match
        print(f"S^-1 {spec} with S generated by {gens}: order {L.local_ring.order}, "
              f"isomorphic to Z{n}: {match}, kernel {L.kernel.elements}")  # fmt: skip
    print(f"\n{report['summary']['passed']}/{report['summary']['total']} battery records pass")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
