"""JSON reports: element rendering, the reference battery, and per-command builders.

Every report is a plain dict with a ``schema_version``; serialising with
:func:`dumps` gives byte-identical text for identical inputs once the
timestamp and elapsed time are left out.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Callable

from . import __version__, certify
from .classify import (
    Witness,
    has_s_cancellation,
    is_field,
    is_integral_domain,
    is_maximal,
    is_prime,
    is_s_field,
    is_s_idempotent,
    is_s_integral_domain,
    is_s_maximal,
    is_s_nilpotent,
    is_s_prime,
    is_s_proper,
    is_s_reduced,
    is_s_zero,
    s_finite_witness,
)
from .ideals import Ideal, MultSet, enumerate_ideals, generated_ideal, jacobson_radical, mult_closure
from .krull import (
    S_PRIMARY_NOTE,
    check_product_decomposition,
    is_s_primary,
    jacobson_corollary_check,
    krull_annihilator,
    pmsb_witness,
    power_intersection,
    s_dimension,
    s_primary_decomposition,
)
from .localization import check_localization_theorems, extend_ideal, localize, oracle_isomorphism, unit_images_ok
from .ring import (
    FiniteRing,
    idempotents,
    is_boolean,
    nilpotents,
    ring_axiom_violations,
    units,
    zero_divisors,
)
from .spec import build_ring
from .survey import FAULT_RING, INVARIANTS, SurveyResult, inject_fault

SCHEMA_VERSION = 1
TOOL_NAME = "sringlab"
ARTINIAN_NOTE = "S-Artinian holds for every finite ring; no chain verifier is run"
FINITE_S_NOTE = (
    "S is finite here, so a domain fraction ring forces an S-integral domain; "
    "a failure of that converse needs an infinite S and is not searched for"
)


# ---------------------------------------------------------------- rendering


def element(R: FiniteRing, a: int) -> dict:
    return {"index": a, "name": R.name(a)}


def element_list(R: FiniteRing, xs) -> list[dict]:
    return [element(R, a) for a in xs]


def ideal_json(I: Ideal) -> dict:
    R = I.ring
    return {"generators": element_list(R, I.generators), "elements": element_list(R, I.elements)}


def mult_set_json(S: MultSet) -> dict:
    return {"generators": element_list(S.ring, S.generators), "elements": element_list(S.ring, S.elements)}


# witness keys whose integer values are ring elements; other ints are counts or exponents
_ELEMENT_KEYS = {"s", "a", "b", "c", "t", "r", "element", "uniform_s", "annihilator_t"}


def _value_json(R: FiniteRing, key: str, value: Any) -> Any:
    if isinstance(value, Ideal):
        return ideal_json(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return element(R, value) if key in _ELEMENT_KEYS else value
    if isinstance(value, dict):
        return [{"element": element(R, k), "s": element(R, v)} for k, v in sorted(value.items())]
    return value


def witness_json(R: FiniteRing, w: Witness) -> dict:
    return {
        "verdict": w.verdict,
        "kind": w.kind,
        "data": {k: _value_json(R, k, v) for k, v in w.data.items()},
        "flags": list(w.flags),
    }


def _raw(w: Witness) -> dict:
    """The witness in plain indices, as goldens store it."""
    data = {}
    for k, v in w.data.items():
        data[k] = v.elements if isinstance(v, Ideal) else v
    return {"verdict": w.verdict, "kind": w.kind, "witness": data}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def envelope(command: str, inputs: dict, body: dict, config: dict, started: float, timestamp: bool) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": TOOL_NAME, "version": __version__},
        "command": command,
        "inputs": inputs,
        "config": config,
        **body,
    }
    if timestamp:
        out["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
        out["elapsed_seconds"] = round(time.perf_counter() - started, 6)
    return out


# ---------------------------------------------------------------- reference battery


@dataclass
class Record:
    name: str
    anchor: str
    ring: str
    inputs: dict
    expected: dict
    observed: dict = field(default_factory=dict)
    witness: dict | None = None
    certified: bool = False
    error: str = ""

    @property
    def diff(self) -> list[str]:
        keys = sorted(set(self.expected) | set(self.observed))
        return [k for k in keys if self.expected.get(k) != self.observed.get(k)]

    @property
    def passed(self) -> bool:
        return not self.error and self.certified and not self.diff

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "anchor": self.anchor,
            "ring": self.ring,
            "inputs": self.inputs,
            "expected": self.expected,
            "observed": self.observed,
            "witness": self.witness,
            "certified": self.certified,
            "status": "pass" if self.passed else "fail",
        }
        if self.diff:
            out["diff"] = self.diff
        if self.error:
            out["error"] = self.error
        return out


RingSource = Callable[[str], FiniteRing]


def _mult(R: FiniteRing, gens) -> MultSet:
    return mult_closure(R, gens)


def _battery(build: RingSource) -> list[tuple[str, str, str, dict, dict, Callable[[], tuple]]]:
    """``(name, anchor, ring spec, inputs, expected, run)``; ``run`` returns ``(observed, witness json, certified)``."""
    items = []

    def add(name, anchor, spec, inputs, expected):
        def deco(fn):
            items.append((name, anchor, spec, inputs, expected, fn))
            return fn

        return deco

    for spec in ("Z6", "Z12", "Z15", "Z30"):

        @add(f"ring axioms: {spec}", "tables of the worked-example rings", spec, {}, {"violations": []})
        def _(spec=spec):
            R = build(spec)
            bad = ring_axiom_violations(R, limit=3)
            return {"violations": bad}, None, True

    @add(
        "S-integral domain: Z6, S = {1,2,4}",
        "Z6: S-integral domain that is not an integral domain",
        "Z6",
        {"mult_set": [1, 2, 4]},
        {"verdict": True, "kind": "uniform-s", "witness": {"s": 2}, "integral_domain": False},
    )
    def _():
        R = build("Z6")
        S = _mult(R, [2])
        w = is_s_integral_domain(R, S)
        obs = _raw(w) | {"integral_domain": is_integral_domain(R)}
        return obs, witness_json(R, w), certify.certify_prime_like(R, {0}, S, w)

    @add(
        "S-maximal zero ideal: Z6, S = {1,2,4}",
        "Z6: zero ideal S-maximal but not maximal, so Z6 is an S-field",
        "Z6",
        {"mult_set": [1, 2, 4], "ideal": [0]},
        {"verdict": True, "kind": "uniform-s", "witness": {"s": 2}, "maximal": False, "s_field": True},
    )
    def _():
        R = build("Z6")
        S = _mult(R, [2])
        zero = generated_ideal(R, [0])
        w = is_s_maximal(R, zero, S)
        obs = _raw(w) | {"maximal": is_maximal(R, zero), "s_field": is_s_field(R, S).verdict}
        return obs, witness_json(R, w), certify.certify_s_maximal(R, {0}, S, w)

    @add(
        "not an S-integral domain: Z30, S = {1,2,4,8,16}",
        "Z30: 5 times 6 is zero with neither factor killed by S",
        "Z30",
        {"mult_set": [1, 2, 4, 8, 16]},
        {"verdict": False, "kind": "pair-counterexample", "witness": {"a": 5, "b": 6}},
    )
    def _():
        R = build("Z30")
        S = _mult(R, [2])
        w = is_s_integral_domain(R, S)
        return _raw(w), witness_json(R, w), certify.certify_prime_like(R, {0}, S, w)

    @add(
        "S-cancellation fails: Z12, S = {1,3,9}",
        "Z12: a = 2, b = 4, c = 10 breaks S-cancellation",
        "Z12",
        {"mult_set": [1, 3, 9]},
        {
            "verdict": False,
            "kind": "triple-counterexample",
            "witness": {"a": 2, "b": 0, "c": 6},
            "reference_triple": [2, 4, 10],
            "reference_triple_valid": True,
        },
    )
    def _():
        R = build("Z12")
        S = _mult(R, [3])
        w = has_s_cancellation(R, S)
        ref = Witness(False, "triple-counterexample", {"a": 2, "b": 4, "c": 10})
        obs = _raw(w) | {
            "reference_triple": [2, 4, 10],
            "reference_triple_valid": certify.certify_cancellation(R, S, ref),
        }
        return obs, witness_json(R, w), certify.certify_cancellation(R, S, w)

    @add(
        "S-cancellation holds: Z15, S = {1,6}",
        "Z15: S-cancellation with s = 6, e.g. a = 3, b = 7, c = 2",
        "Z15",
        {"mult_set": [1, 6]},
        {
            "verdict": True,
            "kind": "per-instance-s",
            "witness": {"uniform_s": 6, "triples_checked": 300},
            "reference_instance_holds": True,
        },
    )
    def _():
        R = build("Z15")
        S = _mult(R, [6])
        w = has_s_cancellation(R, S)
        a, b, c, s = 3, 7, 2, 6
        ref_ok = R.mul[a][b] == R.mul[a][c] and R.mul[s][b] == R.mul[s][c]
        obs = _raw(w) | {"reference_instance_holds": ref_ok}
        return obs, witness_json(R, w), certify.certify_cancellation(R, S, w)

    for m, n in ((2, 3), (3, 5)):
        spec = f"Z{m * n}"

        @add(
            f"S-field: Z{m * n}, S = powers of {m}",
            "Z_mn: with S the powers of m, Z_mn is an S-field but not a field",
            spec,
            {"mult_set_generators": [m]},
            {"verdict": True, "kind": "uniform-s", "witness": {"s": m}, "field": False, "s_proper_mZ": False},
        )
        def _(spec=spec, m=m):
            R = build(spec)
            S = _mult(R, [m])
            w = is_s_field(R, S)
            proper = is_s_proper(R, generated_ideal(R, [m]), S)
            obs = _raw(w) | {"field": is_field(R), "s_proper_mZ": proper.verdict}
            return obs, witness_json(R, w), certify.certify_s_maximal(R, {0}, S, w)

    for gen, s_min in ((3, 1), (6, 2)):

        @add(
            f"S-prime ideal ({gen}): Z12, S = {{1,2,4,8}}",
            "Z12: 3Z12 and 6Z12 are S-prime and disjoint from S",
            "Z12",
            {"mult_set": [1, 2, 4, 8], "ideal": [gen]},
            {"verdict": True, "kind": "uniform-s", "witness": {"s": s_min}, "reference_s_4_valid": True,
             "prime": gen == 3},
        )  # fmt: skip
        def _(gen=gen):
            R = build("Z12")
            S = _mult(R, [2])
            P = generated_ideal(R, [gen])
            w = is_s_prime(R, P, S)
            ref = certify.certify_prime_like(R, set(P), S, Witness(True, "uniform-s", {"s": 4}))
            obs = _raw(w) | {"reference_s_4_valid": ref, "prime": is_prime(R, P)}
            return obs, witness_json(R, w), certify.certify_prime_like(R, set(P), S, w)

    @add(
        "coincident extensions: (3) and (6) in Z12, S = {1,2,4,8}",
        "Z12: both S-primes extend to the zero ideal of the fraction ring",
        "Z12",
        {"mult_set": [1, 2, 4, 8], "ideals": [[3], [6]]},
        {"verdict": True, "local_order": 3, "extension_of_3": [0], "extension_of_6": [0], "distinct_in_R": True,
         "oracle_isomorphic": True},
    )  # fmt: skip
    def _():
        R = build("Z12")
        S = _mult(R, [2])
        L = localize(R, S)
        P1, P2 = generated_ideal(R, [3]), generated_ideal(R, [6])
        e1, e2 = extend_ideal(L, P1), extend_ideal(L, P2)
        obs = {
            "verdict": e1 == e2,
            "local_order": L.local_ring.order,
            "extension_of_3": e1.elements,
            "extension_of_6": e2.elements,
            "distinct_in_R": P1 != P2,
            "oracle_isomorphic": oracle_isomorphism(L) is not None,
        }
        wj = {"extension_of_3": ideal_json(e1), "extension_of_6": ideal_json(e2)}
        return obs, wj, unit_images_ok(L) and obs["oracle_isomorphic"]

    return items


def verify_paper(inject: bool = False, timestamp: bool = True, config: dict | None = None) -> dict:
    """Run the reference battery; ``inject`` corrupts one product entry of Z12 first."""
    started = time.perf_counter()
    cache: dict[str, FiniteRing] = {}

    def build(spec: str) -> FiniteRing:
        if spec not in cache:
            R = build_ring(spec)
            cache[spec] = inject_fault(R) if inject and spec == FAULT_RING else R
        return cache[spec]

    records = []
    for name, anchor, spec, inputs, expected, run in _battery(build):
        rec = Record(name, anchor, spec, inputs, expected)
        try:
            rec.observed, rec.witness, rec.certified = run()
        except Exception as exc:  # noqa: BLE001 - a broken table may crash any checker
            rec.error = f"{type(exc).__name__}: {exc}"
        records.append(rec)
    passed = sum(r.passed for r in records)
    body = {
        "records": [r.to_json() for r in records],
        "summary": {"total": len(records), "passed": passed, "failed": len(records) - passed},
    }
    inputs = {"battery": "worked examples", "fault_injected": inject}
    return envelope("verify-paper", inputs, body, config or {}, started, timestamp)


def report_failed(report: dict) -> bool:
    return report["summary"]["failed"] > 0


# ---------------------------------------------------------------- explore


def _ring_facts(R: FiniteRing) -> dict:
    return {
        "recipe": R.recipe,
        "order": R.order,
        "characteristic": R.characteristic,
        "units": element_list(R, units(R)),
        "zero_divisors": element_list(R, zero_divisors(R)),
        "nilpotents": element_list(R, nilpotents(R)),
        "idempotents": element_list(R, idempotents(R)),
        "boolean": is_boolean(R),
        "integral_domain": is_integral_domain(R),
        "field": is_field(R),
        "axiom_violations": ring_axiom_violations(R, limit=3),
    }


def explore(R: FiniteRing, S: MultSet, chain_reading: str = "corrected", timestamp: bool = True,
            config: dict | None = None) -> dict:  # fmt: skip
    started = time.perf_counter()
    checks_ok = True
    ring_level: dict[str, Any] = {}
    sid = is_s_integral_domain(R, S)
    ring_level["s_integral_domain"] = witness_json(R, sid)
    checks_ok &= certify.certify_prime_like(R, {0}, S, sid)
    canc = has_s_cancellation(R, S)
    ring_level["s_cancellation"] = witness_json(R, canc)
    checks_ok &= certify.certify_cancellation(R, S, canc)
    ring_level["s_reduced"] = witness_json(R, is_s_reduced(R, S))
    zero_free = not S.contains_zero
    if zero_free:
        fw = is_s_field(R, S)
        ring_level["s_field"] = witness_json(R, fw)
        checks_ok &= certify.certify_s_maximal(R, {0}, S, fw)
        dim, chain = s_dimension(R, S, chain_reading)
        ring_level["s_dimension"] = {
            "value": dim,
            "reading": chain_reading,
            "chain": [ideal_json(P) for P in chain.primes],
        }
    ring_level["s_artinian"] = {"verdict": True, "note": ARTINIAN_NOTE}

    ideals = []
    for I in enumerate_ideals(R):
        entry: dict[str, Any] = {"ideal": ideal_json(I), "s_proper": witness_json(R, is_s_proper(R, I, S))}
        entry["s_finite"] = witness_json(R, s_finite_witness(R, I, S))
        if I.members & S.members:
            entry["meets_S"] = True
        else:
            entry["meets_S"] = False
            pw, mw, qw = is_s_prime(R, I, S), is_s_maximal(R, I, S), is_s_primary(R, I, S)
            entry["s_prime"] = witness_json(R, pw)
            entry["s_maximal"] = witness_json(R, mw)
            entry["s_primary"] = witness_json(R, qw)
            checks_ok &= certify.certify_prime_like(R, set(I), S, pw)
            checks_ok &= certify.certify_s_maximal(R, set(I), S, mw)
            checks_ok &= certify.certify_s_primary(R, set(I), S, qw)
        ideals.append(entry)

    elements = []
    for a in R.elements:
        row = {"element": element(R, a)}
        for prop, fn in (("s-idempotent", is_s_idempotent), ("s-nilpotent", is_s_nilpotent), ("s-zero", is_s_zero)):
            w = fn(R, a, S)
            row[prop] = witness_json(R, w)
            checks_ok &= certify.certify_element(R, prop, a, S, w)
        elements.append(row)

    L = localize(R, S)
    iso = oracle_isomorphism(L)
    localization = {
        "order": L.local_ring.order,
        "degenerate": L.degenerate,
        "kernel": ideal_json(L.kernel),
        "oracle_isomorphic": iso is not None,
    }
    checks_ok &= iso is not None
    body = {
        "ring": _ring_facts(R),
        "mult_set": mult_set_json(S),
        "ring_properties": ring_level,
        "ideal_lattice": ideals,
        "elements": elements,
        "localization": localization,
        "notes": [S_PRIMARY_NOTE, ARTINIAN_NOTE],
        "summary": {
            "ideals": len(ideals),
            "proper_ideals": len(ideals) - 1,
            "witnesses_certified": checks_ok,
            "failed": 0 if checks_ok else 1,
        },
    }
    inputs = {"ring": R.recipe, "mult_set": S.elements}
    return envelope("explore", inputs, body, config or {}, started, timestamp)


# ---------------------------------------------------------------- localize


def localize_report(R: FiniteRing, S: MultSet, timestamp: bool = True, config: dict | None = None) -> dict:
    started = time.perf_counter()
    L = localize(R, S)
    local = L.local_ring
    iso = oracle_isomorphism(L)
    unit_rows = []
    for s in S:
        x = L.phi[s]
        inv = next((y for y in local.elements if local.mul[x][y] == local.one), None)
        unit_rows.append({"s": element(R, s), "image": element(local, x),
                          "inverse": None if inv is None else element(local, inv)})  # fmt: skip
    theorems = check_localization_theorems(R, S, L, strict=False)
    ok = iso is not None and unit_images_ok(L) and theorems.all_hold
    body = {
        "local_ring": {
            "order": local.order,
            "recipe": local.recipe,
            "degenerate": L.degenerate,
            "elements": element_list(local, local.elements),
        },
        "phi": [{"source": element(R, a), "image": element(local, L.phi[a])} for a in R.elements],
        "kernel": ideal_json(L.kernel),
        "unit_images": unit_rows,
        "oracle_isomorphic": iso is not None,
        "oracle_map": None if iso is None or iso is True else list(iso.map),
        "theorem_clauses": [
            {"name": c.name, "statement": c.statement, "applicable": c.applicable,
             "premise": c.premise, "conclusion": c.conclusion, "holds": c.holds}
            for c in theorems.clauses
        ],  # fmt: skip
        "notes": [FINITE_S_NOTE],
        "summary": {"failed": 0 if ok else 1},
    }
    inputs = {"ring": R.recipe, "mult_set": S.elements}
    return envelope("localize", inputs, body, config or {}, started, timestamp)


# ---------------------------------------------------------------- krull


def krull_report(R: FiniteRing, S: MultSet, I: Ideal, chain_reading: str = "corrected", timestamp: bool = True,
                 config: dict | None = None) -> dict:  # fmt: skip
    started = time.perf_counter()
    chain = power_intersection(R, I)
    pm = pmsb_witness(R, I, S)
    ann = krull_annihilator(R, I, S)
    pw = is_s_primary(R, I, S)
    comps = s_primary_decomposition(R, I, S)
    dim, schain = s_dimension(R, S, chain_reading)
    prod = check_product_decomposition(R, S, I, chain_reading)
    jac = jacobson_corollary_check(R, S)
    ok = (
        certify.certify_pmsb(R, set(I), S, pm)
        and certify.certify_annihilator(R, set(I), S, ann)
        and certify.certify_s_primary(R, set(I), S, pw)
        and certify.certify_decomposition(R, set(I), S, comps)
        and prod.status != "fail"
        and jac.status == "pass"
    )
    body = {
        "power_chain": {
            "powers": [ideal_json(P) for P in chain.powers],
            "stabilization_index": chain.stabilization_index,
            "intersection": ideal_json(chain.intersection),
        },
        "pmsb": witness_json(R, pm),
        "annihilator": witness_json(R, ann),
        "s_primary": witness_json(R, pw),
        "decomposition": [ideal_json(Q) for Q in comps],
        "s_dimension": {"value": dim, "reading": chain_reading, "chain": [ideal_json(P) for P in schain.primes]},
        "product_decomposition": _check_json(prod),
        "jacobson_corollary": _check_json(jac),
        "jacobson_radical": ideal_json(jacobson_radical(R)),
        "notes": [S_PRIMARY_NOTE],
        "summary": {"failed": 0 if ok else 1},
    }
    inputs = {"ring": R.recipe, "mult_set": S.elements, "ideal": I.elements}
    return envelope("krull", inputs, body, config or {}, started, timestamp)


def _json_any(v: Any) -> Any:
    if isinstance(v, Ideal):
        return ideal_json(v)
    if isinstance(v, dict):
        return {k: _json_any(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_any(x) for x in v]
    return v


def _check_json(c) -> dict:
    return {
        "name": c.name,
        "status": c.status,
        "reason": c.reason,
        "clauses": c.clauses,
        "details": _json_any(c.details),
    }


# ---------------------------------------------------------------- survey


def survey_report(result: SurveyResult, timestamp: bool = True, config: dict | None = None,
                  started: float | None = None) -> dict:  # fmt: skip
    started = time.perf_counter() if started is None else started
    cfg = result.config
    invariants = [
        {
            "name": name,
            "description": INVARIANTS[name],
            "checked": t.checked,
            "counterexamples": t.counterexamples,
        }
        for name, t in result.tallies.items()
    ]
    body = {
        "rings": result.rings,
        "invariants": invariants,
        "errors": result.errors,
        "summary": {
            "rings": len(result.rings),
            "ring_mult_set_pairs": result.mult_set_count,
            "counterexamples": result.counterexample_count,
            "failed": result.counterexample_count,
        },
    }
    inputs = {
        "family": cfg.family,
        "max_order": cfg.max_order,
        "other_max": cfg.other_max,
        "invariants": list(cfg.invariants),
        "fault_injected": cfg.inject_fault,
    }
    return envelope("survey", inputs, body, config or {}, started, timestamp)

