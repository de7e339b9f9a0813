"""Exhaustive sweeps of the S-property invariants over small rings.

Each ring in the family is swept against every multiplicative set that
misses 0.  Rings are handled independently, so a sweep can be spread over
worker processes; results are merged back in family order.
"""

from __future__ import annotations

import unicodedata
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import certify
from .classify import (
    has_s_cancellation,
    is_s_field,
    is_s_idempotent,
    is_s_integral_domain,
    is_s_maximal,
    is_s_nilpotent,
    is_s_non_zero,
    is_s_prime,
    is_s_proper,
    is_s_reduced,
    push_mult_set,
)
from .errors import RingLabError
from .ideals import Ideal, MultSet, all_mult_sets, ideal_from_mask, ideal_masks
from .krull import (
    is_s_primary,
    krull_annihilator,
    pmsb_witness,
    power_intersection,
    radical_of_primary_is_s_prime,
    s_primary_decomposition,
    s_primary_multiplier,
)
from .localization import check_localization_theorems, localize, oracle_isomorphism, unit_images_ok
from .ring import (
    FiniteRing,
    apply_iso,
    is_boolean,
    quotient_ring,
    relabel,
    ring_axiom_violations,
    with_mul_entry,
    zero_divisors,
)
from .spec import build_ring

INVARIANTS: dict[str, str] = {
    "ring-axioms": "the tables satisfy the commutative ring axioms",
    "s-domain<=>s-prime-zero": "R is an S-integral domain iff (0) is S-prime",
    "s-domain<=>cancellation": "R is an S-integral domain iff S-cancellation holds",
    "s-prime<=>quotient-s-domain": "P is S-prime iff R/P is an image-of-S integral domain",
    "s-maximal<=>quotient-s-field": "M is S-maximal iff R/M is an image-of-S field",
    "s-field<=>no-s-proper": "R is an S-field iff no ideal is S-proper",
    "s-field=>s-domain": "every S-field is an S-integral domain",
    "monotone-in-S": "S1 inside S2 and R an S1-integral domain give an S2-integral domain",
    "boolean:s-prime=>s-maximal": "in a Boolean ring S-prime ideals are S-maximal",
    "s-domain=>s-reduced": "an S-integral domain is S-reduced with no S-non-zero S-nilpotent",
    "s-domain=>idempotents-in-S": "S-integral domain, S free of zero divisors: nonzero S-idempotents lie in S",
    "s-prime=>quotient-s-field": "R/P is an image-of-S field for every S-prime P",
    "iso-transport": "every verdict is unchanged under a relabelling isomorphism",
    "witnesses-certify": "emitted witnesses pass the naive re-check",
    "oracle-isomorphism": "the fraction ring is isomorphic to R/{a : sa = 0 for some s}",
    "unit-images": "phi(s) is a unit for every s in S",
    "s-domain<=>local-domain": "R is an S-integral domain iff the fraction ring is a domain",
    "s-field=>local-s-field": "R an S-field gives a phi(S)-field",
    "local-s-field=>s-field": "for proper S, a phi(S)-field fraction ring gives an S-field",
    "s-proper=>phi-injective": "proper S gives injective phi and proper phi(S)",
    "s-domain=>s-field": "a finite S-integral domain is an S-field",
    "power-chain": "ideal powers descend and stabilise within |R| steps",
    "pmsb": "some s and m have s*rad(I)^m inside I",
    "annihilator": "some t in S and a in I have (t + a) B = 0 for B the stable power of I",
    "decomposition": "S-primary decompositions are exact, primary and irredundant",
    "primary-radical-s-prime": "the radical of an S-primary ideal is S-prime",
}

# cap for the cubic witness re-checks inside a sweep
CERTIFY_MAX_ORDER = 24

# the fault-injection target: one product-table entry of Z12
FAULT_RING = "Z12"
FAULT_ENTRY = (5, 7)


def inject_fault(R: FiniteRing) -> FiniteRing:
    """Bump one product-table entry, leaving its mirror image alone."""
    a, b = FAULT_ENTRY
    return with_mul_entry(R, a, b, (R.mul[a][b] + 1) % R.order)


def normalize_invariant(name: str) -> str:
    """Accept arrow glyphs and stray blanks: ``"boolean: s-prime⇒s-maximal"`` works."""
    text = unicodedata.normalize("NFKC", name)
    text = text.replace("⟺", "<=>").replace("⇔", "<=>").replace("⇒", "=>").replace("→", "=>")
    text = "".join(text.split()).lower()
    if text not in INVARIANTS:
        raise KeyError(f"unknown invariant {name!r}; known: {', '.join(INVARIANTS)}")
    return text


# ---------------------------------------------------------------- ring families

_IDEALIZATION_BASES = [
    "Z2(+)self", "Z3(+)self", "Z4(+)self", "Z5(+)self",
    "Z2(+)Z2", "Z3(+)Z3", "Z4(+)Z2", "Z4(+)Z4", "Z5(+)Z5", "Z6(+)Z2", "Z6(+)Z3",
    "Z8(+)Z2", "Z8(+)Z4", "Z9(+)Z3", "Z10(+)Z2", "Z12(+)Z2", "Z14(+)Z2", "Z16(+)Z2",
    "Z2(+)self(+)self", "Z3(+)Z3(+)self",
]  # fmt: skip


def _order_of(spec: str) -> int:
    return build_ring(spec, max_order=10**6).order


def cyclic_family(max_order: int) -> list[str]:
    return [f"Z{n}" for n in range(2, max_order + 1)]


def product_family(max_order: int) -> list[str]:
    """``A x B`` for cyclic or small idealization factors, ``|A| ≤ |B|``."""
    factors = [f"Z{n}" for n in range(2, max_order // 2 + 1)]
    factors += [s for s in _IDEALIZATION_BASES if _order_of(s) <= max_order // 2]
    factors.sort(key=lambda s: (_order_of(s), s))
    out = []
    for i, a in enumerate(factors):
        for b in factors[i:]:
            if _order_of(a) * _order_of(b) <= max_order:
                out.append(f"{a}x{b}")
    return out


def idealization_family(max_order: int) -> list[str]:
    return [s for s in _IDEALIZATION_BASES if _order_of(s) <= max_order]


def quotient_family(max_order: int, cyclic_max: int = 24, base_max: int = 32) -> list[str]:
    """Quotients of order ≤ ``max_order`` of cyclic rings and idealizations by every proper nonzero ideal."""
    bases = [f"Z{n}" for n in range(2, cyclic_max + 1)]
    bases += [s for s in _IDEALIZATION_BASES if _order_of(s) <= base_max]
    out = []
    for spec in bases:
        R = build_ring(spec, max_order=base_max)
        for m in ideal_masks(R):
            if m == 1 or m == R.full_mask or R.order // m.bit_count() > max_order:
                continue
            I = ideal_from_mask(R, m)
            out.append(f"{spec}/({','.join(str(g) for g in I.generators)})")
    return out


def boolean_family(k_max: int = 3) -> list[str]:
    return ["x".join(["Z2"] * k) for k in range(1, k_max + 1)]


FAMILIES = ("standard", "cyclic", "products", "quotients", "idealizations", "boolean")


def ring_family(family: str = "standard", max_order: int = 24, other_max: int = 16) -> list[str]:
    """Ring specs to sweep.

    ``standard`` is every ``Z_n`` with ``n ≤ max_order`` plus products,
    quotients and idealizations of order ≤ ``min(other_max, max_order)`` and
    the Boolean rings ``(Z2)^k`` for ``k ≤ 3``.  Isomorphic duplicates are kept.
    """
    small = min(other_max, max_order)
    parts = {
        "cyclic": lambda: cyclic_family(max_order),
        "products": lambda: product_family(small),
        "quotients": lambda: quotient_family(small),
        "idealizations": lambda: idealization_family(small),
        "boolean": lambda: [s for s in boolean_family(3) if 2 ** s.count("Z2") <= max_order],
    }
    if family == "standard":
        specs: list[str] = []
        for key in ("cyclic", "products", "quotients", "idealizations", "boolean"):
            specs += [s for s in parts[key]() if s not in specs]
        return specs
    if family not in parts:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    return parts[family]()


# ---------------------------------------------------------------- per-ring sweep


@dataclass
class Tally:
    checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)


class _Sweep:
    def __init__(self, R: FiniteRing, spec: str, wanted: tuple[str, ...]):
        self.R = R
        self.spec = spec
        self.wanted = set(wanted)
        self.tallies = {name: Tally() for name in wanted}
        self.errors: list[dict] = []

    def want(self, name: str) -> bool:
        return name in self.wanted

    def record(self, name: str, ok: bool, S: MultSet | None = None, ideal: Ideal | None = None, detail: str = ""):
        t = self.tallies[name]
        t.checked += 1
        if not ok:
            cex = {"ring": self.spec}
            if S is not None:
                cex["mult_set"] = ",".join(str(x) for x in S.elements)
            if ideal is not None:
                cex["ideal"] = ",".join(str(x) for x in ideal.generators)
            if detail:
                cex["detail"] = detail
            t.counterexamples.append(cex)


def _proper_masks(R: FiniteRing) -> list[int]:
    return [m for m in ideal_masks(R) if m != R.full_mask]


def _quotient_view(R: FiniteRing, mask: int, S: MultSet):
    Q, f = quotient_ring(R, ideal_from_mask(R, mask))
    return Q, push_mult_set(S, f, Q)


def _verdicts(R: FiniteRing, S: MultSet) -> tuple:
    """Every verdict that must survive a relabelling, in a fixed order."""
    out = [
        is_s_integral_domain(R, S).verdict,
        has_s_cancellation(R, S).verdict,
        is_s_field(R, S).verdict,
        is_s_reduced(R, S).verdict,
    ]
    for m in ideal_masks(R):
        I = ideal_from_mask(R, m)
        out.append(is_s_proper(R, I, S).verdict)
        if not m & S.members:
            out += [is_s_prime(R, I, S).verdict, is_s_maximal(R, I, S).verdict, is_s_primary(R, I, S).verdict]
    return tuple(out)


def _transport_key(R: FiniteRing, S: MultSet, f) -> tuple:
    """The relabelled ring's verdicts, listed in the source ring's ideal order."""
    R2, T = f.target, apply_iso(f, S)
    out = [
        is_s_integral_domain(R2, T).verdict,
        has_s_cancellation(R2, T).verdict,
        is_s_field(R2, T).verdict,
        is_s_reduced(R2, T).verdict,
    ]
    for m in ideal_masks(R):
        I2 = apply_iso(f, ideal_from_mask(R, m))
        out.append(is_s_proper(R2, I2, T).verdict)
        if not m & S.members:
            out += [is_s_prime(R2, I2, T).verdict, is_s_maximal(R2, I2, T).verdict, is_s_primary(R2, I2, T).verdict]
    return tuple(out)


def _relabelling(R: FiniteRing):
    n = R.order
    perm = [0, 1] + list(range(n - 1, 1, -1)) if n > 2 else list(range(n))
    return relabel(R, perm)[1]


@dataclass
class RingSweep:
    spec: str
    mult_sets: int
    tallies: dict[str, Tally]
    errors: list[dict]


def sweep_ring(R: FiniteRing, spec: str, invariants: tuple[str, ...] = tuple(INVARIANTS)) -> RingSweep:
    """Evaluate every requested invariant on ``R`` against all mult sets missing 0."""
    sw = _Sweep(R, spec, invariants)
    if sw.want("ring-axioms"):
        bad = ring_axiom_violations(R, limit=1)
        sw.record("ring-axioms", not bad, detail=bad[0] if bad else "")
        if bad:
            return RingSweep(spec, 0, sw.tallies, sw.errors)
    mult_sets = all_mult_sets(R)
    proper = _proper_masks(R)
    zd_mask = sum(1 << z for z in zero_divisors(R))
    boolean = is_boolean(R)
    iso = _relabelling(R) if sw.want("iso-transport") else None
    certify_here = R.order <= CERTIFY_MAX_ORDER

    if sw.want("power-chain"):
        for m in proper:
            I = ideal_from_mask(R, m)
            try:
                chain = power_intersection(R, I)
            except RingLabError as exc:
                sw.record("power-chain", False, ideal=I, detail=str(exc))
                continue
            ok = chain.stabilization_index <= R.order and all(
                b.members & ~a.members == 0 for a, b in zip(chain.powers, chain.powers[1:])
            )
            sw.record("power-chain", ok, ideal=I)

    sid_by_set: dict[int, bool] = {}
    for S in mult_sets:
        try:
            _sweep_pair(sw, R, S, proper, zd_mask, boolean, iso, certify_here, sid_by_set)
        except Exception as exc:  # noqa: BLE001 - reported, never swallowed
            # a theorem-backed search failed or a checker met a broken table
            sw.errors.append({"ring": spec, "mult_set": ",".join(map(str, S.elements)), "detail": repr(exc)})
            sid_by_set.setdefault(S.members, False)

    if sw.want("monotone-in-S"):
        for S1 in mult_sets:
            if not sid_by_set[S1.members]:
                continue
            for S2 in mult_sets:
                if S1.members & ~S2.members == 0:
                    sw.record("monotone-in-S", sid_by_set[S2.members], S=S2, detail=f"subset {S1.elements}")
    return RingSweep(spec, len(mult_sets), sw.tallies, sw.errors)


def _sweep_pair(sw: _Sweep, R, S, proper, zd_mask, boolean, iso, certify_here, sid_by_set):
    sid_w = is_s_integral_domain(R, S)
    sid = sid_w.verdict
    sid_by_set[S.members] = sid
    field_w = is_s_field(R, S)
    s_field = field_w.verdict
    zero = ideal_from_mask(R, 1)

    if sw.want("s-domain<=>s-prime-zero"):
        sw.record("s-domain<=>s-prime-zero", sid == is_s_prime(R, zero, S).verdict, S)
    if sw.want("s-domain<=>cancellation"):
        sw.record("s-domain<=>cancellation", sid == has_s_cancellation(R, S).verdict, S)
    if sw.want("s-field=>s-domain"):
        sw.record("s-field=>s-domain", (not s_field) or sid, S)
    if sw.want("s-domain=>s-field"):
        sw.record("s-domain=>s-field", (not sid) or s_field, S)
    if sw.want("s-field<=>no-s-proper"):
        any_proper = any(is_s_proper(R, ideal_from_mask(R, m), S).verdict for m in ideal_masks(R))
        sw.record("s-field<=>no-s-proper", s_field == (not any_proper), S)
    if sw.want("s-domain=>s-reduced") and sid:
        ok = is_s_reduced(R, S).verdict and not any(
            is_s_non_zero(R, a, S).verdict and is_s_nilpotent(R, a, S).verdict for a in R.elements
        )
        sw.record("s-domain=>s-reduced", ok, S)
    if sw.want("s-domain=>idempotents-in-S") and sid and not S.members & zd_mask:
        ok = all(a in S for a in R.elements if a and is_s_idempotent(R, a, S).verdict)
        sw.record("s-domain=>idempotents-in-S", ok, S)

    for m in proper:
        if m & S.members:
            continue
        I = ideal_from_mask(R, m)
        prime_w = is_s_prime(R, I, S)
        max_w = is_s_maximal(R, I, S)
        if sw.want("s-prime<=>quotient-s-domain") or sw.want("s-maximal<=>quotient-s-field") or sw.want(
            "s-prime=>quotient-s-field"
        ):
            Q, T = _quotient_view(R, m, S)
            if sw.want("s-prime<=>quotient-s-domain"):
                sw.record("s-prime<=>quotient-s-domain", prime_w.verdict == is_s_integral_domain(Q, T).verdict, S, I)
            q_field = is_s_field(Q, T).verdict
            if sw.want("s-maximal<=>quotient-s-field"):
                sw.record("s-maximal<=>quotient-s-field", max_w.verdict == q_field, S, I)
            if sw.want("s-prime=>quotient-s-field") and prime_w.verdict:
                sw.record("s-prime=>quotient-s-field", q_field, S, I)
        if sw.want("boolean:s-prime=>s-maximal") and boolean and prime_w.verdict:
            sw.record("boolean:s-prime=>s-maximal", max_w.verdict, S, I)
        if sw.want("pmsb"):
            w = pmsb_witness(R, I, S)
            sw.record("pmsb", certify.certify_pmsb(R, set(I), S, w), S, I)
        if sw.want("annihilator"):
            w = krull_annihilator(R, I, S)
            sw.record("annihilator", certify.certify_annihilator(R, set(I), S, w), S, I)
        if sw.want("decomposition"):
            comps = s_primary_decomposition(R, I, S)
            sw.record("decomposition", certify.certify_decomposition(R, set(I), S, comps), S, I)
        if sw.want("primary-radical-s-prime") and s_primary_multiplier(R, m, S.members) is not None:
            sw.record("primary-radical-s-prime", radical_of_primary_is_s_prime(R, I, S), S, I)
        if sw.want("witnesses-certify") and certify_here:
            ok = certify.certify_prime_like(R, set(I), S, prime_w) and certify.certify_s_maximal(
                R, set(I), S, max_w
            )
            ok = ok and certify.certify_s_primary(R, set(I), S, is_s_primary(R, I, S))
            sw.record("witnesses-certify", ok, S, I)

    if sw.want("witnesses-certify") and certify_here:
        ok = certify.certify_prime_like(R, {0}, S, sid_w) and certify.certify_s_maximal(R, {0}, S, field_w)
        ok = ok and certify.certify_cancellation(R, S, has_s_cancellation(R, S))
        sw.record("witnesses-certify", ok, S)

    if iso is not None:
        sw.record("iso-transport", _verdicts(R, S) == _transport_key(R, S, iso), S)

    loc_names = (
        "oracle-isomorphism",
        "unit-images",
        "s-domain<=>local-domain",
        "s-field=>local-s-field",
        "local-s-field=>s-field",
        "s-proper=>phi-injective",
    )
    if any(sw.want(n) for n in loc_names):
        L = localize(R, S)
        if sw.want("oracle-isomorphism"):
            sw.record("oracle-isomorphism", oracle_isomorphism(L) is not None, S)
        if sw.want("unit-images"):
            sw.record("unit-images", unit_images_ok(L), S)
        report = check_localization_theorems(R, S, L, strict=False)
        clauses = {c.name: c for c in report.clauses}
        for name, key in (
            ("s-domain<=>local-domain", "a"),
            ("s-field=>local-s-field", "b"),
            ("local-s-field=>s-field", "c"),
        ):
            if sw.want(name) and clauses[key].applicable:
                sw.record(name, clauses[key].holds, S)
        if sw.want("s-proper=>phi-injective") and not S.members & zd_mask:
            injective = len(set(L.phi)) == R.order
            image_proper = not L.phi_s.members & 1 and all(
                not any(L.local_ring.mul[x][y] == 0 for y in L.local_ring.elements if y) for x in L.phi_s
            )
            sw.record("s-proper=>phi-injective", injective and image_proper, S)


# ---------------------------------------------------------------- whole survey


@dataclass(frozen=True)
class SurveyConfig:
    family: str = "standard"
    max_order: int = 24
    other_max: int = 16
    invariants: tuple[str, ...] = tuple(INVARIANTS)
    jobs: int = 1
    inject_fault: bool = False


@dataclass
class SurveyResult:
    config: SurveyConfig
    rings: list[str]
    mult_set_count: int
    tallies: dict[str, Tally]
    errors: list[dict]

    @property
    def counterexample_count(self) -> int:
        return sum(len(t.counterexamples) for t in self.tallies.values()) + len(self.errors)


def _sweep_spec(args: tuple[str, tuple[str, ...], int, bool]) -> RingSweep:
    spec, invariants, cap, fault = args
    R = build_ring(spec, max_order=cap)
    if fault and spec == FAULT_RING:
        R = inject_fault(R)
    return sweep_ring(R, spec, invariants)


def run_survey(config: SurveyConfig, rings: list[str] | None = None) -> SurveyResult:
    specs = rings if rings is not None else ring_family(config.family, config.max_order, config.other_max)
    cap = max(config.max_order, 32)
    tasks = [(s, config.invariants, cap, config.inject_fault) for s in specs]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_sweep_spec, tasks))
    else:
        results = [_sweep_spec(t) for t in tasks]
    merged = {name: Tally() for name in config.invariants}
    errors: list[dict] = []
    for r in results:  # family order, whatever the completion order
        errors += r.errors
        for name, t in r.tallies.items():
            merged[name].checked += t.checked
            merged[name].counterexamples += t.counterexamples
    return SurveyResult(config, list(specs), sum(r.mult_sets for r in results), merged, errors)
