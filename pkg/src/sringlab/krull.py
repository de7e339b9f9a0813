"""Stabilised ideal powers, annihilator witnesses, S-primary decomposition and S-dimension."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .classify import (
    Witness,
    _colon,
    _preimage_rows,
    _s_product,
    is_s_integral_domain,
    s_prime_multiplier,
)
from .errors import DisjointnessError, ImproperIdealError, TheoremViolation
from .ideals import (
    Ideal,
    MultSet,
    ideal_from_mask,
    ideal_masks,
    ideal_product,
    jacobson_radical,
    mult_closure,
    radical,
    radical_mask,
    s_jacobson_radical,
    _product_mask,
    _sum_masks,
)
from .localization import extend_ideal, localize
from .ring import FiniteRing, elements_of

CHAIN_READINGS = ("corrected", "literal")

S_PRIMARY_NOTE = "S-primary: some s in S has ab in Q => sa in Q or s*b^n in Q for some n"


def _require_disjoint(I: Ideal, S: MultSet) -> None:
    if I.members & S.members:
        raise DisjointnessError(f"ideal {I.elements} meets S {S.elements}")


# ---------------------------------------------------------------- power chains


@dataclass(frozen=True)
class PowerChain:
    """``I, I², …`` up to the first repeat.

    ``powers[k]`` is ``I^(k+1)``; the chain stabilises at exponent
    ``stabilization_index`` = k, where ``I^k = I^(k+1)``.
    """

    base: Ideal
    powers: tuple[Ideal, ...]
    stabilization_index: int
    intersection: Ideal


def power_intersection(R: FiniteRing, I: Ideal) -> PowerChain:
    R.require_same(I.ring)
    if not I.is_proper:
        raise ImproperIdealError("the power chain of the unit ideal is constant and not of interest")
    powers = [I]
    for _ in range(R.order + 1):
        nxt = ideal_product(powers[-1], I)
        powers.append(nxt)
        if nxt == powers[-2]:
            k = len(powers) - 1
            return PowerChain(I, tuple(powers), k, powers[-1])
    raise TheoremViolation("ideal powers failed to stabilise within |R| steps")


def _stable_power_mask(R: FiniteRing, mask: int) -> int:
    cur = mask
    while True:
        nxt = _product_mask(R, cur, mask)
        if nxt == cur:
            return cur
        cur = nxt


# ---------------------------------------------------------------- radical powers


def pmsb_witness(R: FiniteRing, I: Ideal, S: MultSet) -> Witness:
    """Smallest ``m``, then smallest ``s``, with ``s·rad(I)^m ⊆ I``."""
    _require_disjoint(I, S)
    rad = radical_mask(R, I.members)
    power = rad
    for m in range(1, R.order + 1):
        for s in elements_of(S.members):
            if R.scale_mask(s, power) & ~I.members == 0:
                return Witness(True, "uniform-s", {"s": s, "m": m})
        power = _product_mask(R, power, rad)
    raise TheoremViolation(f"no (s, m) with s*rad(I)^m inside I for I={I.elements} in {R.recipe}")


# ---------------------------------------------------------------- annihilators


def krull_annihilator(R: FiniteRing, I: Ideal, S: MultSet) -> Witness:
    """Witnesses for the annihilator of ``B = ⋂ Iⁿ``.

    Stage one finds ``(t, a) ∈ S × I`` with ``(t + a)·B = 0``, scanning ``a``
    first, then ``t``; it must succeed because ``B = I·B``.  Stage two looks
    for ``t ∈ S`` with ``t·B = 0`` alone and only records what it finds.
    """
    _require_disjoint(I, S)
    B = power_intersection(R, I).intersection
    found = _nakayama_pair(R, I.members, B.members, S.members)
    if found is None:
        raise TheoremViolation(f"no (t, a) with (t+a)B = 0 for I={I.elements} in {R.recipe}")
    t, a = found
    plain = next((s for s in elements_of(S.members) if R.scale_mask(s, B.members) == 1), None)
    flags = [
        "stage ii: tB = 0 holds" if plain is not None else "stage ii: no t in S with tB = 0",
        "hypothesis: R is an S-integral domain"
        if is_s_integral_domain(R, S).verdict
        else "hypothesis unmet: R is not an S-integral domain",
    ]
    return Witness(True, "uniform-s", {"t": t, "a": a, "B": B, "annihilator_t": plain}, tuple(flags))


def _nakayama_pair(R: FiniteRing, I_mask: int, B_mask: int, S_mask: int) -> tuple[int, int] | None:
    for a in elements_of(I_mask):
        for t in elements_of(S_mask):
            if R.scale_mask(R.add[t][a], B_mask) == 1:
                return t, a
    return None


# ---------------------------------------------------------------- S-primary ideals


@lru_cache(maxsize=65536)
def s_primary_multiplier(R: FiniteRing, Q_mask: int, S_mask: int) -> int | None:
    """Smallest ``s`` with ``ab ∈ Q ⇒ sa ∈ Q or s·bⁿ ∈ Q`` for some ``n``, else ``None``.

    For a fixed ``s`` the second alternative says ``b`` lies in the radical of
    ``(Q : s)``.
    """
    rows = _preimage_rows(R, Q_mask)
    for s in elements_of(S_mask):
        A = _colon(R, Q_mask, s)
        B = radical_mask(R, A)
        if all(rows[a] & ~B == 0 for a in R.elements if not A >> a & 1):
            return s
    return None


def _primary_counterexample(R: FiniteRing, Q_mask: int, S_mask: int) -> tuple[int, int]:
    u = _s_product(R, S_mask)
    A = _colon(R, Q_mask, u)
    B = radical_mask(R, A)
    for m in R.elements:
        for a in range(m + 1):
            for b in range(m + 1):
                if max(a, b) == m and Q_mask >> R.mul[a][b] & 1 and not A >> a & 1 and not B >> b & 1:
                    return a, b
    raise AssertionError("no counterexample although every s failed")


def is_s_primary(R: FiniteRing, Q: Ideal, S: MultSet) -> Witness:
    R.require_same(Q.ring)
    _require_disjoint(Q, S)
    s = s_primary_multiplier(R, Q.members, S.members)
    if s is not None:
        return Witness(True, "uniform-s", {"s": s}, (S_PRIMARY_NOTE,))
    a, b = _primary_counterexample(R, Q.members, S.members)
    return Witness(False, "pair-counterexample", {"a": a, "b": b}, (S_PRIMARY_NOTE,))


def s_primary_decomposition(R: FiniteRing, I: Ideal, S: MultSet) -> list[Ideal]:
    """A fewest-components intersection of S-primary ideals equal to ``I``.

    Candidates are the S-primary ideals containing ``I`` and missing ``S``,
    in (size, bitmask) order; subsets are tried by increasing size and the
    first exact one is pruned of redundant components.
    """
    R.require_same(I.ring)
    _require_disjoint(I, S)
    cands = [
        m
        for m in ideal_masks(R)
        if I.members & ~m == 0 and not m & S.members and s_primary_multiplier(R, m, S.members) is not None
    ]
    for k in range(1, len(cands) + 1):
        for combo in combinations(cands, k):
            inter = R.full_mask
            for m in combo:
                inter &= m
            if inter == I.members:
                comps = list(combo)
                pruned = True
                while pruned and len(comps) > 1:
                    pruned = False
                    for i in range(len(comps)):
                        rest = R.full_mask
                        for j, m in enumerate(comps):
                            if j != i:
                                rest &= m
                        if rest == I.members:
                            del comps[i]
                            pruned = True
                            break
                return [ideal_from_mask(R, m) for m in comps]
    raise TheoremViolation(f"no S-primary decomposition of {I.elements} in {R.recipe}")


def is_irredundant(R: FiniteRing, I: Ideal, comps: list[Ideal]) -> bool:
    for i in range(len(comps)):
        rest = R.full_mask
        for j, Q in enumerate(comps):
            if j != i:
                rest &= Q.members
        if rest == I.members:
            return False
    return True


# ---------------------------------------------------------------- S-dimension


@dataclass(frozen=True)
class SChain:
    primes: tuple[Ideal, ...]
    reading: str = "corrected"

    @property
    def length(self) -> int:
        return max(len(self.primes) - 1, 0)


def s_strict_step(R: FiniteRing, upper: int, lower: int, S_mask: int, reading: str = "corrected") -> bool:
    """Is ``upper ⊃ lower`` an S-strict step?

    ``corrected``: ``s·upper ⊈ lower`` for every ``s``.  ``literal``:
    ``s·lower ⊈ upper`` for every ``s``, which never holds for a descending pair.
    """
    if reading not in CHAIN_READINGS:
        raise ValueError(f"unknown chain reading {reading!r}")
    if upper == lower or lower & ~upper:
        return False
    src, dst = (upper, lower) if reading == "corrected" else (lower, upper)
    return all(R.scale_mask(s, src) & ~dst for s in elements_of(S_mask))


def s_primes(R: FiniteRing, S: MultSet) -> list[Ideal]:
    return [
        ideal_from_mask(R, m)
        for m in ideal_masks(R)
        if not m & S.members and s_prime_multiplier(R, m, S.members) is not None
    ]


def s_dimension(R: FiniteRing, S: MultSet, reading: str = "corrected") -> tuple[int, SChain]:
    """Length of the longest S-strict chain of S-primes, and one chain attaining it."""
    if S.contains_zero:
        raise DisjointnessError("S-dimension needs 0 not in S")
    primes = [P.members for P in s_primes(R, S)]
    best: dict[int, list[int]] = {}
    for P in sorted(primes, key=lambda m: (m.bit_count(), m)):
        chain = [P]
        for Q in primes:
            if s_strict_step(R, P, Q, S.members, reading) and len(best[Q]) + 1 > len(chain):
                chain = [P] + best[Q]
        best[P] = chain
    top: list[int] = []
    for P in primes:
        if len(best[P]) > len(top):
            top = best[P]
    chain = SChain(tuple(ideal_from_mask(R, m) for m in top), reading)
    return chain.length, chain


# ---------------------------------------------------------------- report-style checks


@dataclass
class CheckReport:
    name: str
    status: str  # "pass", "fail" or "skipped"
    reason: str = ""
    clauses: dict[str, bool] = field(default_factory=dict)
    details: dict = field(default_factory=dict)


def check_product_decomposition(R: FiniteRing, S: MultSet, I: Ideal, reading: str = "corrected") -> CheckReport:
    """In ``S⁻¹R``, write ``S⁻¹I`` as a product of primaries with distinct radicals.

    Runs only when ``R`` is an S-integral domain of S-dimension at most one
    and ``I`` misses ``S``; otherwise the report is ``skipped`` with a reason.
    """
    name = "product decomposition"
    if S.contains_zero:
        return CheckReport(name, "skipped", "0 in S")
    if I.members & S.members:
        return CheckReport(name, "skipped", "I meets S")
    if not is_s_integral_domain(R, S).verdict:
        return CheckReport(name, "skipped", "R is not an S-integral domain")
    dim, _ = s_dimension(R, S, reading)
    if dim > 1:
        return CheckReport(name, "skipped", f"S-dimension {dim} > 1")
    L = localize(R, S)
    local = L.local_ring
    J = extend_ideal(L, I)
    if not J.is_proper:
        return CheckReport(name, "skipped", "S^-1 I is the unit ideal")
    trivial = mult_closure(local, [local.one])
    comps = s_primary_decomposition(local, J, trivial)
    groups: dict[int, int] = {}
    for Q in comps:
        r = radical_mask(local, Q.members)
        groups[r] = groups.get(r, local.full_mask) & Q.members
    merged = list(groups.values())
    radicals = list(groups)
    clauses = {
        "merged components are primary": all(
            s_primary_multiplier(local, m, trivial.members) is not None for m in merged
        ),
        "radicals pairwise comaximal": all(
            _sum_masks(local, p, q) == local.full_mask for p, q in combinations(radicals, 2)
        ),
    }
    product = merged[0]
    inter = merged[0]
    for m in merged[1:]:
        product = _product_mask(local, product, m)
        inter &= m
    clauses["product equals intersection"] = product == inter
    clauses["intersection equals S^-1 I"] = inter == J.members
    status = "pass" if all(clauses.values()) else "fail"
    details = {
        "local_order": local.order,
        "extended_ideal": J,
        "components": [ideal_from_mask(local, m) for m in merged],
    }
    return CheckReport(name, status, "", clauses, details)


def jacobson_corollary_check(R: FiniteRing, S: MultSet) -> CheckReport:
    """Search ``(s, a) ∈ S × I`` with ``(s + a)·⋂ Iⁿ = 0`` for ideals inside the Jacobson radical and for ``J_S(R)``."""
    if S.contains_zero:
        raise DisjointnessError("the Jacobson corollary check needs 0 not in S")
    J = jacobson_radical(R)
    entries = []
    for m in ideal_masks(R):
        if m & ~J.members or m & S.members:
            continue
        entries.append(("ideal inside J(R)", m))
    JS = s_jacobson_radical(R, S)
    entries.append(("S-Jacobson radical", JS.members))
    results = []
    ok = True
    for label, m in entries:
        if m == R.full_mask or m & S.members:
            results.append({"label": label, "ideal": ideal_from_mask(R, m), "skipped": "ideal meets S"})
            continue
        B = _stable_power_mask(R, m)
        found = _nakayama_pair(R, m, B, S.members)
        ok &= found is not None
        results.append(
            {
                "label": label,
                "ideal": ideal_from_mask(R, m),
                "B": ideal_from_mask(R, B),
                "s": None if found is None else found[0],
                "a": None if found is None else found[1],
            }
        )
    return CheckReport(
        "jacobson corollary",
        "pass" if ok else "fail",
        "",
        {"every (s, a) found": ok},
        {"jacobson_radical": J, "s_jacobson_radical": JS, "entries": results},
    )


def radical_of_primary_is_s_prime(R: FiniteRing, Q: Ideal, S: MultSet) -> bool:
    rad = radical(Q)
    return not rad.members & S.members and s_prime_multiplier(R, rad.members, S.members) is not None
