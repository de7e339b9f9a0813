"""Decision procedures for S-variant ring properties, each returning a witness.

All searches run over element indices.  When several witnesses qualify the
smallest ``s`` in index order is reported; pair and triple counterexamples
are the first tuple in "smallest largest entry, then lexicographic" order.

Quantifier note: the S-integral-domain, S-prime, S-maximal and S-primary
conditions ask for one ``s`` serving every instance.  On a finite ring the
product ``u`` of all members of ``S`` serves every instance that any single
member serves, so a failure at ``u`` yields a concrete counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .errors import DisjointnessError
from .ideals import Ideal, MultSet, colon_mask, ideal_from_mask, ideal_masks
from .ring import FiniteRing, elements_of, mask_of, nilpotents, units

DEGENERATE_ZERO_IN_S = "degenerate: 0 in S"

KINDS = (
    "uniform-s",
    "per-instance-s",
    "pair-counterexample",
    "triple-counterexample",
    "ideal-counterexample",
    "element-counterexample",
    "clause-failure",
    "none",
)


@dataclass(frozen=True)
class Witness:
    """Verdict plus the data that certifies it.

    ``data`` maps names (``"s"``, ``"a"``, ``"b"``, ``"ideal"``, …) to element
    indices or :class:`Ideal` objects.
    """

    verdict: bool
    kind: str
    data: dict[str, Any] = field(default_factory=dict)
    flags: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")

    def __bool__(self):
        return self.verdict


# ---------------------------------------------------------------- shared machinery


def _s_order(S: MultSet) -> list[int]:
    return elements_of(S.members)


def _s_product(R: FiniteRing, S_mask: int) -> int:
    u = R.one
    for s in elements_of(S_mask):
        u = R.mul[u][s]
    return u


@lru_cache(maxsize=4096)
def _preimage_rows(R: FiniteRing, P_mask: int) -> tuple[int, ...]:
    """``rows[a]`` = bitmask of ``{b : a·b ∈ P}``."""
    return tuple(mask_of(b for b in R.elements if P_mask >> R.mul[a][b] & 1) for a in R.elements)


@lru_cache(maxsize=65536)
def _colon(R: FiniteRing, P_mask: int, s: int) -> int:
    return colon_mask(R, P_mask, s)


def _pairs_colex(n: int):
    for b in range(n):
        for a in range(b + 1):
            yield a, b


def _prime_condition(R: FiniteRing, P_mask: int, s: int) -> bool:
    """Does ``ab ∈ P ⇒ sa ∈ P or sb ∈ P`` hold for every pair?"""
    A = _colon(R, P_mask, s)
    rows = _preimage_rows(R, P_mask)
    for a in R.elements:
        if not A >> a & 1 and rows[a] & ~A:
            return False
    return True


@lru_cache(maxsize=65536)
def s_prime_multiplier(R: FiniteRing, P_mask: int, S_mask: int) -> int | None:
    """Smallest ``s`` making ``P`` satisfy the S-prime condition, or ``None``."""
    for s in elements_of(S_mask):
        if _prime_condition(R, P_mask, s):
            return s
    return None


def _prime_counterexample(R: FiniteRing, P_mask: int, S_mask: int) -> tuple[int, int]:
    u = _s_product(R, S_mask)
    A = _colon(R, P_mask, u)
    for a, b in _pairs_colex(R.order):
        if P_mask >> R.mul[a][b] & 1 and not A >> a & 1 and not A >> b & 1:
            return a, b
    raise AssertionError("no counterexample although every s failed")


def _require_disjoint(X: Ideal, S: MultSet, what: str) -> None:
    if X.members & S.members:
        x = elements_of(X.members & S.members)[0]
        raise DisjointnessError(f"{what} meets S (both contain {X.ring.name(x)})")


# ---------------------------------------------------------------- ring-level properties


def is_s_integral_domain(R: FiniteRing, S: MultSet) -> Witness:
    """One ``s ∈ S`` such that ``ab = 0`` forces ``sa = 0`` or ``sb = 0``.

    ``0 ∈ S`` is allowed; the verdict is then trivially true and flagged.
    """
    R.require_same(S.ring)
    flags = (DEGENERATE_ZERO_IN_S,) if S.contains_zero else ()
    s = s_prime_multiplier(R, 1, S.members)
    if s is not None:
        return Witness(True, "uniform-s", {"s": s}, flags)
    a, b = _prime_counterexample(R, 1, S.members)
    return Witness(False, "pair-counterexample", {"a": a, "b": b}, flags)


@lru_cache(maxsize=4096)
def _annihilators(R: FiniteRing) -> tuple[int, ...]:
    return _preimage_rows(R, 1)


def has_s_cancellation(R: FiniteRing, S: MultSet) -> Witness:
    """For all ``a, b, c`` with ``sa ≠ 0`` for every ``s`` and ``ab = ac``, some ``s`` has ``sb = sc``.

    The ``s`` in the conclusion may depend on the triple.  Since
    ``ab = ac`` iff ``a(b - c) = 0`` and ``sb = sc`` iff ``s(b - c) = 0``, the
    scan runs over differences ``d = b - c``.
    """
    R.require_same(S.ring)
    ann = _annihilators(R)
    s_zero = mask_of(x for x in R.elements if ann[x] & S.members)
    bad: dict[int, int] = {}
    triples = 0
    must_kill = 0
    for a in R.elements:
        if s_zero >> a & 1:
            continue
        triples += ann[a].bit_count() * R.order
        must_kill |= ann[a]
        d_bad = ann[a] & ~s_zero
        if d_bad:
            bad[a] = d_bad
    if not bad:
        uniform = next(s for s in elements_of(S.members) if not must_kill & ~ann[s])
        return Witness(True, "per-instance-s", {"uniform_s": uniform, "triples_checked": triples})
    sub = R.sub
    best = None
    for a, d_bad in bad.items():
        for b in R.elements:
            row = sub[b]
            for c in R.elements:
                if d_bad >> row[c] & 1:
                    key = (max(a, b, c), a, b, c)
                    if best is None or key < best:
                        best = key
                    break
    _, a, b, c = best
    return Witness(False, "triple-counterexample", {"a": a, "b": b, "c": c})


def _ideals_above(R: FiniteRing, M_mask: int) -> list[int]:
    return [m for m in ideal_masks(R) if M_mask & ~m == 0]


@lru_cache(maxsize=65536)
def s_maximal_multiplier(R: FiniteRing, M_mask: int, S_mask: int) -> tuple[int | None, int | None]:
    """``(s, None)`` for the smallest working ``s``, else ``(None, offending ideal mask)``."""
    above = [J for J in _ideals_above(R, M_mask) if not J & S_mask]
    for s in elements_of(S_mask):
        A = _colon(R, M_mask, s)
        if all(J & ~A == 0 for J in above):
            return s, None
    u = _s_product(R, S_mask)
    A = _colon(R, M_mask, u)
    return None, next(J for J in above if J & ~A)


def is_s_prime(R: FiniteRing, P: Ideal, S: MultSet) -> Witness:
    R.require_same(P.ring)
    R.require_same(S.ring)
    _require_disjoint(P, S, "P")
    s = s_prime_multiplier(R, P.members, S.members)
    if s is not None:
        return Witness(True, "uniform-s", {"s": s})
    a, b = _prime_counterexample(R, P.members, S.members)
    return Witness(False, "pair-counterexample", {"a": a, "b": b})


def is_s_maximal(R: FiniteRing, M: Ideal, S: MultSet) -> Witness:
    """One ``s`` with ``sJ ⊆ M`` for every ideal ``J ⊇ M`` that misses ``S``."""
    R.require_same(M.ring)
    R.require_same(S.ring)
    _require_disjoint(M, S, "M")
    s, J = s_maximal_multiplier(R, M.members, S.members)
    if s is not None:
        return Witness(True, "uniform-s", {"s": s})
    return Witness(False, "ideal-counterexample", {"ideal": ideal_from_mask(R, J)})


def is_s_field(R: FiniteRing, S: MultSet) -> Witness:
    if S.contains_zero:
        raise DisjointnessError("an S-field needs 0 not in S")
    return is_s_maximal(R, Ideal(R, 1, (0,)), S)


def is_s_proper(R: FiniteRing, I: Ideal, S: MultSet) -> Witness:
    """``I ∩ S = ∅`` and ``sI ≠ 0`` for every ``s ∈ S``."""
    R.require_same(I.ring)
    common = I.members & S.members
    if common:
        return Witness(False, "clause-failure", {"clause": "meets S", "element": elements_of(common)[0]})
    for s in _s_order(S):
        if R.scale_mask(s, I.members) == 1:
            return Witness(False, "clause-failure", {"clause": "annihilated", "s": s})
    return Witness(True, "none")


# ---------------------------------------------------------------- element properties


def is_s_idempotent(R: FiniteRing, a: int, S: MultSet) -> Witness:
    sq = R.mul[a][a]
    for s in _s_order(S):
        if R.mul[s][a] == sq:
            return Witness(True, "uniform-s", {"s": s})
    return Witness(False, "none")


def is_s_nilpotent(R: FiniteRing, a: int, S: MultSet) -> Witness:
    """``s·aⁿ = 0``; the smallest ``n`` is reported, then the smallest ``s`` for it."""
    for n, p in enumerate(R.power_values(a), start=1):
        for s in _s_order(S):
            if R.mul[s][p] == 0:
                return Witness(True, "uniform-s", {"s": s, "n": n})
    return Witness(False, "none")


def is_s_zero(R: FiniteRing, a: int, S: MultSet) -> Witness:
    for s in _s_order(S):
        if R.mul[s][a] == 0:
            return Witness(True, "uniform-s", {"s": s})
    return Witness(False, "none")


def is_s_non_zero(R: FiniteRing, a: int, S: MultSet) -> Witness:
    z = is_s_zero(R, a, S)
    if z.verdict:
        return Witness(False, "per-instance-s", {"s": z.data["s"]})
    return Witness(True, "none")


def is_s_reduced(R: FiniteRing, S: MultSet) -> Witness:
    """Every nilpotent ``r`` has ``sr = 0`` for some ``s``; killers are listed per element."""
    killers = {}
    for r in nilpotents(R):
        z = is_s_zero(R, r, S)
        if not z.verdict:
            return Witness(False, "element-counterexample", {"r": r})
        killers[r] = z.data["s"]
    return Witness(True, "per-instance-s", {"killers": killers})


def s_finite_witness(R: FiniteRing, I: Ideal, S: MultSet) -> Witness:
    """``sI ⊆ J ⊆ I`` with ``J`` finitely generated: always ``s = 1``, ``J = I`` here."""
    return Witness(True, "uniform-s", {"s": R.one, "J": I}, ("trivial: finite ring",))


# ---------------------------------------------------------------- classical baselines


def is_integral_domain(R: FiniteRing) -> bool:
    if R.order < 2:
        return False
    ann = _annihilators(R)
    return all(ann[a] == 1 for a in R.elements if a)


def is_field(R: FiniteRing) -> bool:
    return R.order >= 2 and len(units(R)) == R.order - 1


def is_prime(R: FiniteRing, P: Ideal) -> bool:
    if not P.is_proper:
        return False
    rows = _preimage_rows(R, P.members)
    return all(rows[a] & ~P.members == 0 for a in R.elements if not P.members >> a & 1)


def is_maximal(R: FiniteRing, M: Ideal) -> bool:
    if not M.is_proper:
        return False
    return all(m in (M.members, R.full_mask) for m in _ideals_above(R, M.members))


# ---------------------------------------------------------------- helpers used by other modules


def push_mult_set(S: MultSet, f: tuple[int, ...], target: FiniteRing) -> MultSet:
    """Image of ``S`` under a ring homomorphism (still multiplicatively closed)."""
    return MultSet(target, mask_of(f[s] for s in S), tuple(f[g] for g in S.generators))


def pull_ideal_mask(f: tuple[int, ...], mask: int) -> int:
    return mask_of(a for a, fa in enumerate(f) if mask >> fa & 1)
