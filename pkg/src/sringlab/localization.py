"""Rings of fractions ``S⁻¹R`` built from pairs ``(a, s)``.

The construction materialises every fraction, merges equivalent ones with a
union-find, and reads the operation tables off the class representatives.
``R / {a : sa = 0 for some s ∈ S}`` is the independent oracle it is tested
against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import (
    is_field,
    is_integral_domain,
    is_s_field,
    is_s_integral_domain,
    push_mult_set,
)
from .errors import ImproperQuotientError, TheoremViolation
from .ideals import Ideal, MultSet, generated_ideal, ideal_from_mask, is_proper_mult_set
from .ring import FiniteRing, RingIso, elements_of, find_isomorphism, mask_of, quotient_ring


@dataclass(frozen=True)
class LocalizationResult:
    source: FiniteRing
    S: MultSet
    local_ring: FiniteRing
    phi: tuple[int, ...]
    phi_s: MultSet
    kernel: Ideal
    class_table: dict[tuple[int, int], int] = field(repr=False)

    @property
    def degenerate(self) -> bool:
        return self.local_ring.order == 1

    def fraction(self, a: int, s: int) -> int:
        return self.class_table[(a, s)]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def localize(R: FiniteRing, S: MultSet) -> LocalizationResult:
    """``S⁻¹R`` with ``(a, s) ~ (b, t)`` iff ``u(at - bs) = 0`` for some ``u ∈ S``."""
    R.require_same(S.ring)
    mul, add, sub = R.mul, R.add, R.sub
    dens = elements_of(S.members)
    killed = [any(mul[u][x] == 0 for u in dens) for x in R.elements]

    pairs = [(a, s) for a in R.elements for s in dens]
    uf = _UnionFind(len(pairs))
    roots: list[int] = []
    for i, (a, s) in enumerate(pairs):
        matched = False
        for r in list(roots):
            b, t = pairs[r]
            if killed[sub[mul[a][t]][mul[b][s]]]:
                uf.union(i, r)
                matched = True
        if not matched:
            roots.append(i)
        else:
            roots = sorted({uf.find(r) for r in roots})

    classes: dict[int, list[int]] = {}
    for i in range(len(pairs)):
        classes.setdefault(uf.find(i), []).append(i)
    reps = sorted(min(pairs[i] for i in members) for members in classes.values())
    pair_index = {p: i for i, p in enumerate(pairs)}
    index_of_root = {uf.find(pair_index[rep]): k for k, rep in enumerate(reps)}
    class_table = {p: index_of_root[uf.find(i)] for i, p in enumerate(pairs)}

    def cls(a: int, s: int) -> int:
        return class_table[(a, s)]

    add_t = tuple(
        tuple(cls(add[mul[a][t]][mul[b][s]], mul[s][t]) for (b, t) in reps) for (a, s) in reps
    )
    mul_t = tuple(tuple(cls(mul[a][b], mul[s][t]) for (b, t) in reps) for (a, s) in reps)
    labels = tuple(f"{R.name(a)} / {R.name(s)}" for a, s in reps)
    gens = ",".join(str(g) for g in S.generators)
    local = FiniteRing(add_t, mul_t, f"S^-1({R.recipe}; {gens})", labels, degenerate=len(reps) == 1)

    one = R.one
    phi = tuple(cls(r, one) for r in R.elements)
    kernel = ideal_from_mask(R, mask_of(a for a in R.elements if killed[a]))
    phi_s = push_mult_set(S, phi, local)
    return LocalizationResult(R, S, local, phi, phi_s, kernel, class_table)


def extend_ideal(L: LocalizationResult, I: Ideal) -> Ideal:
    """``S⁻¹I``: the ideal of the local ring generated by ``phi(I)``."""
    L.source.require_same(I.ring)
    return generated_ideal(L.local_ring, sorted({L.phi[a] for a in I}))


def contract_mask(L: LocalizationResult, mask: int) -> int:
    return mask_of(a for a in L.source.elements if mask >> L.phi[a] & 1)


def oracle_quotient(R: FiniteRing, S: MultSet) -> FiniteRing | None:
    """``R / {a : sa = 0 for some s}`` built by the quotient construction; ``None`` if that is the zero ring."""
    kernel = mask_of(a for a in R.elements if any(R.mul[s][a] == 0 for s in S))
    try:
        Q, _ = quotient_ring(R, ideal_from_mask(R, kernel))
    except ImproperQuotientError:
        return None
    return Q


def oracle_isomorphism(L: LocalizationResult) -> RingIso | bool | None:
    """Isomorphism from the fraction ring onto the oracle quotient.

    Returns ``True`` when both are the zero ring and ``None`` on mismatch.
    """
    Q = oracle_quotient(L.source, L.S)
    if Q is None:
        return True if L.degenerate else None
    if L.degenerate:
        return None
    return find_isomorphism(L.local_ring, Q)


def unit_images_ok(L: LocalizationResult) -> bool:
    """Every ``phi(s)`` is invertible in the local ring."""
    one = L.local_ring.one
    return all(one in L.local_ring.mul[L.phi[s]] for s in L.S)


@dataclass(frozen=True)
class TheoremClause:
    name: str
    statement: str
    applicable: bool
    premise: bool | None
    conclusion: bool | None
    holds: bool


@dataclass(frozen=True)
class LocalizationReport:
    ring: str
    mult_set: tuple[int, ...]
    local_order: int
    clauses: tuple[TheoremClause, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.clauses)


def check_localization_theorems(
    R: FiniteRing, S: MultSet, L: LocalizationResult | None = None, strict: bool = True
) -> LocalizationReport:
    """Instance-check the four transfer statements between ``R`` and ``S⁻¹R``.

    (a) S-integral domain iff ``S⁻¹R`` is a domain (``S`` finite here);
    (b) S-field implies ``S⁻¹R`` is a ``phi(S)``-field;
    (c) for proper ``S``, the converse of (b);
    (d) S-integral domain implies S-field.
    With ``strict`` a failing clause raises :class:`TheoremViolation`.
    """
    L = L or localize(R, S)
    local = L.local_ring
    clauses = []
    zero_free = not S.contains_zero
    s_id = is_s_integral_domain(R, S).verdict
    local_domain = is_integral_domain(local)
    clauses.append(
        TheoremClause("a", "S-integral domain <=> S^-1R integral domain", zero_free, s_id, local_domain,
                      (not zero_free) or s_id == local_domain)
    )
    s_field = is_s_field(R, S).verdict if zero_free else None
    local_s_field = is_s_field(local, L.phi_s).verdict if zero_free and not L.degenerate else None
    applicable = s_field is not None and local_s_field is not None
    clauses.append(
        TheoremClause("b", "S-field => S^-1R is a phi(S)-field", applicable, s_field, local_s_field,
                      (not applicable) or (not s_field) or local_s_field)
    )
    proper = is_proper_mult_set(S)
    applicable_c = applicable and proper
    clauses.append(
        TheoremClause("c", "S proper and S^-1R a phi(S)-field => S-field", applicable_c, local_s_field, s_field,
                      (not applicable_c) or (not local_s_field) or s_field)
    )
    applicable_d = s_field is not None
    clauses.append(
        TheoremClause("d", "S-integral domain => S-field", applicable_d, s_id, s_field,
                      (not applicable_d) or (not s_id) or s_field)
    )
    report = LocalizationReport(R.recipe, tuple(S.elements), local.order, tuple(clauses))
    if strict and not report.all_hold:
        bad = [c for c in clauses if not c.holds]
        raise TheoremViolation(f"{R.recipe} with S={S.elements}: clause(s) {[c.name for c in bad]} failed")
    return report


def local_is_field(L: LocalizationResult) -> bool:
    return not L.degenerate and is_field(L.local_ring)
