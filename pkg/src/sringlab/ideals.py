"""Multiplicative sets, ideals and ideal arithmetic on table rings.

Subsets of a ring are bitmasks over element indices.  Ideal lists are always
ordered by (size, bitmask value) so that witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import IdealAxiomError
from .ring import FiniteRing, elements_of, mask_of, zero_divisors


class _Subset:
    ring: FiniteRing
    members: int
    generators: tuple[int, ...]

    def __contains__(self, a: int) -> bool:
        return bool(self.members >> a & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(elements_of(self.members))

    def __len__(self) -> int:
        return self.members.bit_count()

    @property
    def elements(self) -> list[int]:
        return elements_of(self.members)

    def __eq__(self, other):
        if not isinstance(other, _Subset):
            return NotImplemented
        return self.members == other.members and self.ring == other.ring

    def __hash__(self):
        return hash((self.members, self.ring.order))

    def __le__(self, other: "_Subset") -> bool:
        return self.members & ~other.members == 0

    def __repr__(self):
        return f"{type(self).__name__}({self.ring.recipe}, {self.elements})"


@dataclass(frozen=True, eq=False, repr=False)
class MultSet(_Subset):
    """A multiplicatively closed subset containing 1, kept with its generators."""

    ring: FiniteRing
    members: int
    generators: tuple[int, ...] = ()

    @property
    def contains_zero(self) -> bool:
        return bool(self.members & 1)


@dataclass(frozen=True, eq=False, repr=False)
class Ideal(_Subset):
    ring: FiniteRing
    members: int
    generators: tuple[int, ...] = ()

    @property
    def is_proper(self) -> bool:
        return not (self.members >> self.ring.one & 1)

    def meets(self, S: MultSet) -> bool:
        return bool(self.members & S.members)


# ---------------------------------------------------------------- multiplicative sets


def _close_mult(R: FiniteRing, mask: int) -> int:
    mask |= 1 << R.one
    frontier = elements_of(mask)
    while frontier:
        new = []
        current = elements_of(mask)
        for a in frontier:
            row = R.mul[a]
            for b in current:
                c = row[b]
                if not mask >> c & 1:
                    mask |= 1 << c
                    new.append(c)
        frontier = new
    return mask


def mult_closure(R: FiniteRing, gens: Iterable[int]) -> MultSet:
    gens = tuple(gens)
    return MultSet(R, _close_mult(R, mask_of(gens)), gens)


def is_mult_closed(R: FiniteRing, mask: int) -> bool:
    return _close_mult(R, mask) == mask


def is_proper_mult_set(S: MultSet) -> bool:
    return not S.contains_zero and not (S.members & mask_of(zero_divisors(S.ring)))


def all_mult_sets(R: FiniteRing, allow_zero: bool = False) -> list[MultSet]:
    """Every multiplicatively closed subset of ``R`` containing 1.

    Found by closing each known set under one extra element until no new
    sets appear.  Sorted by (size, bitmask); generators are a minimal-index
    generating list.
    """
    start = _close_mult(R, 0)
    seen = {start: ()}
    frontier = [start]
    forbidden = 0 if allow_zero else 1
    while frontier:
        nxt = []
        for m in frontier:
            gens = seen[m]
            for a in R.elements:
                if m >> a & 1 or (forbidden and a == 0):
                    continue
                c = _close_mult(R, m | 1 << a)
                if c & forbidden:
                    continue
                if c not in seen:
                    seen[c] = gens + (a,)
                    nxt.append(c)
        frontier = nxt
    out = [MultSet(R, m, g or (R.one,)) for m, g in seen.items()]
    out.sort(key=lambda s: (len(s), s.members))
    return out


# ---------------------------------------------------------------- ideals


def _principal(R: FiniteRing, a: int) -> int:
    return mask_of(R.mul[a])


def _sum_masks(R: FiniteRing, m1: int, m2: int) -> int:
    out = 0
    b_elems = elements_of(m2)
    for a in elements_of(m1):
        row = R.add[a]
        for b in b_elems:
            out |= 1 << row[b]
    return out


def _generated(R: FiniteRing, gens: Iterable[int]) -> int:
    mask = 1
    for g in gens:
        p = _principal(R, g)
        if p & ~mask:
            mask = _sum_masks(R, mask, p)
    return mask


def generated_ideal(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    gens = tuple(gens)
    return Ideal(R, _generated(R, gens), gens)


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, 1, (0,))


def unit_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, R.full_mask, (R.one,))


def ideal_from_mask(R: FiniteRing, mask: int) -> Ideal:
    """Wrap an ideal bitmask, choosing a short generator list greedily."""
    gens: list[int] = []
    cur = 1
    for a in elements_of(mask):
        if not cur >> a & 1:
            gens.append(a)
            cur = _generated(R, gens)
            if cur == mask:
                break
    return Ideal(R, mask, tuple(gens) or (0,))


def is_ideal_mask(R: FiniteRing, mask: int) -> bool:
    if not mask & 1:
        return False
    elems = elements_of(mask)
    for a in elems:
        if not mask >> R.neg[a] & 1:
            return False
        row = R.add[a]
        if any(not mask >> row[b] & 1 for b in elems):
            return False
        if any(not mask >> R.mul[r][a] & 1 for r in R.elements):
            return False
    return True


@lru_cache(maxsize=512)
def _ideal_masks(R: FiniteRing) -> tuple[int, ...]:
    principals = sorted({_principal(R, a) for a in R.elements})
    found = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for m in frontier:
            for p in principals:
                if p & ~m == 0:
                    continue
                s = _sum_masks(R, m, p)
                if s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    return tuple(sorted(found, key=lambda m: (m.bit_count(), m)))


def enumerate_ideals(R: FiniteRing) -> list[Ideal]:
    """All ideals of ``R``: the closure of ``{(0)}`` under sums with principal ideals."""
    return [ideal_from_mask(R, m) for m in _ideal_masks(R)]


def ideal_masks(R: FiniteRing) -> tuple[int, ...]:
    return _ideal_masks(R)


def _same_ring(*objs: _Subset) -> FiniteRing:
    R = objs[0].ring
    for o in objs[1:]:
        R.require_same(o.ring)
    return R


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    return Ideal(R, _sum_masks(R, I.members, J.members), I.generators + J.generators)


def _product_mask(R: FiniteRing, m1: int, m2: int) -> int:
    prods = set()
    b_elems = elements_of(m2)
    for a in elements_of(m1):
        row = R.mul[a]
        prods.update(row[b] for b in b_elems)
    return _generated(R, sorted(prods))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    return ideal_from_mask(R, _product_mask(R, I.members, J.members))


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    return ideal_from_mask(R, I.members & J.members)


def ideal_power(I: Ideal, k: int) -> Ideal:
    if k < 1:
        raise ValueError("ideal powers start at k = 1")
    R = I.ring
    m = I.members
    for _ in range(k - 1):
        m = _product_mask(R, m, I.members)
    return ideal_from_mask(R, m)


def colon_mask(R: FiniteRing, mask: int, s: int) -> int:
    row = R.mul[s]
    return mask_of(a for a in R.elements if mask >> row[a] & 1)


def colon(I: Ideal, s: int) -> Ideal:
    """``(I : s) = {a : s·a ∈ I}``."""
    return ideal_from_mask(I.ring, colon_mask(I.ring, I.members, s))


def radical_mask(R: FiniteRing, mask: int) -> int:
    return mask_of(x for x in R.elements if any(mask >> p & 1 for p in R.power_values(x)))


def radical(I: Ideal) -> Ideal:
    return ideal_from_mask(I.ring, radical_mask(I.ring, I.members))


def s_radical_mask(R: FiniteRing, mask: int, S_mask: int) -> int:
    S = elements_of(S_mask)
    out = 0
    for a in R.elements:
        hit = False
        for p in set(R.power_values(a)):
            row = R.mul[p]
            if any(mask >> row[s] & 1 for s in S):
                hit = True
                break
        if hit:
            out |= 1 << a
    return out


def s_radical(I: Ideal, S: MultSet) -> Ideal:
    """``{a : s·aⁿ ∈ I for some s ∈ S, n ≥ 1}``, checked to be an ideal."""
    R = _same_ring(I, S)
    m = s_radical_mask(R, I.members, S.members)
    if not is_ideal_mask(R, m):
        raise IdealAxiomError(f"S-radical of {I.elements} in {R.recipe} failed the ideal axioms")
    return ideal_from_mask(R, m)


def maximal_ideals(R: FiniteRing) -> list[Ideal]:
    masks = [m for m in _ideal_masks(R) if m != R.full_mask]
    return [
        ideal_from_mask(R, m)
        for m in masks
        if not any(o != m and o & m == m for o in masks)
    ]


def jacobson_radical(R: FiniteRing) -> Ideal:
    m = R.full_mask
    for M in maximal_ideals(R):
        m &= M.members
    return ideal_from_mask(R, m)


def s_jacobson_radical(R: FiniteRing, S: MultSet) -> Ideal:
    """Intersection of the S-maximal ideals (all disjoint from ``S``); ``R`` if there are none.

    This is a modelling choice for J_S(R), used by the Jacobson corollary check.
    """
    from .classify import is_s_maximal

    m = R.full_mask
    for mask in _ideal_masks(R):
        if mask & S.members:
            continue
        if is_s_maximal(R, ideal_from_mask(R, mask), S).verdict:
            m &= mask
    return ideal_from_mask(R, m)


def subset_masks(mask: int, candidates: Sequence[int]) -> list[int]:
    return [c for c in candidates if c & ~mask == 0]
