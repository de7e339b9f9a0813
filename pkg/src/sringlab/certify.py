"""Naive re-checks of witnesses.

Nothing here shares code with the decision procedures beyond the ring
tables: ideals are regenerated by brute-force closure and every condition is
re-evaluated with plain loops.  Used by reports and tests to make sure an
emitted witness really certifies its verdict.
"""

from __future__ import annotations

from .classify import Witness
from .ideals import Ideal, MultSet
from .ring import FiniteRing


def _closure_ideal(R: FiniteRing, seed: set[int]) -> set[int]:
    out = {0} | set(seed)
    changed = True
    while changed:
        changed = False
        for a in list(out):
            for b in list(out):
                c = R.add[a][b]
                if c not in out:
                    out.add(c)
                    changed = True
            for r in R.elements:
                c = R.mul[r][a]
                if c not in out:
                    out.add(c)
                    changed = True
    return out


def _is_ideal(R: FiniteRing, X: set[int]) -> bool:
    return 0 in X and _closure_ideal(R, X) == X


def _nonzero_after(R: FiniteRing, s: int, a: int, P: set[int]) -> bool:
    return R.mul[s][a] not in P


def prime_condition_holds(R: FiniteRing, P: set[int], s: int) -> bool:
    return all(
        R.mul[s][a] in P or R.mul[s][b] in P
        for a in R.elements
        for b in R.elements
        if R.mul[a][b] in P
    )


def certify_prime_like(R: FiniteRing, P: set[int], S: MultSet, w: Witness) -> bool:
    """S-prime of ``P`` (S-integral domain when ``P = {0}``)."""
    if w.kind == "uniform-s":
        s = w.data["s"]
        return s in S and prime_condition_holds(R, P, s)
    if w.kind == "pair-counterexample":
        a, b = w.data["a"], w.data["b"]
        if R.mul[a][b] not in P:
            return False
        return all(_nonzero_after(R, s, a, P) and _nonzero_after(R, s, b, P) for s in S)
    return False


def certify_cancellation(R: FiniteRing, S: MultSet, w: Witness) -> bool:
    def s_nonzero(a):
        return all(R.mul[s][a] != 0 for s in S)

    def rescued(b, c):
        return any(R.mul[s][b] == R.mul[s][c] for s in S)

    if w.kind == "triple-counterexample":
        a, b, c = w.data["a"], w.data["b"], w.data["c"]
        return s_nonzero(a) and R.mul[a][b] == R.mul[a][c] and not rescued(b, c)
    if w.kind == "per-instance-s":
        return all(
            rescued(b, c)
            for a in R.elements
            if s_nonzero(a)
            for b in R.elements
            for c in R.elements
            if R.mul[a][b] == R.mul[a][c]
        )
    return False


def certify_s_maximal(R: FiniteRing, M: set[int], S: MultSet, w: Witness) -> bool:
    if w.kind == "uniform-s":
        s = w.data["s"]
        if s not in S:
            return False
        # every ideal above M that misses S is a union of ideals M + Rx that miss S
        for x in R.elements:
            J = _closure_ideal(R, M | {x})
            if not J & set(S) and R.mul[s][x] not in M:
                return False
        return True
    if w.kind == "ideal-counterexample":
        J = set(w.data["ideal"])
        if not (_is_ideal(R, J) and M <= J and not J & set(S)):
            return False
        return all(any(R.mul[s][x] not in M for x in J) for s in S)
    return False


def _power_hits(R: FiniteRing, s: int, b: int, Q: set[int]) -> bool:
    p = b
    for _ in range(R.order):
        if R.mul[s][p] in Q:
            return True
        p = R.mul[p][b]
    return False


def certify_s_primary(R: FiniteRing, Q: set[int], S: MultSet, w: Witness) -> bool:
    pairs = [(a, b) for a in R.elements for b in R.elements if R.mul[a][b] in Q]
    if w.kind == "uniform-s":
        s = w.data["s"]
        return s in S and all(R.mul[s][a] in Q or _power_hits(R, s, b, Q) for a, b in pairs)
    if w.kind == "pair-counterexample":
        a, b = w.data["a"], w.data["b"]
        return (a, b) in pairs and all(R.mul[s][a] not in Q and not _power_hits(R, s, b, Q) for s in S)
    return False


def naive_radical(R: FiniteRing, I: set[int]) -> set[int]:
    return {x for x in R.elements if _power_hits(R, R.one, x, I)}


def naive_product(R: FiniteRing, I: set[int], J: set[int]) -> set[int]:
    return _closure_ideal(R, {R.mul[a][b] for a in I for b in J})


def certify_pmsb(R: FiniteRing, I: set[int], S: MultSet, w: Witness) -> bool:
    s, m = w.data["s"], w.data["m"]
    rad = naive_radical(R, I)
    power = rad
    for _ in range(m - 1):
        power = naive_product(R, power, rad)
    return s in S and all(R.mul[s][x] in I for x in power)


def stable_power(R: FiniteRing, I: set[int]) -> set[int]:
    cur = set(I)
    while True:
        nxt = naive_product(R, cur, I)
        if nxt == cur:
            return cur
        cur = nxt


def certify_annihilator(R: FiniteRing, I: set[int], S: MultSet, w: Witness) -> bool:
    t, a = w.data["t"], w.data["a"]
    B = stable_power(R, I)
    if set(w.data["B"]) != B or t not in S or a not in I:
        return False
    x = R.add[t][a]
    return all(R.mul[x][b] == 0 for b in B)


def certify_decomposition(R: FiniteRing, I: set[int], S: MultSet, comps: list[Ideal]) -> bool:
    """Exact, S-primary components, and irredundant."""
    masks = [set(c) for c in comps]
    full = set(R.elements)

    def meet(xs):
        out = set(full)
        for x in xs:
            out &= x
        return out

    if meet(masks) != I:
        return False
    for Q in masks:
        if Q & set(S) or not any(
            all(R.mul[s][a] in Q or _power_hits(R, s, b, Q) for a in R.elements for b in R.elements if R.mul[a][b] in Q)
            for s in S
        ):
            return False
    if len(masks) > 1:
        for i in range(len(masks)):
            if meet(masks[:i] + masks[i + 1 :]) == I:
                return False
    return True


def certify_element(R: FiniteRing, prop: str, a: int, S: MultSet, w: Witness) -> bool:
    if prop == "s-idempotent":
        if w.verdict:
            return w.data["s"] in S and R.mul[w.data["s"]][a] == R.mul[a][a]
        return all(R.mul[s][a] != R.mul[a][a] for s in S)
    if prop == "s-zero":
        if w.verdict:
            return w.data["s"] in S and R.mul[w.data["s"]][a] == 0
        return all(R.mul[s][a] != 0 for s in S)
    if prop == "s-nilpotent":
        if w.verdict:
            s, n = w.data["s"], w.data["n"]
            return s in S and R.mul[s][R.power(a, n)] == 0
        return not any(_power_hits(R, s, a, {0}) for s in S)
    raise ValueError(f"unknown element property {prop!r}")
