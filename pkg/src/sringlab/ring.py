"""Finite commutative rings with identity, stored as explicit operation tables.

Elements are the integers ``0 .. order-1``.  Every constructor places the
additive identity at index 0 and the multiplicative identity at index 1; the
remaining elements follow the construction's natural order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import (
    ImproperQuotientError,
    InvalidOrderError,
    ModuleActionError,
    NotAnIsomorphismError,
    RingAxiomError,
    RingMismatchError,
    SizeCapError,
)

DEFAULT_MAX_ORDER = 32

Table = tuple[tuple[int, ...], ...]


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite commutative ring given by its addition and multiplication tables.

    ``recipe`` is the ring-spec expression that rebuilds the ring and
    ``labels`` holds a human-readable name for each element.  Equality is
    equality of tables; the recipe is descriptive only.
    """

    add: Table
    mul: Table
    recipe: str
    labels: tuple[str, ...]
    degenerate: bool = False

    def __post_init__(self):
        n = len(self.add)
        if len(self.mul) != n or len(self.labels) != n:
            raise InvalidOrderError("table and label sizes disagree")
        if n < 2 and not self.degenerate:
            raise InvalidOrderError("a ring needs 1 != 0, so order >= 2")

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 if self.order > 1 else 0

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.add)

    @cached_property
    def sub(self) -> Table:
        neg = self.neg
        return tuple(tuple(row[neg[b]] for b in self.elements) for row in self.add)

    @cached_property
    def characteristic(self) -> int:
        """Additive order of the identity."""
        return self.additive_order(self.one)

    @cached_property
    def _hash(self) -> int:
        return hash((self.add, self.mul))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return self._hash == other._hash and self.add == other.add and self.mul == other.mul

    def __repr__(self):
        return f"FiniteRing({self.recipe!r}, order={self.order})"

    def name(self, a: int) -> str:
        return self.labels[a]

    def additive_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.add[x][a]
            k += 1
        return k

    def multiple(self, k: int, a: int) -> int:
        """``k·a`` for a non-negative integer ``k``."""
        x = 0
        for _ in range(k % self.additive_order(a) if a else 0):
            x = self.add[x][a]
        return x

    def power(self, a: int, k: int) -> int:
        x = self.one
        for _ in range(k):
            x = self.mul[x][a]
        return x

    def power_values(self, a: int) -> list[int]:
        """``[a, a², …, a^order]``; every positive power of ``a`` occurs in this list."""
        out, x = [], a
        for _ in range(self.order):
            out.append(x)
            x = self.mul[x][a]
        return out

    def scale_mask(self, a: int, mask: int) -> int:
        """Bitmask of ``a·X`` for the element set ``X`` encoded by ``mask``."""
        row = self.mul[a]
        out = 0
        for x in elements_of(mask):
            out |= 1 << row[x]
        return out

    def require_same(self, other: "FiniteRing") -> None:
        if self is not other and self != other:
            raise RingMismatchError(f"{self.recipe} and {other.recipe} are different rings")


def _assemble(
    size: int,
    add: Callable[[int, int], int],
    mul: Callable[[int, int], int],
    labels: Sequence[str],
    zero: int,
    one: int,
    recipe: str,
) -> tuple[FiniteRing, list[int]]:
    """Build a ring from operations on a natural index set ``0..size-1``.

    Returns the ring and ``pos`` mapping natural index to final index.  The
    final order is zero, one, then the rest in natural order.
    """
    order = [zero] + ([one] if one != zero else []) + [i for i in range(size) if i not in (zero, one)]
    pos = [0] * size
    for new, old in enumerate(order):
        pos[old] = new
    add_t = tuple(tuple(pos[add(a, b)] for b in order) for a in order)
    mul_t = tuple(tuple(pos[mul(a, b)] for b in order) for a in order)
    ring = FiniteRing(add_t, mul_t, recipe, tuple(labels[i] for i in order), degenerate=size == 1)
    return ring, pos


def _check_cap(order: int, max_order: int) -> None:
    if order > max_order:
        raise SizeCapError(f"ring order {order} exceeds the cap {max_order}")


def make_zn(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """The integers modulo ``n``; element ``k`` is the residue of ``k``."""
    if not isinstance(n, int) or n < 2:
        raise InvalidOrderError(f"Z_n needs n >= 2, got {n!r}")
    _check_cap(n, max_order)
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return FiniteRing(add, mul, f"Z{n}", tuple(f"{k} mod {n}" for k in range(n)))


def direct_product(A: FiniteRing, B: FiniteRing, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Componentwise product ``A × B``.

    Pairs ``(a, b)`` are first numbered ``a·|B| + b``; then ``(0,0)`` and
    ``(1,1)`` are moved to the front as usual.
    """
    _check_cap(A.order * B.order, max_order)
    nb = B.order

    def split(i):
        return divmod(i, nb)

    def add(i, j):
        (a1, b1), (a2, b2) = split(i), split(j)
        return A.add[a1][a2] * nb + B.add[b1][b2]

    def mul(i, j):
        (a1, b1), (a2, b2) = split(i), split(j)
        return A.mul[a1][a2] * nb + B.mul[b1][b2]

    size = A.order * nb
    labels = [f"({A.labels[a]}, {B.labels[b]})" for a, b in map(split, range(size))]
    ring, _ = _assemble(size, add, mul, labels, 0, A.one * nb + B.one, f"{A.recipe}x{B.recipe}")
    return ring


def product_pairs(A: FiniteRing, B: FiniteRing) -> dict[tuple[int, int], int]:
    """Index of each pair ``(a, b)`` inside ``direct_product(A, B)``."""
    nb = B.order
    one = A.one * nb + B.one
    order = [0, one] + [i for i in range(A.order * nb) if i not in (0, one)]
    return {divmod(old, nb): new for new, old in enumerate(order)}


def quotient_ring(R: FiniteRing, ideal) -> tuple[FiniteRing, tuple[int, ...]]:
    """``R/I`` together with the canonical surjection ``R → R/I``.

    Cosets are ordered by their smallest member, which puts ``I`` first and
    ``1 + I`` second.
    """
    R.require_same(ideal.ring)
    members = elements_of(ideal.members)
    if len(members) == R.order:
        raise ImproperQuotientError("cannot form R/R: the ideal is the whole ring")
    coset_of = [-1] * R.order
    reps = []
    for x in R.elements:
        if coset_of[x] >= 0:
            continue
        k = len(reps)
        reps.append(x)
        for m in members:
            coset_of[R.add[x][m]] = k
    size = len(reps)
    add = tuple(tuple(coset_of[R.add[a][b]] for b in reps) for a in reps)
    mul = tuple(tuple(coset_of[R.mul[a][b]] for b in reps) for a in reps)
    gens = ",".join(str(g) for g in ideal.generators) or "0"
    recipe = f"{R.recipe}/({gens})"
    labels = tuple(f"[{R.labels[r]}]" for r in reps)
    return FiniteRing(add, mul, recipe, labels, degenerate=size == 1), tuple(coset_of)


def idealization(R: FiniteRing, module: str | int = "self", max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """The idealization ``R(+)M``: pairs ``(r, m)`` with ``(r,m)(r',m') = (rr', rm' + r'm)``.

    ``module`` is ``"self"`` for ``M = R`` or an integer ``m`` for ``M = Z_m``;
    the latter needs ``R`` generated additively by 1 with ``m`` dividing its
    order, so that ``r = k·1`` acts as multiplication by ``k`` mod ``m``.
    """
    if module == "self":
        madd, n_m = R.add, R.order
        act = R.mul
        mlabels = R.labels
        suffix = "self"
    elif isinstance(module, int) and not isinstance(module, bool):
        m = module
        if m < 2:
            raise ModuleActionError(f"module Z_{m} is not a valid module spec")
        if R.characteristic != R.order:
            raise ModuleActionError(f"{R.recipe} is not cyclic, so Z_{m} carries no module action")
        if R.order % m:
            raise ModuleActionError(f"Z_{m} is not a module over {R.recipe}: {m} does not divide {R.order}")
        # r = k·1 acts on Z_m as multiplication by k
        coeff = [0] * R.order
        x = 0
        for k in range(R.order):
            coeff[x] = k
            x = R.add[x][R.one]
        madd = tuple(tuple((a + b) % m for b in range(m)) for a in range(m))
        act = tuple(tuple((coeff[r] * v) % m for v in range(m)) for r in R.elements)
        n_m = m
        mlabels = tuple(f"{k} mod {m}" for k in range(m))
        suffix = f"Z{m}"
    else:
        raise ModuleActionError(f"unsupported module spec {module!r}")
    _check_cap(R.order * n_m, max_order)

    def split(i):
        return divmod(i, n_m)

    def add(i, j):
        (r1, m1), (r2, m2) = split(i), split(j)
        return R.add[r1][r2] * n_m + madd[m1][m2]

    def mul(i, j):
        (r1, m1), (r2, m2) = split(i), split(j)
        return R.mul[r1][r2] * n_m + madd[act[r1][m2]][act[r2][m1]]

    size = R.order * n_m
    labels = [f"({R.labels[r]}, {mlabels[v]})" for r, v in map(split, range(size))]
    ring, _ = _assemble(size, add, mul, labels, 0, R.one * n_m, f"{R.recipe}(+){suffix}")
    return ring


def idealization_pairs(R: FiniteRing, module_order: int) -> dict[tuple[int, int], int]:
    """Index of each pair ``(r, m)`` inside an idealization with ``|M| = module_order``."""
    one = R.one * module_order
    order = [0, one] + [i for i in range(R.order * module_order) if i not in (0, one)]
    return {divmod(old, module_order): new for new, old in enumerate(order)}


def relabel(R: FiniteRing, perm: Sequence[int]) -> tuple[FiniteRing, "RingIso"]:
    """An isomorphic copy of ``R`` in which element ``a`` becomes ``perm[a]``.

    ``perm`` must fix 0 and 1.  Returns the copy and the isomorphism onto it.
    """
    n = R.order
    if sorted(perm) != list(range(n)) or perm[0] != 0 or perm[R.one] != R.one:
        raise ValueError("perm must be a permutation fixing 0 and 1")
    inv = [0] * n
    for a, b in enumerate(perm):
        inv[b] = a
    add = tuple(tuple(perm[R.add[inv[x]][inv[y]]] for y in range(n)) for x in range(n))
    mul = tuple(tuple(perm[R.mul[inv[x]][inv[y]]] for y in range(n)) for x in range(n))
    copy = FiniteRing(add, mul, R.recipe, tuple(R.labels[inv[x]] for x in range(n)))
    return copy, RingIso(R, copy, tuple(perm))


def with_mul_entry(R: FiniteRing, a: int, b: int, value: int) -> FiniteRing:
    """A copy of ``R`` whose product table has ``a·b = value`` (one entry only).

    Used for fault injection: the result is normally not a ring.
    """
    rows = [list(r) for r in R.mul]
    rows[a][b] = value
    mul = tuple(tuple(r) for r in rows)
    return FiniteRing(R.add, mul, R.recipe, R.labels, R.degenerate)


# ---------------------------------------------------------------- element facts


def units(R: FiniteRing) -> list[int]:
    return [a for a in R.elements if R.one in R.mul[a]]


def zero_divisors(R: FiniteRing) -> list[int]:
    return [a for a in R.elements if a != 0 and any(R.mul[a][b] == 0 for b in R.elements if b != 0)]


def is_boolean(R: FiniteRing) -> bool:
    return all(R.mul[x][x] == x for x in R.elements)


def nilpotents(R: FiniteRing) -> list[int]:
    return [a for a in R.elements if 0 in R.power_values(a)]


def idempotents(R: FiniteRing) -> list[int]:
    return [a for a in R.elements if R.mul[a][a] == a]


# ---------------------------------------------------------------- validation


def ring_axiom_violations(R: FiniteRing, limit: int = 10) -> list[str]:
    """Exhaustively check the axioms of a commutative ring with identity.

    Returns up to ``limit`` human-readable violations; an empty list means
    the tables define a commutative ring with ``1 ≠ 0``.
    """
    n = R.order
    add, mul = R.add, R.mul
    out: list[str] = []

    def bad(msg):
        out.append(msg)
        return len(out) >= limit

    rng = range(n)
    for table in (add, mul):
        for row in table:
            if any(not (0 <= v < n) for v in row):
                return ["table entry out of range"]
    if n < 2:
        out.append("order < 2, so 1 = 0")
    for a in rng:
        if add[0][a] != a and bad(f"0 + {a} != {a}"):
            return out
        if mul[R.one][a] != a and bad(f"1 * {a} != {a}"):
            return out
        if 0 not in add[a] and bad(f"{a} has no additive inverse"):
            return out
    for name, t in (("+", add), ("*", mul)):
        for a in rng:
            for b in range(a + 1, n):
                if t[a][b] != t[b][a] and bad(f"{a}{name}{b} != {b}{name}{a}"):
                    return out
        for a in rng:
            ta = t[a]
            for b in rng:
                tb = t[b]
                left = t[ta[b]]
                right = tuple(ta[x] for x in tb)
                if left != right:
                    c = next(c for c in rng if left[c] != right[c])
                    if bad(f"({a}{name}{b}){name}{c} != {a}{name}({b}{name}{c})"):
                        return out
    for a in rng:
        ma = mul[a]
        for b in rng:
            ab = add[b]
            for c in rng:
                if ma[ab[c]] != add[ma[b]][ma[c]]:
                    if bad(f"{a}*({b}+{c}) != {a}*{b} + {a}*{c}"):
                        return out
                    break
    return out


def validate_ring_axioms(R: FiniteRing) -> None:
    problems = ring_axiom_violations(R)
    if problems:
        raise RingAxiomError(f"{R.recipe}: " + "; ".join(problems))


# ---------------------------------------------------------------- isomorphisms


@dataclass(frozen=True)
class RingIso:
    source: FiniteRing
    target: FiniteRing
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    def inverse(self) -> "RingIso":
        inv = [0] * len(self.map)
        for a, b in enumerate(self.map):
            inv[b] = a
        return RingIso(self.target, self.source, tuple(inv))


def homomorphism_violation(source: FiniteRing, target: FiniteRing, f: Sequence[int]) -> str | None:
    """First reason ``f`` fails to be a unital ring homomorphism, else ``None``."""
    if len(f) != source.order or any(not (0 <= v < target.order) for v in f):
        return "map does not send every source element into the target"
    if f[source.one] != target.one:
        return "map(1) != 1"
    for a in source.elements:
        fa = f[a]
        for b in source.elements:
            if f[source.add[a][b]] != target.add[fa][f[b]]:
                return f"map({a}+{b}) != map({a})+map({b})"
            if f[source.mul[a][b]] != target.mul[fa][f[b]]:
                return f"map({a}*{b}) != map({a})*map({b})"
    return None


def verify_isomorphism(f: RingIso) -> None:
    if f.source.order != f.target.order or sorted(f.map) != list(f.target.elements):
        raise NotAnIsomorphismError("map is not a bijection")
    why = homomorphism_violation(f.source, f.target, f.map)
    if why:
        raise NotAnIsomorphismError(why)


def apply_iso(f: RingIso, obj):
    """Transport a multiplicative set or an ideal of ``f.source`` along ``f``."""
    verify_isomorphism(f)
    f.source.require_same(obj.ring)
    members = mask_of(f.map[e] for e in elements_of(obj.members))
    return type(obj)(f.target, members, tuple(f.map[g] for g in obj.generators))


def canonical_map(source: FiniteRing, target: FiniteRing) -> tuple[int, ...]:
    """The unique unital homomorphism out of a ring whose additive group is generated by 1.

    Sends ``k·1`` to ``k·1``; raises if ``source`` is not cyclic or the map
    is not a homomorphism.
    """
    if source.characteristic != source.order:
        raise NotAnIsomorphismError(f"{source.recipe} is not generated additively by 1")
    f = [0] * source.order
    x, y = 0, 0
    for _ in range(source.order):
        f[x] = y
        x, y = source.add[x][source.one], target.add[y][target.one]
    why = homomorphism_violation(source, target, f)
    if why:
        raise NotAnIsomorphismError(why)
    return tuple(f)


def _invariants(R: FiniteRing) -> tuple:
    return (
        R.order,
        R.characteristic,
        tuple(sorted(R.additive_order(a) for a in R.elements)),
        len(units(R)),
        len(idempotents(R)),
        len(nilpotents(R)),
        tuple(sorted(sum(1 for b in R.elements if R.mul[a][b] == 0) for a in R.elements)),
    )


def find_isomorphism(A: FiniteRing, B: FiniteRing) -> RingIso | None:
    """Backtracking isomorphism search seeded on the images of additive generators.

    The identity is always the first generator and is pinned to the target's
    identity; further generators are chosen greedily among elements of the
    largest additive order outside the current span.
    """
    if A.order != B.order or _invariants(A) != _invariants(B):
        return None
    gens = [A.one]
    span = _span(A, [A.one])
    while len(span) < A.order:
        g = max((a for a in A.elements if a not in span), key=lambda a: (A.additive_order(a), -a))
        gens.append(g)
        span = _span(A, gens)
    b_by_order: dict[int, list[int]] = {}
    for b in B.elements:
        b_by_order.setdefault(B.additive_order(b), []).append(b)

    def extend(f: dict[int, int], g: int, image: int) -> dict[int, int] | None:
        # f is defined on a subgroup H; extend to H + <g> with f(g) = image
        new = dict(f)
        frontier = list(f.items())
        mult_g, mult_img = g, image
        # enumerate h + k·g for k = 1, 2, ...
        for _ in range(A.additive_order(g)):
            for h, fh in frontier:
                x = A.add[h][mult_g]
                y = B.add[fh][mult_img]
                if x in new:
                    if new[x] != y:
                        return None
                else:
                    new[x] = y
            mult_g, mult_img = A.add[mult_g][g], B.add[mult_img][image]
        if len(set(new.values())) != len(new):
            return None
        keys = list(new)
        for x in keys:
            fx = new[x]
            for y in keys:
                xy = A.mul[x][y]
                if xy in new and new[xy] != B.mul[fx][new[y]]:
                    return None
        return new

    def search(f: dict[int, int], i: int) -> dict[int, int] | None:
        if i == len(gens):
            return f if len(f) == A.order else None
        g = gens[i]
        if g in f:
            return search(f, i + 1)
        used = set(f.values())
        for image in b_by_order.get(A.additive_order(g), []):
            if image in used:
                continue
            nf = extend(f, g, image)
            if nf is not None:
                found = search(nf, i + 1)
                if found is not None:
                    return found
        return None

    start = extend({0: 0}, A.one, B.one)
    if start is None:
        return None
    found = search(start, 1)
    if found is None:
        return None
    iso = RingIso(A, B, tuple(found[a] for a in A.elements))
    verify_isomorphism(iso)
    return iso


def are_isomorphic(A: FiniteRing, B: FiniteRing) -> bool:
    return find_isomorphism(A, B) is not None


def _span(R: FiniteRing, gens: Sequence[int]) -> set[int]:
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = R.add[x][g]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen
