from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL_RINGS, Z, ideal, ms, ring
from sringlab.errors import (
    ImproperQuotientError,
    InvalidOrderError,
    ModuleActionError,
    NotAnIsomorphismError,
    RingMismatchError,
    SizeCapError,
)
from sringlab.ideals import MultSet, ideal_masks
from sringlab.ring import (
    RingIso,
    apply_iso,
    are_isomorphic,
    canonical_map,
    direct_product,
    find_isomorphism,
    idealization,
    idealization_pairs,
    is_boolean,
    make_zn,
    mask_of,
    product_pairs,
    quotient_ring,
    relabel,
    ring_axiom_violations,
    units,
    validate_ring_axioms,
    verify_isomorphism,
    with_mul_entry,
    zero_divisors,
)


class TestZn:
    def test_z6(self):
        R = Z(6)
        assert R.order == 6 and R.one == 1 and R.zero == 0
        assert R.mul[2][3] == 0

    def test_z2_is_a_field(self):
        R = Z(2)
        assert units(R) == [1]

    def test_z12_products(self):
        R = Z(12)
        assert R.mul[3][4] == 0 and R.mul[5][5] == 1

    @pytest.mark.parametrize("n", [0, 1, -3])
    def test_rejects_small_n(self, n):
        with pytest.raises(InvalidOrderError):
            make_zn(n)

    def test_cap(self):
        with pytest.raises(SizeCapError):
            make_zn(40)
        assert make_zn(40, max_order=40).order == 40

    def test_labels(self):
        assert Z(12).name(8) == "8 mod 12"


class TestProduct:
    def test_crt(self):
        assert are_isomorphic(direct_product(Z(2), Z(3)), Z(6))

    def test_boolean_klein(self):
        V = direct_product(Z(2), Z(2))
        assert V.order == 4 and is_boolean(V)

    def test_z3_squared_has_zero_divisors(self):
        R = direct_product(Z(3), Z(3))
        p = product_pairs(Z(3), Z(3))
        assert R.mul[p[(1, 0)]][p[(0, 1)]] == p[(0, 0)]
        assert zero_divisors(R)

    def test_identity_first(self):
        R = direct_product(Z(2), Z(3))
        p = product_pairs(Z(2), Z(3))
        assert p[(0, 0)] == 0 and p[(1, 1)] == 1

    def test_cap(self):
        with pytest.raises(SizeCapError):
            direct_product(Z(8), Z(5))

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(2, 9) for n in range(2, 9) if m * n <= 16])
    def test_iso_to_cyclic_iff_coprime(self, m, n):
        assert are_isomorphic(direct_product(Z(m), Z(n)), Z(m * n)) == (gcd(m, n) == 1)


class TestQuotient:
    @pytest.mark.parametrize("n,g,expect", [(12, 6, 6), (12, 4, 4), (6, 0, 6)])
    def test_cyclic_quotients(self, n, g, expect):
        Q, f = quotient_ring(Z(n), ideal(Z(n), g))
        assert are_isomorphic(Q, Z(expect))

    def test_whole_ring_rejected(self):
        with pytest.raises(ImproperQuotientError):
            quotient_ring(Z(6), ideal(Z(6), 1))

    def test_kernel_and_counting(self, small_ring):
        R = small_ring
        for m in ideal_masks(R):
            if m == R.full_mask:
                continue
            I = ideal(R, *[a for a in R.elements if m >> a & 1])
            Q, f = quotient_ring(R, I)
            assert mask_of(a for a in R.elements if f[a] == 0) == I.members
            assert Q.order * len(I) == R.order
            validate_ring_axioms(Q)
            # the surjection is a homomorphism
            for a in R.elements:
                for b in R.elements:
                    assert f[R.add[a][b]] == Q.add[f[a]][f[b]]
                    assert f[R.mul[a][b]] == Q.mul[f[a]][f[b]]

    def test_recipe_rebuilds(self):
        Q, _ = quotient_ring(Z(12), ideal(Z(12), 4))
        assert Q.recipe == "Z12/(4)"
        assert ring(Q.recipe) == Q


class TestIdealization:
    def test_square_zero(self):
        R = idealization(Z(2), 2)
        p = idealization_pairs(Z(2), 2)
        x = p[(0, 1)]
        assert R.mul[x][x] == 0 and x != 0

    def test_order_and_identity(self):
        R = idealization(Z(2), 2)
        p = idealization_pairs(Z(2), 2)
        assert R.order == 4 and p[(1, 0)] == R.one == 1

    def test_z3(self):
        R = idealization(Z(3), 3)
        p = idealization_pairs(Z(3), 3)
        assert R.mul[p[(0, 1)]][p[(0, 2)]] == 0

    def test_self_matches_z2(self):
        assert idealization(Z(2), "self") == idealization(Z(2), 2)

    @pytest.mark.parametrize("module", [3, 1, "other", True])
    def test_bad_module(self, module):
        with pytest.raises(ModuleActionError):
            idealization(Z(4), module)

    def test_non_cyclic_base_needs_self(self):
        with pytest.raises(ModuleActionError):
            idealization(direct_product(Z(2), Z(2)), 2)


class TestElementFacts:
    def test_z6(self):
        assert units(Z(6)) == [1, 5]
        assert zero_divisors(Z(6)) == [2, 3, 4]

    def test_boolean(self):
        assert is_boolean(ring("Z2xZ2")) and not is_boolean(Z(4))

    def test_field_has_no_zero_divisors(self):
        assert zero_divisors(Z(5)) == []


class TestAxioms:
    @pytest.mark.parametrize("spec", SMALL_RINGS)
    def test_constructed_rings_pass(self, spec):
        assert ring_axiom_violations(ring(spec)) == []

    def test_corrupted_entry_caught(self):
        R = with_mul_entry(Z(12), 5, 7, 10)
        assert ring_axiom_violations(R)


class TestIsomorphisms:
    def test_crt_image_of_mult_set(self):
        A, B = Z(6), ring("Z2xZ3")
        f = RingIso(A, B, canonical_map(A, B))
        verify_isomorphism(f)
        p = product_pairs(Z(2), Z(3))
        T = apply_iso(f, ms(A, 2))
        assert set(T) == {p[(1, 1)], p[(0, 2)], p[(0, 1)]}

    def test_crt_image_of_ideal(self):
        A, B = Z(6), ring("Z2xZ3")
        f = RingIso(A, B, canonical_map(A, B))
        p = product_pairs(Z(2), Z(3))
        assert set(apply_iso(f, ideal(A, 3))) == {p[(0, 0)], p[(1, 0)]}

    def test_identity(self):
        R = Z(12)
        f = RingIso(R, R, tuple(R.elements))
        S = ms(R, 2)
        assert apply_iso(f, S) == S

    def test_non_iso_rejected(self):
        R = Z(6)
        bad = RingIso(R, R, (0, 1, 2, 4, 3, 5))
        with pytest.raises(NotAnIsomorphismError):
            apply_iso(bad, ms(R, 2))

    def test_mismatched_ring(self):
        f = RingIso(Z(6), Z(6), tuple(range(6)))
        with pytest.raises(RingMismatchError):
            apply_iso(f, ms(Z(4), 1))

    def test_non_isomorphic(self):
        assert find_isomorphism(Z(4), ring("Z2xZ2")) is None
        assert find_isomorphism(Z(4), ring("Z2(+)self")) is None

    @given(st.sampled_from(SMALL_RINGS), st.randoms(use_true_random=False))
    def test_relabel_is_found(self, spec, rnd):
        R = ring(spec)
        rest = list(range(2, R.order))
        rnd.shuffle(rest)
        copy, f = relabel(R, [0, 1] + rest)
        verify_isomorphism(f)
        g = find_isomorphism(R, copy)
        assert g is not None
        verify_isomorphism(g)

    def test_relabel_requires_fixed_identities(self):
        with pytest.raises(ValueError):
            relabel(Z(4), [0, 2, 1, 3])

    def test_transport_keeps_type(self):
        R = Z(12)
        copy, f = relabel(R, [0, 1] + list(range(11, 1, -1)))
        assert isinstance(apply_iso(f, ms(R, 2)), MultSet)
