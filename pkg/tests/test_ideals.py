import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL_RINGS, Z, ideal, ms, ring
from sringlab.errors import RingMismatchError
from sringlab.ideals import (
    all_mult_sets,
    colon,
    enumerate_ideals,
    ideal_intersect,
    ideal_masks,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_ideal_mask,
    is_mult_closed,
    is_proper_mult_set,
    jacobson_radical,
    mult_closure,
    radical,
    s_jacobson_radical,
    s_radical,
    unit_ideal,
    zero_ideal,
)


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _brute_ideals(R):
    """Every subset that passes the ideal axioms; only for tiny rings."""
    return sorted(m for m in range(1 << R.order) if is_ideal_mask(R, m))


class TestMultSets:
    def test_powers_of_two_mod_12(self):
        assert ms(Z(12), 2).elements == [1, 2, 4, 8]

    def test_trivial(self):
        assert ms(Z(6), 1).elements == [1]

    def test_powers_of_three_mod_15(self):
        assert set(ms(Z(15), 3)) == {1, 3, 9, 12, 6}

    def test_properness(self):
        assert not is_proper_mult_set(ms(Z(6), 2))
        assert is_proper_mult_set(ms(Z(9), 1))
        assert is_proper_mult_set(ms(Z(6), 5))

    @given(st.sampled_from(SMALL_RINGS), st.lists(st.integers(0, 15), max_size=3))
    def test_closure_idempotent(self, spec, gens):
        R = ring(spec)
        gens = [g % R.order for g in gens]
        S = mult_closure(R, gens)
        assert is_mult_closed(R, S.members)
        assert mult_closure(R, S.elements) == S
        assert 1 in S and all(g in S for g in gens)

    def test_all_mult_sets_are_closed_and_distinct(self, small_ring):
        sets = all_mult_sets(small_ring)
        masks = [S.members for S in sets]
        assert len(set(masks)) == len(masks)
        assert all(is_mult_closed(small_ring, m) and not m & 1 for m in masks)

    def test_all_mult_sets_brute_force(self):
        R = Z(12)
        brute = [m for m in range(1 << 12) if m & 2 and not m & 1 and is_mult_closed(R, m)]
        assert sorted(S.members for S in all_mult_sets(R)) == sorted(brute)


class TestIdeals:
    def test_generated(self):
        assert ideal(Z(12), 4).elements == [0, 4, 8]

    @pytest.mark.parametrize("n", range(2, 33))
    def test_cyclic_count(self, n):
        assert len(enumerate_ideals(Z(n))) == len(_divisors(n))

    def test_klein_four(self):
        assert len(enumerate_ideals(ring("Z2xZ2"))) == 4

    @pytest.mark.parametrize("spec", ["Z2xZ2", "Z2(+)self", "Z3(+)Z3", "Z2xZ4", "Z2xZ2xZ2", "Z4(+)Z2"])
    def test_enumeration_matches_subset_scan(self, spec):
        R = ring(spec)
        assert sorted(ideal_masks(R)) == _brute_ideals(R)

    def test_order_is_size_then_mask(self, small_ring):
        masks = ideal_masks(small_ring)
        assert list(masks) == sorted(masks, key=lambda m: (m.bit_count(), m))
        assert masks[0] == 1 and masks[-1] == small_ring.full_mask

    def test_arithmetic_examples(self):
        R = Z(12)
        assert ideal_power(ideal(R, 2), 2).elements == [0, 4, 8]
        assert colon(ideal(R, 4), 3).elements == [0, 4, 8]
        assert ideal_intersect(ideal(R, 4), ideal(R, 3)).elements == [0]
        assert ideal_sum(ideal(R, 4), ideal(R, 6)).elements == [0, 2, 4, 6, 8, 10]

    def test_mixed_rings_rejected(self):
        with pytest.raises(RingMismatchError):
            ideal_sum(ideal(Z(4), 2), ideal(Z(6), 2))

    def test_power_needs_positive_exponent(self):
        with pytest.raises(ValueError):
            ideal_power(ideal(Z(4), 2), 0)

    def test_product_inside_intersection(self, small_ring):
        R = small_ring
        ideals = enumerate_ideals(R)
        for I in ideals:
            for J in ideals:
                assert ideal_product(I, J) <= ideal_intersect(I, J)

    def test_colon_extremes(self, small_ring):
        for I in enumerate_ideals(small_ring):
            assert colon(I, 1) == I
            assert colon(I, 0) == unit_ideal(small_ring)


class TestRadicals:
    def test_examples(self):
        R = Z(12)
        assert radical(ideal(R, 4)) == ideal(R, 2)
        assert radical(zero_ideal(Z(6))) == zero_ideal(Z(6))
        assert radical(ideal(R, 6)) == ideal(R, 6)

    def test_s_radical_examples(self):
        R = Z(12)
        assert s_radical(ideal(R, 6), ms(R, 2)).elements == [0, 3, 6, 9]
        assert s_radical(ideal(R, 4), ms(R, 3)) == ideal(R, 2)

    def test_chain_of_containments(self, small_ring):
        R = small_ring
        sets = all_mult_sets(R)
        for I in enumerate_ideals(R):
            rad = radical(I)
            assert I <= rad
            assert s_radical(I, ms(R, 1)) == rad
            for S in sets:
                assert rad <= s_radical(I, S)


class TestJacobson:
    def test_examples(self):
        assert jacobson_radical(Z(12)) == ideal(Z(12), 6)
        assert jacobson_radical(Z(6)) == zero_ideal(Z(6))
        assert s_jacobson_radical(Z(6), ms(Z(6), 2)) == zero_ideal(Z(6))

    def test_units_only_gives_ordinary_radical(self, small_ring):
        # with S inside the units, S-maximal is maximal
        R = small_ring
        assert s_jacobson_radical(R, ms(R, 1)) == jacobson_radical(R)
