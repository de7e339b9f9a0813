import pytest

from conftest import SMALL_RINGS, Z, ideal, ms, ring
from sringlab import certify
from sringlab.classify import (
    DEGENERATE_ZERO_IN_S,
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
    is_s_non_zero,
    is_s_prime,
    is_s_proper,
    is_s_reduced,
    is_s_zero,
    s_finite_witness,
)
from sringlab.errors import DisjointnessError
from sringlab.ideals import all_mult_sets, enumerate_ideals, zero_ideal


class TestIntegralDomain:
    def test_z6(self):
        w = is_s_integral_domain(Z(6), ms(Z(6), 2))
        assert (w.verdict, w.kind, w.data) == (True, "uniform-s", {"s": 2})

    def test_z30(self):
        w = is_s_integral_domain(Z(30), ms(Z(30), 2))
        assert (w.verdict, w.kind, w.data) == (False, "pair-counterexample", {"a": 5, "b": 6})

    def test_field(self):
        assert is_s_integral_domain(Z(5), ms(Z(5), 1)).data == {"s": 1}

    def test_zero_in_s_flagged(self):
        w = is_s_integral_domain(Z(6), ms(Z(6), 0))
        assert w.verdict and DEGENERATE_ZERO_IN_S in w.flags

    def test_quantifier_order(self):
        # Z2xZ2 with S = {1}: each zero product is killed by 1 only if a factor is 0
        w = is_s_integral_domain(ring("Z2xZ2"), ms(ring("Z2xZ2"), 1))
        assert not w.verdict


class TestCancellation:
    def test_z12_fails(self):
        R, S = Z(12), ms(Z(12), 3)
        w = has_s_cancellation(R, S)
        assert (w.verdict, w.kind) == (False, "triple-counterexample")
        # first triple in (largest entry, then lexicographic) order
        assert w.data == {"a": 2, "b": 0, "c": 6}
        assert certify.certify_cancellation(R, S, w)

    def test_z12_reference_triple_is_a_counterexample(self):
        R, S = Z(12), ms(Z(12), 3)
        ref = Witness(False, "triple-counterexample", {"a": 2, "b": 4, "c": 10})
        assert certify.certify_cancellation(R, S, ref)

    def test_z15_holds(self):
        R, S = Z(15), ms(Z(15), 6)
        w = has_s_cancellation(R, S)
        assert w.verdict and w.kind == "per-instance-s"
        assert w.data["uniform_s"] == 6
        assert R.mul[3][7] == R.mul[3][2] == 6 and R.mul[6][7] == R.mul[6][2] == 12

    def test_field(self):
        assert has_s_cancellation(Z(7), ms(Z(7), 1)).verdict


class TestPrime:
    def test_z12_six(self):
        R, S = Z(12), ms(Z(12), 2)
        w = is_s_prime(R, ideal(R, 6), S)
        # smallest working s is 2; the multiplier 4 also certifies
        assert w.verdict and w.data == {"s": 2}
        assert certify.certify_prime_like(R, {0, 6}, S, Witness(True, "uniform-s", {"s": 4}))

    def test_z12_three(self):
        R = Z(12)
        assert is_s_prime(R, ideal(R, 3), ms(R, 2)).data == {"s": 1}
        assert is_prime(R, ideal(R, 3))

    def test_z12_four(self):
        R = Z(12)
        w = is_s_prime(R, ideal(R, 4), ms(R, 3))
        assert (w.verdict, w.data) == (False, {"a": 2, "b": 2})

    def test_disjointness(self):
        with pytest.raises(DisjointnessError):
            is_s_prime(Z(6), ideal(Z(6), 2), ms(Z(6), 2))


class TestMaximal:
    def test_z6_zero(self):
        w = is_s_maximal(Z(6), zero_ideal(Z(6)), ms(Z(6), 2))
        assert w.verdict and w.data == {"s": 2}

    def test_z12_four(self):
        R = Z(12)
        w = is_s_maximal(R, ideal(R, 4), ms(R, 3))
        assert not w.verdict and w.data["ideal"] == ideal(R, 2)

    def test_maximal_ideals_are_s_maximal(self, small_ring):
        R = small_ring
        for M in enumerate_ideals(R):
            if not is_maximal(R, M):
                continue
            for S in all_mult_sets(R):
                if not M.meets(S):
                    assert is_s_maximal(R, M, S).verdict


class TestField:
    def test_examples(self):
        assert is_s_field(Z(6), ms(Z(6), 2)).verdict
        assert is_s_field(Z(5), ms(Z(5), 1)).verdict
        w = is_s_field(Z(12), ms(Z(12), 3))
        assert not w.verdict and w.data["ideal"] == ideal(Z(12), 6)

    def test_zero_rejected(self):
        with pytest.raises(DisjointnessError):
            is_s_field(Z(6), ms(Z(6), 0))

    def test_classical(self):
        assert not is_integral_domain(Z(6))
        assert is_field(Z(5))
        assert is_maximal(Z(12), ideal(Z(12), 2))


class TestProper:
    def test_examples(self):
        assert is_s_proper(Z(12), ideal(Z(12), 6), ms(Z(12), 3)).verdict
        w = is_s_proper(Z(6), ideal(Z(6), 2), ms(Z(6), 2))
        assert w.data["clause"] == "meets S"
        w = is_s_proper(Z(6), ideal(Z(6), 3), ms(Z(6), 2))
        assert w.data == {"clause": "annihilated", "s": 2}


class TestElements:
    def test_examples(self):
        R, S = Z(12), ms(Z(12), 2)
        w = is_s_idempotent(R, 8, S)
        assert w.verdict and w.data == {"s": 2} and R.mul[8][8] != 8
        assert is_s_zero(R, 3, S).data == {"s": 4}
        assert is_s_nilpotent(R, 6, ms(R, 1)).data == {"s": 1, "n": 2}
        assert is_s_non_zero(Z(6), 1, ms(Z(6), 2)).verdict

    def test_element_witnesses_certify(self, small_ring):
        R = small_ring
        for S in all_mult_sets(R):
            for a in R.elements:
                for prop, fn in (("s-idempotent", is_s_idempotent), ("s-zero", is_s_zero), ("s-nilpotent", is_s_nilpotent)):
                    assert certify.certify_element(R, prop, a, S, fn(R, a, S))


class TestReduced:
    def test_examples(self):
        assert is_s_reduced(Z(6), ms(Z(6), 1)).verdict
        w = is_s_reduced(Z(4), ms(Z(4), 1))
        assert not w.verdict and w.data == {"r": 2}
        assert is_s_reduced(Z(4), ms(Z(4), 2)).verdict


def test_s_finite_is_trivial():
    R = Z(12)
    w = s_finite_witness(R, ideal(R, 2), ms(R, 3))
    assert w.verdict and w.data["s"] == 1 and w.data["J"] == ideal(R, 2)


def test_witness_kind_checked():
    with pytest.raises(ValueError):
        Witness(True, "maybe")


@pytest.mark.parametrize("spec", SMALL_RINGS)
def test_every_witness_certifies(spec):
    R = ring(spec)
    for S in all_mult_sets(R):
        assert certify.certify_prime_like(R, {0}, S, is_s_integral_domain(R, S))
        assert certify.certify_cancellation(R, S, has_s_cancellation(R, S))
        assert certify.certify_s_maximal(R, {0}, S, is_s_field(R, S))
        for I in enumerate_ideals(R):
            if I.meets(S):
                continue
            assert certify.certify_prime_like(R, set(I), S, is_s_prime(R, I, S))
            assert certify.certify_s_maximal(R, set(I), S, is_s_maximal(R, I, S))


def test_certifier_rejects_forged_witnesses():
    R, S = Z(6), ms(Z(6), 2)
    assert not certify.certify_prime_like(R, {0}, S, Witness(True, "uniform-s", {"s": 1}))
    assert not certify.certify_prime_like(R, {0}, S, Witness(False, "pair-counterexample", {"a": 2, "b": 3}))
    assert not certify.certify_s_maximal(R, {0}, S, Witness(True, "uniform-s", {"s": 1}))
    assert not certify.certify_cancellation(Z(15), ms(Z(15), 6),
                                            Witness(False, "triple-counterexample", {"a": 3, "b": 7, "c": 2}))
