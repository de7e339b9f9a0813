import pytest
from hypothesis import given
from hypothesis import strategies as st

from sringlab.errors import DisjointnessError, RingSpecSyntaxError, SizeCapError
from sringlab.ring import are_isomorphic, direct_product, idealization, make_zn
from sringlab.spec import (
    Idealization,
    Product,
    Quotient,
    Zn,
    build_ring,
    parse_ideal,
    parse_mult_set,
    parse_ring_spec,
    render,
)

# atoms that may carry postfix operators, and whole products built from them
_zn = st.builds(Zn, st.integers(2, 99))
_postfixed = st.recursive(
    _zn,
    lambda inner: st.one_of(
        st.builds(Quotient, inner, st.lists(st.integers(0, 40), min_size=1, max_size=3).map(tuple)),
        st.builds(Idealization, inner, st.one_of(st.just("self"), st.integers(2, 30))),
    ),
    max_leaves=4,
)
_spelled = st.lists(_postfixed, min_size=1, max_size=4).map(
    lambda xs: xs[0] if len(xs) == 1 else _left_fold(xs)
)


def _left_fold(xs):
    node = xs[0]
    for x in xs[1:]:
        node = Product(node, x)
    return node


class TestParse:
    def test_examples(self):
        assert parse_ring_spec("Z12") == Zn(12)
        assert parse_ring_spec("Z2xZ3") == Product(Zn(2), Zn(3))
        assert parse_ring_spec("Z2xZ2xZ2") == Product(Product(Zn(2), Zn(2)), Zn(2))
        assert parse_ring_spec("Z12/(4)") == Quotient(Zn(12), (4,))
        assert parse_ring_spec("Z4(+)self") == Idealization(Zn(4), "self")
        assert parse_ring_spec("Z3(+)Z3") == Idealization(Zn(3), 3)

    def test_postfix_binds_tighter(self):
        assert parse_ring_spec("Z2xZ4/(2)") == Product(Zn(2), Quotient(Zn(4), (2,)))

    def test_whitespace(self):
        assert parse_ring_spec(" Z2 x Z3 ") == Product(Zn(2), Zn(3))

    @pytest.mark.parametrize("text,pos", [("", 0), ("Z", 1), ("Z12x", 4), ("Z12/(", 5), ("Q5", 0),
                                          ("Z12/(4", 6), ("Z2(+)Z", 6), ("Z2 Z3", 3)])  # fmt: skip
    def test_errors_carry_position(self, text, pos):
        with pytest.raises(RingSpecSyntaxError) as info:
            parse_ring_spec(text)
        assert info.value.position == pos

    @given(_spelled)
    def test_render_round_trip(self, node):
        assert parse_ring_spec(render(node)) == node

    def test_unspellable_trees(self):
        with pytest.raises(ValueError):
            render(Product(Zn(2), Product(Zn(2), Zn(2))))
        with pytest.raises(ValueError):
            render(Quotient(Product(Zn(2), Zn(2)), (1,)))


class TestEvaluate:
    def test_matches_constructors(self):
        assert are_isomorphic(build_ring("Z2xZ3"), direct_product(make_zn(2), make_zn(3)))
        assert build_ring("Z2(+)self") == idealization(make_zn(2), "self")
        assert are_isomorphic(build_ring("Z12/(4)"), make_zn(4))
        assert are_isomorphic(build_ring("Z12/(4,6)"), make_zn(2))

    def test_cap(self):
        with pytest.raises(SizeCapError):
            build_ring("Z6xZ6")
        assert build_ring("Z6xZ6", max_order=36).order == 36

    def test_generator_out_of_range(self):
        with pytest.raises(ValueError):
            build_ring("Z6/(9)")


class TestSets:
    def test_mult_set(self):
        R = make_zn(12)
        assert parse_mult_set(R, "2").elements == [1, 2, 4, 8]
        assert parse_mult_set(R, "{1,3,9}").elements == [1, 3, 9]

    def test_strict_rejects_zero(self):
        R = make_zn(6)
        assert 0 in parse_mult_set(R, "0")
        with pytest.raises(DisjointnessError):
            parse_mult_set(R, "2,3", strict=True)

    @pytest.mark.parametrize("text", ["", "a", "1,,2", "-1"])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            parse_mult_set(make_zn(6), text)

    def test_ideal(self):
        assert parse_ideal(make_zn(12), "4,6").elements == [0, 2, 4, 6, 8, 10]
