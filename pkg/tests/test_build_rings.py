import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starbench import (
    DEFAULT_LIMITS,
    StarRing,
    build_ring,
    parse_ring_expr,
    validate_star_ring,
)
from starbench.errors import AxiomViolation, LiteralError, OrderCapExceeded

from conftest import cached_ring


def ring(text):
    return cached_ring(text)


class TestCyclic:
    def test_z3(self):
        r = ring("Z(3)")
        assert r.order == 3
        assert r.unity == 1
        assert all(r.star(x) == x for x in range(3))

    def test_z6_tables(self, z6):
        assert z6.order == 6
        assert z6.characteristic == 6
        assert z6.add(4, 5) == 3
        assert z6.mul(4, 5) == 2
        assert z6.neg(2) == 4
        assert z6.sub(1, 5) == 2

    def test_z1_is_the_zero_ring(self):
        r = ring("Z(1)")
        assert r.order == 1
        assert r.unity == 0
        assert r.characteristic == 1

    def test_additive_orders(self, z6):
        assert [z6.additive_order(i) for i in range(6)] == [1, 6, 3, 2, 3, 6]


class TestMatrix:
    def test_m2z3_shape(self, m2z3):
        assert m2z3.order == 81
        assert m2z3.characteristic == 3
        assert m2z3.decode(m2z3.unity) == ((1, 0), (0, 1))

    def test_star_is_transpose(self, m2z3):
        e12 = m2z3.encode(((0, 1), (0, 0)))
        e21 = m2z3.encode(((0, 0), (1, 0)))
        assert m2z3.star(e12) == e21
        for x in range(81):
            ((a, b), (c, d)) = m2z3.decode(x)
            assert m2z3.decode(m2z3.star(x)) == ((a, c), (b, d))

    @pytest.mark.parametrize(
        "text,expected",
        [("M(1,Z(5))", 5), ("M(2,Z(2))", 16), ("M(3,Z(2))", 512), ("M(2,Z(3))", 81)],
    )
    def test_order_is_modulus_to_n_squared(self, text, expected):
        assert ring(text).order == expected

    def test_matrix_multiplication_matches_hand_arithmetic(self, m2z3):
        a = m2z3.encode(((1, 2), (0, 1)))
        b = m2z3.encode(((2, 1), (1, 0)))
        # ((1*2+2*1, 1*1+2*0), (0*2+1*1, 0*1+1*0)) mod 3
        assert m2z3.decode(m2z3.mul(a, b)) == ((1, 1), (1, 0))


class TestProduct:
    def test_shape(self, prod23):
        assert prod23.order == 6
        assert prod23.characteristic == 6
        assert prod23.decode(prod23.unity) == (1, 1)

    def test_index_layout(self, prod23):
        # left_index * |right| + right_index
        assert prod23.encode((1, 2)) == 5
        assert prod23.decode(3) == (1, 0)

    def test_componentwise_operations(self, prod23):
        x = prod23.encode((1, 2))
        y = prod23.encode((1, 1))
        assert prod23.decode(prod23.add(x, y)) == (0, 0)
        assert prod23.decode(prod23.mul(x, y)) == (1, 2)
        assert prod23.decode(prod23.star(x)) == (1, 2)


class TestSubringClosure:
    def test_zero_multiplication_ring(self, sub93):
        assert sub93.order == 3
        assert [sub93.decode(i) for i in range(3)] == [0, 3, 6]
        assert sub93.unity is None
        assert all(
            sub93.mul(x, y) == 0 for x in range(3) for y in range(3)
        )
        assert sub93.characteristic == 3

    def test_closure_can_acquire_its_own_unity(self):
        r = ring("sub(Z(6); 2)")
        assert [r.decode(i) for i in range(r.order)] == [0, 2, 4]
        # 4*4 = 16 = 4 and 4*2 = 8 = 2 mod 6, so 4 acts as identity
        assert r.decode(r.unity) == 4

    def test_two_element_closure(self):
        r = ring("sub(Z(4); 2)")
        assert [r.decode(i) for i in range(r.order)] == [0, 2]
        assert r.unity is None
        assert r.mul(1, 1) == 0

    def test_closure_is_a_fixpoint(self):
        inner = ring("sub(Z(12); 2, 3)")
        again = build_ring(
            parse_ring_expr("sub(Z(12); " + ", ".join(str(inner.decode(i)) for i in range(inner.order)) + ")")
        )
        assert again.order == inner.order
        assert [again.decode(i) for i in range(again.order)] == [
            inner.decode(i) for i in range(inner.order)
        ]

    def test_zero_is_index_zero(self):
        r = ring("sub(Z(9); 3)")
        assert r.decode(0) == 0
        assert r.add(0, 1) == 1

    def test_encode_rejects_outsiders(self, sub93):
        with pytest.raises(LiteralError):
            sub93.encode(4)


class TestValidation:
    @pytest.mark.parametrize(
        "text",
        ["Z(1)", "Z(6)", "Z(8)", "M(2,Z(2))", "M(2,Z(3))", "prod(Z(2),Z(3))", "sub(Z(9); 3)", "sub(Z(6); 2)"],
    )
    def test_built_rings_pass_the_full_audit(self, text):
        rep = validate_star_ring(ring(text))
        assert rep["ok"] is True
        assert "star-anti-multiplicative" in rep["checks"]
        assert rep["order"] == ring(text).order

    def _tables_of(self, r):
        add = np.array(r.add_table(), copy=True)
        mul = np.array(r.mul_table(), copy=True)
        neg = np.array([r.neg(i) for i in range(r.order)])
        star = np.array([r.star(i) for i in range(r.order)])
        return add, mul, neg, star

    def test_from_tables_reproduces_the_ring(self, z6):
        raw = StarRing.from_tables(*self._tables_of(z6), label="copy of Z(6)")
        assert raw.order == 6
        assert raw.unity == 1
        assert validate_star_ring(raw)["ok"] is True

    def test_corrupted_multiplication_names_associativity(self, z6):
        add, mul, neg, star = self._tables_of(z6)
        mul[2, 3], mul[3, 2] = 1, 1
        bad = StarRing.from_tables(add, mul, neg, star)
        with pytest.raises(AxiomViolation) as exc:
            validate_star_ring(bad)
        payload = exc.value.payload()
        assert payload["axiom"] == "mul-associative"
        assert len(payload["witness"]) == 3

    def test_corrupted_addition_names_commutativity(self, z6):
        add, mul, neg, star = self._tables_of(z6)
        add[1, 2] = 0
        bad = StarRing.from_tables(add, mul, neg, star)
        with pytest.raises(AxiomViolation) as exc:
            validate_star_ring(bad)
        assert exc.value.payload()["axiom"] in ("add-commutative", "zero-identity")

    def test_broken_involution_caught_at_construction(self, z6):
        add, mul, neg, star = self._tables_of(z6)
        star[1] = 2  # star(star(1)) = star(2) = 2 != 1
        with pytest.raises(AxiomViolation) as exc:
            StarRing.from_tables(add, mul, neg, star)
        assert exc.value.payload()["axiom"] == "star-involutive"

    def test_nonadditive_star_names_the_axiom(self, prod23):
        add, mul, neg, star = self._tables_of(ring("Z(5)"))
        star[1], star[4] = 4, 1  # an additive bijection that breaks (xy)* = y*x*? no:
        # on a commutative ring x -> -x is additive and anti-multiplicative
        # only if (xy)* = x*y* = (-x)(-y) = xy, but star(xy) = -xy, so it fails
        star[2], star[3] = 3, 2
        bad = StarRing.from_tables(add, mul, neg, star)
        with pytest.raises(AxiomViolation) as exc:
            validate_star_ring(bad)
        assert exc.value.payload()["axiom"] == "star-anti-multiplicative"


class TestCapsAndDeterminism:
    def test_order_cap_fails_fast(self):
        t0 = __import__("time").perf_counter()
        with pytest.raises(OrderCapExceeded) as exc:
            build_ring(parse_ring_expr("M(2,Z(101))"))
        assert __import__("time").perf_counter() - t0 < 1.0
        payload = exc.value.payload()
        assert payload["order"] == 101**4
        assert payload["cap"] == DEFAULT_LIMITS.element_cap

    def test_cap_is_adjustable(self):
        r = build_ring(
            parse_ring_expr("M(2,Z(7))"), DEFAULT_LIMITS.with_element_cap(20000)
        )
        assert r.order == 2401

    def test_same_descriptor_same_tables(self):
        a = build_ring(parse_ring_expr("M(2,Z(2))"))
        b = build_ring(parse_ring_expr("M(2,Z(2))"))
        assert np.array_equal(a.add_table(), b.add_table())
        assert np.array_equal(a.mul_table(), b.mul_table())
        assert np.array_equal(a.star_vector(), b.star_vector())

    def test_handed_out_tables_are_read_only(self, z6):
        with pytest.raises(ValueError):
            z6.add_table()[0, 0] = 1
        with pytest.raises(ValueError):
            z6.star_vector()[0] = 1


class TestCodec:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=80))
    def test_matrix_codec_round_trip(self, i):
        r = cached_ring("M(2,Z(3))")
        assert r.encode(r.decode(i)) == i

    @pytest.mark.parametrize(
        "text", ["Z(6)", "prod(Z(2),Z(3))", "sub(Z(9); 3)", "M(2,Z(2))"]
    )
    def test_codec_is_a_bijection(self, text):
        r = ring(text)
        literals = [r.decode(i) for i in range(r.order)]
        assert len(set(map(str, literals))) == r.order
        assert [r.encode(l) for l in literals] == list(range(r.order))
