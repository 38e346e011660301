import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starbench import (
    AnnihilatorSet,
    annihilator_family,
    left_annihilator,
    right_annihilator,
)
from starbench.annihilators import (
    _intersection_closure,
    additive_closure,
    principal_left_ideal,
    principal_right_ideal,
    principal_two_sided_ideal,
    rann_single,
)
from starbench.bitsets import indices_of, mask_from_bool
from starbench.errors import FamilyCapExceeded

import numpy as np
import oracles
from conftest import cached_ring


class TestPointAnnihilators:
    def test_z6_spec_values(self, z6):
        assert right_annihilator(z6, [2]).indices() == [0, 3]
        assert right_annihilator(z6, [3]).indices() == [0, 2, 4]
        assert right_annihilator(z6, [1]).indices() == [0]

    def test_zero_annihilates_everything(self, z6, m2z3):
        for r in (z6, m2z3):
            assert right_annihilator(r, [0]).count() == r.order
            assert left_annihilator(r, [0]).count() == r.order

    def test_zero_multiplication_ring_whole(self, sub93):
        assert left_annihilator(sub93, range(3)).indices() == [0, 1, 2]
        assert right_annihilator(sub93, range(3)).indices() == [0, 1, 2]

    def test_provenance(self, z6):
        a = right_annihilator(z6, [2, 2, 3])
        assert a.side == "right"
        assert a.generators == (2, 3)
        assert a.universe == 6

    def test_left_right_asymmetry(self, m2z3):
        e12 = m2z3.encode(((0, 1), (0, 0)))
        r_set = set(right_annihilator(m2z3, [e12]).indices())
        l_set = set(left_annihilator(m2z3, [e12]).indices())
        assert r_set != l_set
        assert r_set == oracles.o_rann(m2z3, [e12])
        assert l_set == oracles.o_lann(m2z3, [e12])


class TestSubsetReduction:
    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=4))
    def test_r_of_set_is_intersection_of_singletons(self, xs):
        z6 = cached_ring("Z(6)")
        combined = set(right_annihilator(z6, xs).indices())
        expected = set(range(6))
        for x in xs:
            expected &= set(right_annihilator(z6, [x]).indices())
        assert combined == expected

    @pytest.mark.parametrize("text", ["Z(6)", "M(2,Z(2))", "prod(Z(2),Z(3))", "sub(Z(9); 3)"])
    def test_matches_oracle_on_pairs(self, text):
        r = cached_ring(text)
        for x in range(0, r.order, max(1, r.order // 5)):
            for y in range(0, r.order, max(1, r.order // 3)):
                assert set(right_annihilator(r, [x, y]).indices()) == oracles.o_rann(r, [x, y])
                assert set(left_annihilator(r, [x, y]).indices()) == oracles.o_lann(r, [x, y])

    def test_annihilator_of_closure_equals_annihilator_of_generators(self, z6):
        gens = [2, 3]
        closure = indices_of(additive_closure(z6, sum(1 << g for g in gens)))
        assert set(right_annihilator(z6, closure).indices()) == set(
            right_annihilator(z6, gens).indices()
        )


class TestPrincipalIdeals:
    @pytest.mark.parametrize("text", ["Z(6)", "M(2,Z(2))", "sub(Z(9); 3)", "prod(Z(2),Z(3))"])
    def test_right_ideal_matches_oracle(self, text):
        r = cached_ring(text)
        for a in range(r.order):
            assert set(indices_of(principal_right_ideal(r, a))) == oracles.o_principal_right_ideal(r, a)
            assert set(indices_of(principal_left_ideal(r, a))) == oracles.o_principal_left_ideal(r, a)

    @pytest.mark.parametrize("text", ["Z(6)", "M(2,Z(2))", "sub(Z(9); 3)", "prod(Z(2),Z(3))"])
    def test_two_sided_ideal_matches_oracle(self, text):
        r = cached_ring(text)
        for a in range(r.order):
            assert set(indices_of(principal_two_sided_ideal(r, a))) == (
                oracles.o_principal_two_sided_ideal(r, a)
            )

    def test_ideal_contains_generator_even_without_unity(self, sub93):
        # aR misses a itself here (all products vanish) but (a) must keep it
        assert indices_of(principal_right_ideal(sub93, 1)) == [0]
        assert 1 in indices_of(principal_two_sided_ideal(sub93, 1))


class TestFamily:
    def test_z6_subset_family_exact(self, z6):
        fam = annihilator_family(z6, "subset")
        assert sorted(tuple(s.indices()) for s in fam) == [
            (0,),
            (0, 1, 2, 3, 4, 5),
            (0, 2, 4),
            (0, 3),
        ]

    def test_zero_multiplication_family_is_whole_ring_only(self, sub93):
        fam = annihilator_family(sub93, "subset")
        assert [tuple(s.indices()) for s in fam] == [(0, 1, 2)]

    def test_matrix_family_members_are_projection_ideals(self, m2z3):
        projections = oracles.o_projections(m2z3)
        ideals = {
            frozenset(oracles.o_right_ideal_of_projection(m2z3, e)) for e in projections
        }
        for s in annihilator_family(m2z3, "subset"):
            assert frozenset(s.indices()) in ideals

    def test_modes_coincide_on_commutative_unital(self, z6):
        subset = {s.mask for s in annihilator_family(z6, "subset")}
        rideal = {s.mask for s in annihilator_family(z6, "right-ideal")}
        two = {s.mask for s in annihilator_family(z6, "two-sided-ideal")}
        assert subset == rideal == two

    def test_family_is_deterministic_and_sorted(self, m2z3):
        a = annihilator_family(m2z3, "subset")
        b = annihilator_family(m2z3, "subset")
        assert [s.mask for s in a] == [s.mask for s in b]
        assert [s.mask for s in a] == sorted(s.mask for s in a)

    def test_precomputed_rann_gives_identical_family(self, z6):
        rann = [rann_single(z6, s) for s in range(6)]
        assert [s.mask for s in annihilator_family(z6, "subset")] == [
            s.mask for s in annihilator_family(z6, "subset", rann=rann)
        ]

    def test_unknown_mode_rejected(self, z6):
        with pytest.raises(ValueError):
            annihilator_family(z6, "bogus")

    def test_cap_trips_when_closure_grows(self):
        # seed sets chosen so meets create new masks past the cap
        seeds = [
            AnnihilatorSet(0b0111, 4, "right", (1,)),
            AnnihilatorSet(0b1110, 4, "right", (2,)),
            AnnihilatorSet(0b1011, 4, "right", (3,)),
        ]
        with pytest.raises(FamilyCapExceeded):
            _intersection_closure(seeds, cap=3)
        closed = _intersection_closure(seeds, cap=10)
        assert {s.mask for s in closed} >= {0b0111, 0b1110, 0b1011, 0b0110, 0b0011}

    def test_intersect_requires_matching_kind(self, z6):
        a = right_annihilator(z6, [2])
        b = left_annihilator(z6, [2])
        with pytest.raises(ValueError):
            a.intersect(b)

    def test_intersect_merges_generators(self, z6):
        a = right_annihilator(z6, [2])
        b = right_annihilator(z6, [3])
        c = a.intersect(b)
        assert c.generators == (2, 3)
        assert c.indices() == [0]


class TestAdditiveClosure:
    @pytest.mark.parametrize("text", ["Z(6)", "Z(8)", "prod(Z(2),Z(3))", "M(2,Z(2))"])
    def test_matches_oracle(self, text):
        r = cached_ring(text)
        rng = np.random.default_rng(7)
        for _ in range(5):
            gens = [int(g) for g in rng.integers(0, r.order, size=2)]
            mask = additive_closure(r, sum(1 << g for g in gens))
            assert set(indices_of(mask)) == oracles.o_additive_closure(r, gens)

    def test_closure_always_contains_zero(self, z6):
        assert 0 in indices_of(additive_closure(z6, 0))

    def test_single_generator_gives_cyclic_subgroup(self, z6):
        assert indices_of(additive_closure(z6, 1 << 2)) == [0, 2, 4]
