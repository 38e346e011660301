import pytest

from starbench import (
    IMPLICATIONS,
    PROPERTY_CLASSIFIERS,
    classify_all,
    classify_matrix_ring,
    find_rp_not_central_cover,
    implication_suite,
    parse_ring_expr,
)
from starbench.classifiers import implication_reports_for

import oracles
from conftest import cached_ring


def verdict(text, prop):
    return PROPERTY_CLASSIFIERS[prop](cached_ring(text)).verdict


class TestInvolutionAndStructure:
    def test_proper(self):
        assert verdict("M(2,Z(3))", "proper") is True
        assert verdict("Z(2)", "proper") is True
        rep = PROPERTY_CLASSIFIERS["proper"](cached_ring("sub(Z(9); 3)"))
        assert rep.verdict is False
        assert rep.witness == {"x": 3}

    def test_semi_proper(self):
        assert verdict("M(2,Z(3))", "semi-proper") is True
        assert verdict("Z(6)", "semi-proper") is True
        assert verdict("sub(Z(9); 3)", "semi-proper") is False

    def test_reduced(self):
        assert verdict("Z(6)", "reduced") is True
        rep = PROPERTY_CLASSIFIERS["reduced"](cached_ring("M(2,Z(3))"))
        assert rep.verdict is False
        x = cached_ring("M(2,Z(3))").encode(rep.witness["x"])
        assert cached_ring("M(2,Z(3))").mul(x, x) == 0 and x != 0
        assert verdict("sub(Z(9); 3)", "reduced") is False

    def test_abelian(self):
        assert verdict("Z(6)", "abelian") is True
        assert verdict("M(2,Z(3))", "abelian") is False
        assert verdict("sub(Z(9); 3)", "abelian") is True

    def test_unity(self):
        assert verdict("Z(6)", "unity") is True
        assert verdict("M(2,Z(3))", "unity") is True
        assert verdict("sub(Z(9); 3)", "unity") is False

    @pytest.mark.parametrize(
        "text", ["Z(6)", "Z(8)", "M(2,Z(2))", "M(2,Z(3))", "sub(Z(9); 3)", "prod(Z(2),Z(3))"]
    )
    def test_structure_verdicts_match_oracles(self, text):
        r = cached_ring(text)
        assert verdict(text, "proper") is (oracles.o_proper(r) is None)
        assert verdict(text, "semi-proper") is (oracles.o_semi_proper(r) is None)
        assert verdict(text, "reduced") is (oracles.o_reduced(r) is None)
        assert verdict(text, "abelian") is (oracles.o_abelian(r) is None)


class TestRickartFamily:
    def test_rickart_star(self):
        assert verdict("M(2,Z(3))", "rickart-star") is True
        assert verdict("sub(Z(9); 3)", "rickart-star") is False
        assert verdict("Z(4)", "rickart-star") is False

    def test_weakly_rickart_star(self):
        assert verdict("Z(6)", "weakly-rickart-star") is True
        assert verdict("sub(Z(9); 3)", "weakly-rickart-star") is False
        assert verdict("M(2,Z(5))", "weakly-rickart-star") is False

    def test_weakly_rickart_false_witness_has_no_rp(self):
        rep = PROPERTY_CLASSIFIERS["weakly-rickart-star"](cached_ring("M(2,Z(5))"))
        r = cached_ring("M(2,Z(5))")
        assert oracles.o_rp(r, r.encode(rep.witness["x"])) is None

    def test_baer_star(self):
        assert verdict("M(2,Z(3))", "baer-star") is True
        assert verdict("Z(6)", "baer-star") is True
        assert verdict("M(2,Z(2))", "baer-star") is False

    def test_quasi_baer_star(self):
        assert verdict("M(2,Z(3))", "quasi-baer-star") is True
        assert verdict("Z(4)", "quasi-baer-star") is False
        assert verdict("sub(Z(9); 3)", "quasi-baer-star") is False

    def test_pq_baer_star(self):
        assert verdict("M(2,Z(3))", "pq-baer-star") is True
        assert verdict("Z(6)", "pq-baer-star") is True
        assert verdict("sub(Z(9); 3)", "pq-baer-star") is False

    def test_weakly_pq_baer_star(self):
        assert verdict("M(2,Z(3))", "weakly-pq-baer-star") is True
        assert verdict("Z(6)", "weakly-pq-baer-star") is True
        assert verdict("sub(Z(9); 3)", "weakly-pq-baer-star") is False

    @pytest.mark.parametrize(
        "text",
        ["Z(4)", "Z(6)", "Z(8)", "M(2,Z(2))", "M(2,Z(3))", "sub(Z(9); 3)", "sub(Z(6); 2)", "prod(Z(2),Z(3))"],
    )
    def test_class_verdicts_match_oracles(self, text):
        r = cached_ring(text)
        assert verdict(text, "weakly-rickart-star") is (oracles.o_weakly_rickart(r) is None)
        assert verdict(text, "rickart-star") is oracles.o_rickart(r)
        assert verdict(text, "baer-star") is oracles.o_baer(r)
        assert verdict(text, "pq-baer-star") is oracles.o_pq_baer(r)
        assert verdict(text, "weakly-pq-baer-star") is (oracles.o_weakly_pq_baer(r) is None)

    @pytest.mark.parametrize("text", ["Z(4)", "Z(6)", "M(2,Z(2))", "sub(Z(9); 3)", "prod(Z(2),Z(2))"])
    def test_quasi_baer_matches_ideal_enumeration(self, text):
        # direct enumeration of all two-sided ideals; tiny rings only
        r = cached_ring(text)
        assert verdict(text, "quasi-baer-star") is oracles.o_quasi_baer(r)


class TestMatrixArithmetic:
    @pytest.mark.parametrize(
        "n,m,expected",
        [(2, 3, True), (2, 5, False), (1, 12, False), (1, 6, True), (2, 7, True),
         (2, 21, True), (2, 9, False), (3, 3, False), (4, 7, False), (1, 1, True), (2, 1, True)],
    )
    def test_examples(self, n, m, expected):
        assert classify_matrix_ring(n, m) is expected

    def test_truth_sets(self):
        assert [m for m in range(2, 13) if classify_matrix_ring(1, m)] == [2, 3, 5, 6, 7, 10, 11]
        assert [m for m in range(2, 8) if classify_matrix_ring(2, m)] == [3, 7]
        assert not any(classify_matrix_ring(3, m) for m in range(2, 30))

    @pytest.mark.parametrize("n,m", [(0, 3), (2, 0), (-1, 5)])
    def test_degenerate_inputs_rejected(self, n, m):
        with pytest.raises(ValueError):
            classify_matrix_ring(n, m)

    def test_agreement_with_brute_force(self):
        for n in (1, 2):
            for m in range(2, 7 if n == 2 else 13):
                text = "M(%d,Z(%d))" % (n, m) if n > 1 else "Z(%d)" % m
                assert classify_matrix_ring(n, m) is verdict(text, "baer-star"), (n, m)


class TestRpNotCover:
    def test_matrix_ring_has_witness(self, m2z3):
        x = find_rp_not_central_cover(m2z3)
        assert x is not None
        e = oracles.o_rp(m2z3, x)
        covers = {oracles.o_central_cover(m2z3, y) for y in range(m2z3.order)}
        assert e not in covers

    def test_commutative_rings_have_none(self, z6):
        assert find_rp_not_central_cover(z6) is None
        assert find_rp_not_central_cover(cached_ring("Z(2)")) is None

    def test_witness_is_lowest_index(self, m2z3):
        x = find_rp_not_central_cover(m2z3)
        covers = {oracles.o_central_cover(m2z3, y) for y in range(m2z3.order)}
        for earlier in range(x):
            e = oracles.o_rp(m2z3, earlier)
            assert e in covers


class TestImplications:
    def test_seven_laws_registered(self):
        assert len(IMPLICATIONS) == 7
        names = [name for name, _ in IMPLICATIONS]
        assert "finite-collapse-rickart-iff-baer" in names

    def test_laws_evaluate_on_verdict_dicts(self):
        base = {
            "proper": True, "semi-proper": True, "reduced": True, "abelian": True,
            "unity": True, "rickart-star": True, "weakly-rickart-star": True,
            "baer-star": True, "quasi-baer-star": True, "pq-baer-star": True,
            "weakly-pq-baer-star": True,
        }
        for name, law in IMPLICATIONS:
            assert law(base) is True, name
        broken = dict(base, **{"rickart-star": True, "baer-star": False})
        assert dict(IMPLICATIONS)["finite-collapse-rickart-iff-baer"](broken) is False
        broken = dict(base, **{"abelian": True, "rickart-star": True, "pq-baer-star": False})
        assert dict(IMPLICATIONS)["abelian-rickart-implies-pq-baer"](broken) is False

    def test_no_violations_on_cyclic_corpus(self):
        descriptors = [parse_ring_expr("Z(%d)" % m) for m in range(2, 31)]
        reports = implication_suite(descriptors)
        assert all(rep.verdict for rep in reports)
        assert len(reports) == 29 * len(IMPLICATIONS)

    def test_no_violations_on_matrix_corpus(self):
        descriptors = [parse_ring_expr("M(2,Z(%d))" % m) for m in range(2, 7)]
        reports = implication_suite(descriptors)
        assert all(rep.verdict for rep in reports)

    def test_zero_multiplication_ring_vacuous(self):
        reports = implication_reports_for(parse_ring_expr("sub(Z(9); 3)"))
        assert all(rep.verdict for rep in reports)


class TestReports:
    def test_classify_all_covers_every_property(self, z6):
        reports = classify_all(z6)
        assert list(reports.keys()) == list(PROPERTY_CLASSIFIERS.keys())

    def test_json_schema(self, z6):
        rep = classify_all(z6)["rickart-star"]
        assert rep.to_json() == {"ring": "Z(6)", "property": "rickart-star", "verdict": True}

    def test_json_includes_witness_on_failure(self):
        rep = PROPERTY_CLASSIFIERS["proper"](cached_ring("sub(Z(9); 3)"))
        j = rep.to_json()
        assert j["verdict"] is False
        assert j["witness"] == {"x": 3}

    def test_star_isomorphic_rings_agree(self):
        a = {k: r.verdict for k, r in classify_all(cached_ring("Z(6)")).items()}
        b = {k: r.verdict for k, r in classify_all(cached_ring("prod(Z(2),Z(3))")).items()}
        assert a == b

    def test_micros_recorded(self, m2z3):
        rep = PROPERTY_CLASSIFIERS["baer-star"](m2z3)
        assert rep.micros >= 0
