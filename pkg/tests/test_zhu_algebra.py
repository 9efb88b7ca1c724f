#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 17:21:40 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/tests/test_zhu_algebra.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/tests/test_zhu_algebra.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

from fractions import Fraction

import pytest

from freeboson.FockSpace import TW, FockError, FockVector, Momentum, vacuum, vec
from freeboson.HVectors import build_H
from freeboson.VertexEngine import conformal_vector, virasoro
from freeboson.ZhuAlgebra import (
    AMBIENT_FULL,
    J_AMENDED,
    J_STATED,
    ZhuElement,
    certify,
    circ,
    idempotent_vectors,
    is_virasoro_singular,
    j_from_h4,
    o_action,
    omega_test,
    ov_membership,
    relation_vectors,
    star,
    table_one_values,
    top_states,
    top_weight,
    verify_idempotents,
    verify_ov_on_tops,
    verify_table1,
    verify_top_multiplicativity,
    verify_zhu_image,
    verify_zhu_relations,
)


@pytest.fixture
def omega():
    return conformal_vector()


def test_vacuum_is_a_left_unit(omega):
    for x in (omega, build_H(2).vector, vec(1)):
        assert star(vacuum(), x) == x


def test_star_on_tops_is_multiplicative(omega):
    top = vacuum(Momentum(3))
    assert o_action(star(omega, omega), top) == top * Fraction(81, 4)
    assert verify_top_multiplicativity().passed


def test_zhu_element_arithmetic(omega):
    w = ZhuElement(omega)
    assert (w - 1).representative == omega - vacuum()
    assert (1 - w).representative == vacuum() - omega
    assert (2 * w).representative == omega * 2
    assert (w * w).representative == star(omega, omega)
    assert (w + vacuum()).representative == omega + vacuum()
    assert w.o(vacuum(Momentum(1))) == vacuum(Momentum(1)) * Fraction(1, 2)


def test_zhu_element_requires_theta_fixed_representatives():
    with pytest.raises(FockError):
        ZhuElement(vec(1))
    assert ZhuElement(vec(1), AMBIENT_FULL).representative == vec(1)


def test_membership_certificates():
    v = circ(vec(1), vec(1))
    certificate = certify(v, max_cutoff=4, ambient=AMBIENT_FULL)
    assert certificate.proved
    assert certificate.replay()
    assert certificate.to_dict()["status"] == "proved"


def test_membership_of_l_minus_one_plus_l_zero(omega):
    v = virasoro(-1, omega) + virasoro(0, omega)
    assert top_weight(v) == 3
    assert ov_membership(v, 4).proved


def test_membership_edge_cases():
    assert ov_membership(FockVector.zero(), 2).proved
    assert not ov_membership(vacuum(), 4).proved
    assert ov_membership(vec(3, 3), 4).status == "undetermined"
    assert not ov_membership(vacuum(), 4).replay()


def test_top_states_and_expected_values():
    names = [name for name, _ in top_states((1,))]
    assert names == ["M(1)+", "M(1)-", "M(1,1)", "M(1)(theta)+", "M(1)(theta)-"]
    assert table_one_values(vacuum(TW)) == (Fraction(1, 16), Fraction(-1, 128), Fraction(1, 256))
    assert table_one_values(vec(Fraction(1, 2), ground=TW)) == (
        Fraction(9, 16), Fraction(15, 128), Fraction(9, 256),
    )
    assert table_one_values(vacuum(Momentum(Fraction(3, 2)))) == (Fraction(9, 8), 0, 0)


def test_table1():
    report = verify_table1()
    assert report.passed, report.failures
    assert len(report.cases) == 15


def test_omega_test():
    assert omega_test(vacuum(TW), Fraction(1, 16))
    assert omega_test(vec(1), 0)
    assert not omega_test(vec(1, 1), 0)


def test_j_readings():
    assert j_from_h4() == J_AMENDED
    assert is_virasoro_singular(J_AMENDED)
    assert not is_virasoro_singular(J_STATED)


def test_relation_vectors_keys():
    assert set(relation_vectors()) == {
        "wJ-commute", "wJ-cubic", "wJ-quadratic", "wH-commute", "wH-cubic", "wH-quadratic",
    }


def test_amended_relations_vanish_on_tops():
    report = verify_zhu_relations(readings=("amended",), certify_membership=False)
    assert report.passed, report.failures
    assert report.case("wH-cubic/tops").passed
    assert report.case("wJ-quadratic/amended/tops").passed


def test_stated_j_fails_its_identities():
    report = verify_zhu_relations(readings=("stated",), names=(), certify_membership=False)
    assert report.case("J/stated/theta-fixed-weight4").passed
    assert not report.case("J/stated/virasoro-singular").passed
    assert not report.case("J/stated/from-H4").passed


def test_idempotent_projections():
    report = verify_idempotents(certify_membership=False)
    assert report.case("a/amended/projection").passed
    assert report.case("a+/projection").passed
    assert report.case("a-/projection").passed
    assert not report.case("a/stated/projection").passed


@pytest.mark.slow
def test_certified_relations():
    report = verify_zhu_relations(readings=("amended",))
    assert report.passed, report.failures
    for key in ("wH-commute", "wH-cubic", "wH-quadratic", "wJ-quadratic/amended"):
        case = report.case(f"{key}/membership")
        assert case.details["certificate"]["status"] == "proved"
        assert case.details["certifying_cutoff"] <= 14


@pytest.mark.slow
def test_certified_idempotent_laws():
    report = verify_idempotents()
    for name in ("a/amended", "a+", "a-"):
        assert report.case(f"{name}/omega-eigen").passed
        assert report.case(f"{name}/H4-eigen").passed
        law = report.case(f"{name}/law")
        assert law.passed, law.witness
        assert "wH-commute" in law.details["derived_from"]
        assert set(law.details["certifying_cutoffs"]) == {"H4-eigen", "omega-eigen", "wH-commute"}
    with pytest.raises(KeyError):
        report.case("a/stated/law")


def test_idempotent_vectors_are_theta_fixed():
    for name, (x, own, alpha, beta) in idempotent_vectors().items():
        assert ZhuElement(x).representative == x, name
        assert own in {top_name for top_name, _ in top_states()}


def test_ov_acts_trivially_on_tops():
    assert verify_ov_on_tops(max_weight=3).passed


def test_zhu_image():
    assert verify_zhu_image().passed


if __name__ == "__main__":
    pytest.main(["-xvs", __file__])

# EOF
