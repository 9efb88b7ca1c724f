#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 17:03:27 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/tests/test_commutator_lab.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/tests/test_commutator_lab.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

from fractions import Fraction

import pytest
import sympy

from freeboson.CommutatorLab import (
    LL,
    M,
    RELATIONS,
    DecompositionError,
    ModeExpression,
    central_polynomial,
    decompose_S,
    direct_commutator,
    predicted_commutator,
    surviving_readings,
    verify_appendix,
    verify_specializations,
)
from freeboson.FockSpace import TW, vacuum, vec
from freeboson.exact_math import binomial_expr


def test_decompose_S():
    assert decompose_S(vacuum()) == {(0, 0): 1}
    assert decompose_S(vec(1, 1)) == {(1, 0): 2}
    assert decompose_S(vec(2, 2)) == {(1, 2): Fraction(1, 3), (2, 0): -2}


def test_decompose_S_rejects_vectors_outside_S():
    with pytest.raises(DecompositionError):
        decompose_S(vec(2, 1, 1))


def test_mode_expression_normalizes():
    a = ModeExpression(((Fraction(1), 1, Fraction(0)), (Fraction(2), 1, Fraction(0))))
    b = ModeExpression(((Fraction(3), 1, Fraction(0)),))
    assert a == b
    assert hash(a) == hash(b)
    assert str(ModeExpression((), Fraction(1, 2))) == "1/2*id"
    assert str(ModeExpression()) == "0"


def test_predicted_commutator_small_cases():
    assert predicted_commutator("L", "H4", 1, 0) == ModeExpression(
        ((Fraction(3), 2, Fraction(1)), (Fraction(1), 1, Fraction(1)))
    )
    assert predicted_commutator("L", "L", 2, -2) == ModeExpression(
        ((Fraction(4), 1, Fraction(0)),), Fraction(1, 2)
    )


def test_formula_evaluation():
    assert LL.evaluate(2, -2) == predicted_commutator("L", "L", 2, -2)
    assert LL.indices(3, -1) == (3, -1)


@pytest.mark.parametrize("v", [vec(2, 1), vec(Fraction(3, 2), ground=TW)])
def test_predicted_matches_direct(v):
    for m, n in [(1, 0), (-1, 2), (2, -2), (0, -1)]:
        predicted = predicted_commutator("L", "H4", m, n)
        assert predicted.apply(v) == direct_commutator("L", m, "H4", n, v), f"m={m}, n={n}"


def test_central_polynomials():
    assert sympy.expand(central_polynomial("L", "L") - (M**3 - M) / 12) == 0
    assert sympy.expand(central_polynomial("L", "H4") + sympy.Rational(1, 3) * binomial_expr(M + 1, 5)) == 0


def test_specializations_single_out_amended_readings():
    """Single-index families agree with the two-index families only in the amended readings."""
    report = verify_specializations()
    assert report.case("H4(0)-L/stated").passed
    assert report.case("H6(0)-L/stated").passed
    assert not report.case("H4(0)-H4/stated").passed
    assert report.case("H4(0)-H4/amended").passed
    assert not report.case("H4(1)-L/stated").passed
    assert report.case("H4(1)-L/amended").passed


def test_every_relation_has_a_reading():
    assert set(RELATIONS) == {
        "L-L", "L-H4", "H4-H4", "L-H6", "H4(0)-L", "H4(0)-H4", "H6(0)-L", "H4(1)-L",
    }
    assert all("stated" in readings for readings in RELATIONS.values())


def test_appendix_virasoro():
    report = verify_appendix("L-L", index_range=2, max_weight=2)
    assert report.passed, report.failures
    assert surviving_readings(report, "L-L") == ["stated"]


def test_appendix_l_h4_central_term():
    report = verify_appendix("L-H4", index_range=2, max_weight=2)
    assert report.case("L-H4/assembly").passed
    assert report.case("L-H4/amended").passed
    assert report.case("L-H4/amended/central").passed
    assert not report.case("L-H4/stated/central").passed
    assert surviving_readings(report, "L-H4") == ["amended"]


def test_appendix_h4_one_l():
    report = verify_appendix("H4(1)-L", index_range=2, max_weight=2)
    assert surviving_readings(report, "H4(1)-L") == ["amended"]
    assert not report.case("H4(1)-L/stated").passed


FAMILY_SURVIVORS = [
    ("H4-H4", ["stated"]),
    ("L-H6", ["stated"]),
    ("H4(0)-L", ["stated"]),
    ("H6(0)-L", ["stated"]),
    ("H4(0)-H4", ["amended"]),
]


@pytest.mark.parametrize("relation_id,survivors", FAMILY_SURVIVORS)
def test_appendix_families_at_low_weight(relation_id, survivors):
    report = verify_appendix(relation_id, index_range=2, max_weight=2)
    assert set(survivors) <= set(surviving_readings(report, relation_id))
    assert report.case(f"{relation_id}/assembly").passed


@pytest.mark.slow
@pytest.mark.parametrize("relation_id,survivors", FAMILY_SURVIVORS)
def test_appendix_families_at_full_range(relation_id, survivors):
    report = verify_appendix(relation_id, index_range=4, max_weight=6)
    assert surviving_readings(report, relation_id) == survivors
    for reading in survivors:
        assert report.case(f"{relation_id}/{reading}").passed


if __name__ == "__main__":
    pytest.main(["-xvs", __file__])

# EOF
