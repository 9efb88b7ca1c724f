#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 16:14:05 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/tests/test_fock_space.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/tests/test_fock_space.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freeboson.FockSpace import (
    TW,
    FockError,
    FockMonomial,
    FockParseError,
    FockVector,
    GeneratorProfile,
    Momentum,
    NonHomogeneousError,
    SectorMismatchError,
    basis,
    basis_up_to,
    fixed_point_basis,
    is_theta_fixed,
    monomial,
    parse,
    serialize,
    theta,
    to_lattice_generator,
    vacuum,
    vec,
    weight,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_monomial_is_sorted_and_doubled():
    mono = monomial(1, 3, 2)
    assert mono.modes == (6, 4, 2)
    assert mono.level == 6
    assert mono.mode_count == 3


def test_monomial_rejects_wrong_sector():
    with pytest.raises(SectorMismatchError):
        monomial(1, ground=TW)
    with pytest.raises(SectorMismatchError):
        monomial(Fraction(1, 2))
    with pytest.raises(FockError):
        FockMonomial((2, 4))


def test_weights():
    assert weight(monomial(2, 1, ground=Momentum(1))) == Fraction(7, 2)
    assert weight(FockMonomial((), TW)) == Fraction(1, 16)
    assert weight(monomial(Fraction(1, 2), ground=TW)) == Fraction(9, 16)
    lattice = GeneratorProfile.lattice(2)
    assert weight(FockMonomial((), Momentum(1)), lattice) == 2


def test_vector_arithmetic():
    v = vec(1, 1, coeff=Fraction(1, 2)) + vec(2)
    assert v - vec(2) == vec(1, 1, coeff=Fraction(1, 2))
    assert (v * 2).coefficient(monomial(1, 1)) == 1
    assert not (v - v)
    assert v.weight() == 2


def test_vector_sectors_do_not_mix():
    with pytest.raises(SectorMismatchError):
        vec(1) + vacuum(TW)


def test_nonhomogeneous_weight():
    with pytest.raises(NonHomogeneousError):
        (vec(1) + vec(1, 1)).weight()


def test_serialize_format():
    v = vec(1, 1, coeff=Fraction(1, 2)) + vec(2)
    assert serialize(v) == "1/2 * [1,1] @ e^0 + 1 * [2] @ e^0"
    assert serialize(vacuum(Momentum(Fraction(3, 2)))) == "1 * [] @ e^3/2"
    assert serialize(vacuum(TW)) == "1 * [] @ tw"


def test_serialize_orders_by_weight():
    """e^{3h} has level 0 but weight 9/2, above h(-2)1."""
    v = vacuum(Momentum(3)) + vec(2)
    assert serialize(v) == "1 * [2] @ e^0 + 1 * [] @ e^3"
    assert parse(serialize(v)) == v


def test_parse_roundtrip_examples():
    for text in ("1/2 * [1,1] @ e^0", "-3 * [3/2,1/2] @ tw", "2 * [1,1] @ e^-1 + 1 * [2] @ e^-1"):
        assert serialize(parse(text)) == text


@pytest.mark.parametrize(
    "text",
    [
        "1 * [1] @ tw",
        "1 * [1/2] @ e^0",
        "0 * [1] @ e^0",
        "1 * [1,2] @ e^0",
        "1 * [1] @ e^0 + 2 * [1] @ e^0",
        "1 * [1] @ e^0 + 1 * [] @ tw",
        "one * [1] @ e^0",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(FockParseError):
        parse(text)


def test_partition_counts():
    """Untwisted levels are counted by partitions."""
    for n, count in enumerate(PARTITION_COUNTS):
        assert len(basis(n)) == count


def test_twisted_basis():
    assert [m.modes for m in basis(Fraction(1, 2), TW)] == [(1,)]
    assert len(basis(Fraction(3, 2), TW)) == 2
    assert len(basis(2, TW)) == 2
    assert len(basis_up_to(1, TW)) == 3


def test_fixed_point_basis():
    monos = fixed_point_basis(4)
    assert len(monos) == 6
    assert all(m.mode_count % 2 == 0 for m in monos)


def test_theta():
    assert theta(vec(1)) == -vec(1)
    assert theta(vacuum(Momentum(Fraction(3, 2)))) == vacuum(Momentum(Fraction(-3, 2)))
    assert is_theta_fixed(vec(2, 1))
    assert not is_theta_fixed(vec(2, 1, 1))


_MONOS = basis_up_to(4) + basis_up_to(3, Momentum(1)) + basis_up_to(3, Momentum(-1))


@settings(max_examples=50, deadline=None)
@given(
    st.dictionaries(
        st.sampled_from(_MONOS),
        st.fractions(min_value=-4, max_value=4, max_denominator=5),
        max_size=6,
    )
)
def test_theta_is_an_involution(terms):
    v = FockVector(terms)
    assert theta(theta(v)) == v
    assert is_theta_fixed(v + theta(v))


def test_to_lattice_generator():
    assert to_lattice_generator(vec(1, 1), 1) == vec(1, 1, coeff=Fraction(1, 2))
    with pytest.raises(FockError):
        to_lattice_generator(vec(1), 1)


if __name__ == "__main__":
    pytest.main(["-xvs", __file__])

# EOF
