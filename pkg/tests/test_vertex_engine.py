#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 16:31:18 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/tests/test_vertex_engine.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/tests/test_vertex_engine.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

from fractions import Fraction

import pytest

from freeboson.FockSpace import (
    TW,
    FockError,
    FockVector,
    Momentum,
    NonHomogeneousError,
    SectorMismatchError,
    basis_up_to,
    theta,
    vacuum,
    vec,
)
from freeboson.VertexEngine import (
    LatticeExp,
    borcherds_check,
    borcherds_sides,
    conformal_vector,
    heis_mode_apply,
    heisenberg,
    lattice_lowest_weight,
    lattice_unshifted_apply,
    lattice_vector_mode,
    mode_apply,
    twisted_lowest_weight,
    twisted_mode_apply,
    unshifted_mode_apply,
    virasoro,
)

HALF = Fraction(1, 2)


@pytest.fixture
def sample_states():
    """A few low states in the untwisted and twisted sectors."""
    return [
        vacuum(),
        vec(1),
        vec(2, 1),
        vec(1, ground=Momentum(Fraction(3, 2))),
        vacuum(TW),
        vec(HALF, ground=TW),
        vec(Fraction(3, 2), HALF, ground=TW),
    ]


def test_heisenberg_creates_and_annihilates():
    assert heisenberg(-1, vacuum()) == vec(1)
    assert heisenberg(1, vec(1)) == vacuum()
    assert heisenberg(HALF, vec(HALF, ground=TW)) == vacuum(TW) * HALF
    assert not heisenberg(HALF, vacuum(TW))


def test_heisenberg_zero_mode_reads_momentum():
    state = vacuum(Momentum(Fraction(3, 2)))
    assert heisenberg(0, state) == state * Fraction(3, 2)


def test_virasoro_lowering_and_weights():
    assert virasoro(-1, vec(1)) == vec(2)
    assert virasoro(0, vacuum(TW)) == vacuum(TW) * Fraction(1, 16)
    state = vec(1, ground=Momentum(Fraction(3, 2)))
    assert virasoro(0, state) == state * Fraction(17, 8)
    assert not virasoro(-1, vacuum())


def test_conformal_vector():
    assert conformal_vector() == vec(1, 1, coeff=HALF)
    assert conformal_vector().weight() == 2


@pytest.mark.parametrize("m", [Fraction(n) for n in range(-3, 4)])
@pytest.mark.parametrize("n", [Fraction(n) for n in range(-3, 4)])
def test_heisenberg_commutator_untwisted(m, n, sample_states):
    """[h(m), h(n)] = m delta_{m+n,0} on untwisted states."""
    for v in sample_states[:4]:
        lhs = heisenberg(m, heisenberg(n, v)) - heisenberg(n, heisenberg(m, v))
        expected = v * m if m + n == 0 else FockVector.zero()
        assert lhs == expected, f"m={m}, n={n}, v={v!r}"


@pytest.mark.parametrize("m", [Fraction(2 * n + 1, 2) for n in range(-2, 2)])
@pytest.mark.parametrize("n", [Fraction(2 * n + 1, 2) for n in range(-2, 2)])
def test_heisenberg_commutator_twisted(m, n, sample_states):
    for v in sample_states[4:]:
        lhs = heisenberg(m, heisenberg(n, v)) - heisenberg(n, heisenberg(m, v))
        expected = v * m if m + n == 0 else FockVector.zero()
        assert lhs == expected, f"m={m}, n={n}, v={v!r}"


@pytest.mark.parametrize("m", range(-2, 3))
@pytest.mark.parametrize("n", range(-2, 3))
def test_virasoro_commutator(m, n, sample_states):
    """Central charge one in both sectors."""
    for v in sample_states:
        lhs = virasoro(m, virasoro(n, v)) - virasoro(n, virasoro(m, v))
        rhs = virasoro(m + n, v) * (m - n)
        if m + n == 0:
            rhs = rhs + v * Fraction(m ** 3 - m, 12)
        assert lhs == rhs, f"m={m}, n={n}, v={v!r}"


def test_mode_application_rejects_wrong_inputs():
    with pytest.raises(SectorMismatchError):
        heis_mode_apply(vec(1), 0, vacuum(TW))
    with pytest.raises(SectorMismatchError):
        twisted_mode_apply(vec(1), 0, vec(1))
    with pytest.raises(NonHomogeneousError):
        heis_mode_apply(vec(1) + vec(1, 1), 0, vec(1))
    with pytest.raises(NonHomogeneousError):
        twisted_mode_apply(vec(1) + vec(1, 1), 0, vacuum(TW))
    with pytest.raises(FockError):
        twisted_mode_apply(vacuum(TW), 0, vacuum(TW))


def test_lattice_exponential_products():
    e_plus, e_minus = LatticeExp(1, 1), LatticeExp(-1, 1)
    assert e_plus.weight == 1
    assert lattice_unshifted_apply(e_plus, -1, e_minus.vector()) == (
        vec(1, 1, coeff=HALF) + vec(2, coeff=HALF)
    )
    assert lattice_unshifted_apply(e_plus, 0, e_minus.vector()) == vec(1)
    assert lattice_unshifted_apply(e_plus, 1, e_minus.vector()) == vacuum()


def test_lattice_exponential_on_itself():
    e = LatticeExp(1, 1)
    for n in range(-2, 3):
        assert not lattice_unshifted_apply(e, n, e.vector()), f"n={n}"
    assert lattice_unshifted_apply(e, -3, e.vector()) == vacuum(Momentum(2))


def test_lattice_vector_mode_rejects_mixed_monomials():
    with pytest.raises(FockError):
        lattice_vector_mode(vec(1, ground=Momentum(1)), 0, vacuum(), 1)
    with pytest.raises(FockError):
        LatticeExp(1, 0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lattice_lowest_weights(k):
    for r in range(k + 1):
        assert lattice_lowest_weight(k, Fraction(r, 2 * k)) == Fraction(r * r, 4 * k)


def test_lattice_lowest_weight_theta_eigenspaces():
    assert lattice_lowest_weight(1, 0, parity=1) == 0
    assert lattice_lowest_weight(1, 0, parity=-1) == 1
    with pytest.raises(FockError):
        lattice_lowest_weight(2, Fraction(1, 4), parity=1)


def test_twisted_lowest_weights():
    assert twisted_lowest_weight(1) == Fraction(1, 16)
    assert twisted_lowest_weight(-1) == Fraction(9, 16)


@pytest.mark.parametrize(
    "p,s,t",
    [(0, 0, 0), (1, -1, 0), (-1, 0, 1), (0, -2, -1), (2, 1, -2)],
)
def test_borcherds_untwisted(p, s, t):
    a, b = vec(1), vec(1, 1, coeff=HALF)
    for u in (vacuum(), vec(1), vec(2, ground=Momentum(1))):
        assert borcherds_check(a, b, u, p, s, t), f"(p,s,t)=({p},{s},{t}) u={u!r}"


@pytest.mark.parametrize(
    "p,s,t",
    [(HALF, HALF, 0), (-HALF, HALF, 1), (HALF, -Fraction(3, 2), -1)],
)
def test_borcherds_twisted(p, s, t):
    """Odd a and b act with half-integer modes on the twisted module."""
    a = vec(1)
    for b in (vec(1), vec(2)):
        for u in basis_up_to(1, TW):
            u = FockVector.from_monomial(u)
            assert borcherds_check(a, b, u, p, s, t), f"(p,s,t)=({p},{s},{t}) u={u!r}"


def test_borcherds_twisted_even_a():
    a, b = conformal_vector(), vec(1)
    for u in (vacuum(TW), vec(HALF, ground=TW)):
        assert borcherds_check(a, b, u, 0, HALF, 1)
        assert borcherds_check(a, b, u, -1, -HALF, 0)


def test_borcherds_with_negative_odd_t():
    assert borcherds_check(vec(1), vec(1), vec(1), 0, 0, -1)
    assert borcherds_check(vec(1), vec(1), vec(1), 1, -1, -3)
    lhs, rhs = borcherds_sides(vec(1), vec(1), vec(1), 0, 0, -1)
    assert all(isinstance(c, Fraction) for c in rhs.values())


VERTEX_ELEMENTS = [vec(1), vec(1, 1), vec(2, 1), vec(3, 1, coeff=HALF) - vec(2, 2)]


@pytest.mark.parametrize("a", VERTEX_ELEMENTS)
@pytest.mark.parametrize("n", [Fraction(k, 2) for k in range(-4, 5)])
def test_theta_equivariance(a, n, sample_states):
    """theta(a~(n)v) = (theta a)~(n) theta(v) in both sectors."""
    for v in sample_states:
        assert theta(mode_apply(a, n, v)) == mode_apply(theta(a), n, theta(v)), f"v={v!r}"


@pytest.mark.parametrize("a", VERTEX_ELEMENTS)
@pytest.mark.parametrize("m", [Fraction(k, 2) for k in range(-4, 5)])
def test_l_minus_one_derivative(a, m, sample_states):
    """(L(-1)a)(m) = -m a(m-1) with unshifted indices."""
    derivative = virasoro(-1, a)
    for v in sample_states:
        lhs = unshifted_mode_apply(derivative, m, v)
        assert lhs == unshifted_mode_apply(a, m - 1, v) * (-m), f"v={v!r}"


def test_borcherds_rejects_half_integer_sign():
    with pytest.raises(ValueError):
        borcherds_sides(vec(1), vec(1), vec(HALF, ground=TW), HALF, 0, -HALF)


if __name__ == "__main__":
    pytest.main(["-xvs", __file__])

# EOF
