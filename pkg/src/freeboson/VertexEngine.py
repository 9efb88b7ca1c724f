#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 10:26:48 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/VertexEngine.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/VertexEngine.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

"""
Mode actions on Fock states.

Functionality:
    - Normal-ordered modes a(m) of a in M(1) on untwisted and twisted states
    - The twisted correction exp(Delta_z) built from delta_series
    - Lattice exponential operators e^{m alpha}(p)
    - Both sides of the Borcherds identity
Input:
    FockVector states, shifted or unshifted mode indices
Output:
    FockVector results, exact
Prerequisites:
    sympy
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, floor
from typing import Dict, Optional, Tuple

from sympy.utilities.iterables import partitions

from .FockSpace import (
    H_PROFILE,
    VACUUM,
    FockError,
    FockMonomial,
    FockVector,
    GeneratorProfile,
    Momentum,
    NonHomogeneousError,
    SectorMismatchError,
    _is_zero,
    basis,
    doubled,
    levels_up_to,
    TW,
    weight,
)
from .exact_math import delta_series, gen_binomial, to_fraction
from .debug_print import debug_print

# Delta_z sign that reproduces the twisted top-level values
DEFAULT_DELTA_SIGN = 1


################################################################################
# Untwisted and twisted normal ordering
################################################################################


def _add(terms: Dict[FockMonomial, object], mono: FockMonomial, value):
    terms[mono] = terms[mono] + value if mono in terms else value


@lru_cache(maxsize=None)
def _normal_ordered(
    a_modes: Tuple[int, ...], m2: int, target: FockMonomial, norm: Fraction
) -> Tuple[Tuple[FockMonomial, object], ...]:
    """
    a(m) target for a = h(-n_1)...h(-n_s)1, all indices doubled.

    Peels a = h(-n) rest and uses
    a(m) = sum_i C(-i-1, n-1) :h(i) rest(m-i-n):
    with the summation index i running over the sector of target.
    """
    twisted = target.twisted
    if twisted:
        if (m2 - len(a_modes)) % 2:
            return ()
    elif m2 % 2:
        return ()
    if not a_modes:
        return ((target, Fraction(1)),) if m2 == -2 else ()
    if target.level2 + sum(a_modes) - m2 - 2 < 0:
        return ()

    n2, rest = a_modes[0], a_modes[1:]
    n = n2 // 2
    terms: Dict[FockMonomial, object] = {}

    # h(i) with i <= 0 stands to the left
    i2 = -1 if twisted else 0
    lowest = m2 - n2 - sum(rest) - target.level2 + 2
    while i2 >= lowest:
        inner = _normal_ordered(rest, m2 - i2 - n2, target, norm)
        factor = gen_binomial(Fraction(-i2, 2) - 1, n - 1) if inner else 0
        if factor:
            for mono, coeff in inner:
                if i2 == 0:
                    c = mono.ground.c
                    if not _is_zero(c):
                        _add(terms, mono, factor * coeff * norm * c)
                else:
                    _add(terms, mono.with_mode(-i2), factor * coeff)
        i2 -= 2

    # h(i) with i > 0 acts first on the target
    for d in sorted(set(target.modes)):
        factor = gen_binomial(Fraction(-d, 2) - 1, n - 1)
        if not factor:
            continue
        contraction = Fraction(d, 2) * norm * target.multiplicity(d)
        for mono, coeff in _normal_ordered(rest, m2 - d - n2, target.without_mode(d), norm):
            _add(terms, mono, factor * contraction * coeff)

    return tuple((mono, coeff) for mono, coeff in terms.items() if not _is_zero(coeff))


@lru_cache(maxsize=None)
def _delta_expansion(
    a_modes: Tuple[int, ...], norm: Fraction, sign: int
) -> Tuple[Tuple[int, Tuple[int, ...], Fraction], ...]:
    """
    exp(sign * Delta_z) h(-a_modes)1 as (2e, modes, coefficient) with z^{-e}.

    Delta_z contracts an ordered pair of factors: h(q) first, then h(p),
    weighted by the coefficient of x^p y^q in delta_series.
    """
    series = delta_series(max(sum(a_modes) // 2, 1))
    total: Dict[Tuple[int, Tuple[int, ...]], Fraction] = {(0, a_modes): Fraction(1)}
    current = dict(total)
    power = 1
    while current:
        following: Dict[Tuple[int, Tuple[int, ...]], Fraction] = {}
        for (e2, modes), coeff in current.items():
            for q2 in sorted(set(modes)):
                after_q = list(modes)
                after_q.remove(q2)
                weight_q = Fraction(q2, 2) * norm * modes.count(q2)
                for p2 in sorted(set(after_q)):
                    c_pq = series.coefficient(p2 // 2, q2 // 2)
                    if not c_pq:
                        continue
                    weight_p = Fraction(p2, 2) * norm * after_q.count(p2)
                    remaining = list(after_q)
                    remaining.remove(p2)
                    key = (e2 + p2 + q2, tuple(remaining))
                    value = sign * c_pq * weight_q * weight_p * coeff / power
                    following[key] = following.get(key, Fraction(0)) + value
        current = {key: value for key, value in following.items() if value}
        for key, value in current.items():
            total[key] = total.get(key, Fraction(0)) + value
        power += 1
    return tuple((e2, modes, c) for (e2, modes), c in sorted(total.items()) if c)


def _check_vertex_element(a: FockVector):
    for mono in a:
        if mono.ground != VACUUM:
            raise FockError(f"Vertex operators are defined for elements of M(1); got {mono}")


def unshifted_mode_apply(
    a: FockVector,
    m,
    v: FockVector,
    profile: GeneratorProfile = H_PROFILE,
    sign: int = DEFAULT_DELTA_SIGN,
) -> FockVector:
    """
    a(m)v with the unshifted index, extended linearly in a and v.

    Untwisted states use the normal-ordered formula directly; twisted
    states apply it to exp(Delta_z)a. Indices outside the sector of v
    give zero.
    """
    _check_vertex_element(a)
    m2 = doubled(m)
    pairs = []
    for target, v_coeff in v.items():
        for a_mono, a_coeff in a.items():
            coeff = a_coeff * v_coeff
            if target.twisted:
                for e2, b_modes, c in _delta_expansion(a_mono.modes, profile.norm, sign):
                    for mono, value in _normal_ordered(b_modes, m2 - e2, target, profile.norm):
                        pairs.append((mono, value * c * coeff))
            else:
                for mono, value in _normal_ordered(a_mono.modes, m2, target, profile.norm):
                    pairs.append((mono, value * coeff))
    return FockVector.accumulate(pairs)


def mode_apply(
    a: FockVector,
    n,
    v: FockVector,
    profile: GeneratorProfile = H_PROFILE,
    sign: int = DEFAULT_DELTA_SIGN,
) -> FockVector:
    """
    The shifted mode a~(n)v = a(wt a + n - 1)v, extended linearly over the
    homogeneous components of a.
    """
    result = FockVector.zero()
    for wt, component in a.weight_components(profile).items():
        result = result + unshifted_mode_apply(component, wt + to_fraction(n) - 1, v, profile, sign)
    return result


def heis_mode_apply(
    a: FockVector, n, v: FockVector, profile: GeneratorProfile = H_PROFILE
) -> FockVector:
    """
    a~(n)v on an untwisted state.

    Parameters
    ----------
    a : FockVector
        Homogeneous element of M(1)
    n : int or Fraction
        Shifted index
    v : FockVector
        State over momentum grounds

    Returns
    -------
    FockVector
        Homogeneous of weight wt(v) - n when v is homogeneous
    """
    if v.twisted:
        raise SectorMismatchError("heis_mode_apply needs an untwisted state")
    if not a.is_homogeneous(profile):
        raise NonHomogeneousError("heis_mode_apply needs a homogeneous a")
    return mode_apply(a, n, v, profile)


def twisted_mode_apply(
    a: FockVector,
    n,
    v: FockVector,
    profile: GeneratorProfile = H_PROFILE,
    sign: int = DEFAULT_DELTA_SIGN,
) -> FockVector:
    """a~(n)v on the twisted module, the correction exp(sign*Delta_z) included."""
    if v and not v.twisted:
        raise SectorMismatchError("twisted_mode_apply needs a twisted state")
    if not a.is_homogeneous(profile):
        raise NonHomogeneousError("twisted_mode_apply needs a homogeneous a")
    return mode_apply(a, n, v, profile, sign)


################################################################################
# Named operators
################################################################################


def heisenberg_vector() -> FockVector:
    """h(-1)1"""
    return FockVector.from_monomial(FockMonomial((2,), VACUUM))


def conformal_vector(profile: GeneratorProfile = H_PROFILE) -> FockVector:
    """omega = beta(-1)^2 1 / (2N)"""
    return FockVector.from_monomial(FockMonomial((2, 2), VACUUM), 1 / (2 * profile.norm))


def heisenberg(n, v: FockVector, profile: GeneratorProfile = H_PROFILE) -> FockVector:
    """h(n)v"""
    return mode_apply(heisenberg_vector(), n, v, profile)


def virasoro(n, v: FockVector, profile: GeneratorProfile = H_PROFILE, sign: int = DEFAULT_DELTA_SIGN) -> FockVector:
    """L(n)v"""
    return mode_apply(conformal_vector(profile), n, v, profile, sign)


def l_minus_one_power(v: FockVector, power: int, profile: GeneratorProfile = H_PROFILE) -> FockVector:
    for _ in range(power):
        v = virasoro(-1, v, profile)
    return v


################################################################################
# Lattice exponentials
################################################################################


@dataclass(frozen=True)
class LatticeExp:
    """The state e^{m alpha} of V_L with (alpha, alpha) = 2k; trivial cocycle."""

    m: int
    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise FockError(f"Lattice parameter k must be >= 1, got {self.k}")

    @property
    def profile(self) -> GeneratorProfile:
        return GeneratorProfile.lattice(self.k)

    @property
    def weight(self) -> Fraction:
        return Fraction(self.k * self.m * self.m)

    def vector(self) -> FockVector:
        return FockVector.from_monomial(FockMonomial((), Momentum(self.m)))


def _partition_items(j: int):
    if j == 0:
        yield {}
        return
    for part in partitions(j):
        yield dict(part)


def _annihilate(state: Dict[FockMonomial, Fraction], n: int, norm: Fraction):
    result: Dict[FockMonomial, Fraction] = {}
    for mono, coeff in state.items():
        mult = mono.multiplicity(2 * n)
        if mult:
            _add(result, mono.without_mode(2 * n), coeff * n * norm * mult)
    return result


@lru_cache(maxsize=None)
def _exp_plus(m: int, j: int, mono: FockMonomial, norm: Fraction):
    """z^{-j} coefficient of exp(-m sum_n alpha(n) z^{-n} / n) on mono."""
    result: Dict[FockMonomial, Fraction] = {}
    for part in _partition_items(j):
        state = {mono: Fraction(1)}
        scale = Fraction(1)
        for n, mult in part.items():
            for _ in range(mult):
                state = _annihilate(state, n, norm)
            scale *= Fraction(-m, n) ** mult / factorial(mult)
        for target, coeff in state.items():
            _add(result, target, scale * coeff)
    return tuple(result.items())


@lru_cache(maxsize=None)
def _exp_minus(m: int, i: int, mono: FockMonomial):
    """z^{i} coefficient of exp(m sum_n alpha(-n) z^{n} / n) on mono."""
    result: Dict[FockMonomial, Fraction] = {}
    for part in _partition_items(i):
        modes = list(mono.modes)
        scale = Fraction(1)
        for n, mult in part.items():
            modes.extend([2 * n] * mult)
            scale *= Fraction(m, n) ** mult / factorial(mult)
        _add(result, FockMonomial.create(modes, mono.ground), scale)
    return tuple(result.items())


def lattice_unshifted_apply(e: LatticeExp, p, v: FockVector) -> FockVector:
    """
    e^{m alpha}(p)v, read off E^-(-m alpha, z) E^+(-m alpha, z) e^{m alpha} z^{m alpha(0)}.

    Parameters
    ----------
    e : LatticeExp
        The exponential
    p : int or Fraction
        Unshifted index
    v : FockVector
        State over momentum grounds e^{c alpha}

    Returns
    -------
    FockVector
        Result over the shifted grounds e^{(c+m) alpha}
    """
    p = to_fraction(p)
    norm = e.profile.norm
    pairs = []
    for mono, coeff in v.items():
        if mono.twisted:
            raise SectorMismatchError("Lattice exponentials act on momentum sectors only")
        c = mono.ground.c
        shift = norm * e.m * c
        ground = Momentum(c + e.m)
        for j in range(floor(mono.level) + 1):
            i = j - p - 1 - shift
            if i.denominator != 1 or i < 0:
                continue
            for lowered, c_plus in _exp_plus(e.m, j, mono, norm):
                for raised, c_minus in _exp_minus(e.m, int(i), lowered.with_ground(ground)):
                    pairs.append((raised, coeff * c_plus * c_minus))
    return FockVector.accumulate(pairs)


def lattice_mode_apply(e: LatticeExp, n, v: FockVector) -> FockVector:
    """Shifted mode of e^{m alpha}: e^{m alpha}(k m^2 + n - 1)."""
    return lattice_unshifted_apply(e, e.weight + to_fraction(n) - 1, v)


def lattice_vector_mode(a: FockVector, p, v: FockVector, k: int) -> FockVector:
    """
    a(p)v for a in V_L spanned by pure exponentials and momentum-zero monomials.
    """
    profile = GeneratorProfile.lattice(k)
    result = FockVector.zero()
    for mono, coeff in a.items():
        if mono.twisted:
            raise SectorMismatchError("Lattice vertex operators take untwisted states")
        c = mono.ground.c
        if c == 0:
            part = unshifted_mode_apply(FockVector.from_monomial(mono), p, v, profile)
        elif not mono.modes and c.denominator == 1:
            part = lattice_unshifted_apply(LatticeExp(int(c), k), p, v)
        else:
            raise FockError(f"Mixed lattice monomial {mono} is not supported")
        result = result + part * coeff
    return result


def lattice_lowest_weight(
    k: int, coset, parity: Optional[int] = None, max_level: int = 3, span: int = 3
) -> Fraction:
    """
    Lowest weight of the sector e^{(coset + Z) alpha}, or of its theta-eigenspace.

    A monomial over a nonzero momentum pairs with its theta image into both
    eigenspaces; over momentum zero its sign is (-1)^{number of factors}.
    """
    coset = to_fraction(coset)
    if parity is not None and (2 * coset).denominator != 1:
        raise FockError(f"The coset {coset} is not theta-stable")
    profile = GeneratorProfile.lattice(k)
    best = None
    for shift in range(-span, span + 1):
        ground = Momentum(coset + shift)
        for level in range(max_level + 1):
            for mono in basis(level, ground):
                if parity is not None and ground.c == 0 and (-1) ** mono.mode_count != parity:
                    continue
                w = weight(mono, profile)
                best = w if best is None or w < best else best
    return best


def twisted_lowest_weight(parity: int, max_level: int = 2) -> Fraction:
    best = None
    for level in levels_up_to(max_level, True):
        for mono in basis(level, TW):
            if (-1) ** mono.mode_count == parity:
                w = weight(mono)
                best = w if best is None or w < best else best
    return best


################################################################################
# Borcherds identity
################################################################################


def borcherds_sides(
    a: FockVector,
    b: FockVector,
    u: FockVector,
    p,
    s,
    t,
    profile: GeneratorProfile = H_PROFILE,
    sign: int = DEFAULT_DELTA_SIGN,
) -> Tuple[FockVector, FockVector]:
    """
    Both sides of
    sum_i C(p,i) (a(t+i)b)(p+s-i)u
      = sum_i (-1)^i C(t,i) (a(p+t-i)b(s+i)u - (-1)^t b(s+t-i)a(p+i)u)
    with unshifted indices. Modes outside the sector of their module vanish.
    """
    p, s, t = to_fraction(p), to_fraction(s), to_fraction(t)
    wt_a, wt_b = a.weight(profile), b.weight(profile)
    level = u.max_level()

    def act(x, index, w):
        return unshifted_mode_apply(x, index, w, profile, sign)

    lhs = FockVector.zero()
    for i in range(floor(wt_a + wt_b - 1 - t) + 1):
        coeff = gen_binomial(p, i)
        if not coeff:
            continue
        product = act(a, t + i, b)
        if product:
            lhs = lhs + act(product, p + s - i, u) * coeff

    rhs = FockVector.zero()
    last = floor(max(level + wt_b - 1 - s, level + wt_a - 1 - p))
    for i in range(last + 1):
        coeff = (-1) ** i * gen_binomial(t, i)
        if not coeff:
            continue
        first = act(a, p + t - i, act(b, s + i, u))
        second = act(b, s + t - i, act(a, p + i, u))
        if second and t.denominator != 1:
            raise ValueError(f"(-1)^t is undefined for t={t} with a nonzero term")
        sign_t = (-1 if t.numerator % 2 else 1) if t.denominator == 1 else 0
        rhs = rhs + (first - second * sign_t) * coeff
    return lhs, rhs


def borcherds_check(
    a: FockVector,
    b: FockVector,
    u: FockVector,
    p,
    s,
    t,
    profile: GeneratorProfile = H_PROFILE,
    sign: int = DEFAULT_DELTA_SIGN,
) -> bool:
    lhs, rhs = borcherds_sides(a, b, u, p, s, t, profile, sign)
    debug_print(f"borcherds (p,s,t)=({p},{s},{t}): lhs={lhs!r} rhs={rhs!r}")
    return lhs == rhs

# EOF
