#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 09:40:03 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/FockSpace.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/FockSpace.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

"""
States of the rank-one Fock spaces.

Functionality:
    - Ground labels: momentum states e^{c beta} and the twisted vacuum 1_tw
    - Monomials h(-n_1)...h(-n_s) over a ground, mode indices stored doubled
    - Finite linear combinations with rational or quotient-ring coefficients
    - Grading, the involution theta, canonical text serialization
    - Basis enumeration by partitions
Input:
    Mode indices as ints / Fractions, coefficients as Fractions or QuotientRingElem
Output:
    Immutable FockMonomial / FockVector values
Prerequisites:
    sympy
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from sympy.utilities.iterables import partitions

from .exact_math import QuotientRingElem, to_fraction

TWISTED_GROUND_WEIGHT = Fraction(1, 16)


class FockError(ValueError):
    """Base error for malformed Fock states."""


class FockParseError(FockError):
    """Raised when canonical text cannot be parsed."""


class SectorMismatchError(FockError):
    """Raised when untwisted and twisted states are mixed."""


class NonHomogeneousError(FockError):
    """Raised when an operation needs a homogeneous vector."""


################################################################################
# Profiles and ground labels
################################################################################


@dataclass(frozen=True)
class GeneratorProfile:
    """The Heisenberg generator in use: its norm (beta, beta) and a label."""

    norm: Fraction = Fraction(1)
    label: str = "h"

    def __post_init__(self):
        object.__setattr__(self, "norm", to_fraction(self.norm))
        if self.norm <= 0:
            raise FockError(f"Generator norm must be positive, got {self.norm}")

    @classmethod
    def lattice(cls, k: int) -> "GeneratorProfile":
        """The generator alpha of the rank-one lattice with (alpha, alpha) = 2k."""
        if k < 1:
            raise FockError(f"Lattice parameter k must be >= 1, got {k}")
        return cls(Fraction(2 * k), "alpha")

    @property
    def k(self) -> Fraction:
        return self.norm / 2


H_PROFILE = GeneratorProfile()


@dataclass(frozen=True)
class Momentum:
    """The ground state e^{c beta}; c is a Fraction or a quotient-ring element."""

    c: object = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.c, QuotientRingElem):
            object.__setattr__(self, "c", to_fraction(self.c))

    @property
    def twisted(self) -> bool:
        return False

    def negated(self) -> "Momentum":
        if isinstance(self.c, QuotientRingElem):
            # h(0) = t is odd under theta; the ring side carries the sign
            return self
        return Momentum(-self.c)

    def shifted(self, m) -> "Momentum":
        return Momentum(self.c + m)

    def __str__(self):
        return f"e^{self.c}"


@dataclass(frozen=True)
class TwistedVacuum:
    """The lowest-weight state 1_tw of the twisted module."""

    @property
    def twisted(self) -> bool:
        return True

    def negated(self) -> "TwistedVacuum":
        return self

    def __str__(self):
        return "tw"


Ground = Union[Momentum, TwistedVacuum]
VACUUM = Momentum(Fraction(0))
TW = TwistedVacuum()


################################################################################
# Monomials
################################################################################


def doubled(index) -> int:
    """2*index as an int; index must lie in (1/2)Z."""
    value = 2 * to_fraction(index)
    if value.denominator != 1:
        raise FockError(f"Mode index {index} is not in (1/2)Z")
    return int(value)


def format_index(index2: int) -> str:
    return str(index2 // 2) if index2 % 2 == 0 else f"{index2}/2"


@dataclass(frozen=True)
class FockMonomial:
    """h(-n_1)...h(-n_s) applied to a ground; modes holds 2n_i in descending order."""

    modes: Tuple[int, ...] = ()
    ground: Ground = VACUUM

    def __post_init__(self):
        modes = tuple(int(d) for d in self.modes)
        object.__setattr__(self, "modes", modes)
        if any(d <= 0 for d in modes):
            raise FockError(f"Creation indices must be positive: {modes}")
        if any(modes[i] < modes[i + 1] for i in range(len(modes) - 1)):
            raise FockError(f"Modes must be sorted descending: {modes}")
        parity = 1 if self.ground.twisted else 0
        if any(d % 2 != parity for d in modes):
            sector = "twisted" if self.ground.twisted else "untwisted"
            raise SectorMismatchError(
                f"Modes {[format_index(d) for d in modes]} do not belong to the {sector} sector"
            )

    @classmethod
    def create(cls, modes2: Iterable[int], ground: Ground = VACUUM) -> "FockMonomial":
        """Build from doubled indices in any order."""
        return cls(tuple(sorted(modes2, reverse=True)), ground)

    @property
    def twisted(self) -> bool:
        return self.ground.twisted

    @property
    def level2(self) -> int:
        return sum(self.modes)

    @property
    def level(self) -> Fraction:
        return Fraction(self.level2, 2)

    @property
    def mode_count(self) -> int:
        return len(self.modes)

    def multiplicity(self, index2: int) -> int:
        return self.modes.count(index2)

    def with_mode(self, index2: int) -> "FockMonomial":
        return FockMonomial.create(self.modes + (index2,), self.ground)

    def without_mode(self, index2: int) -> "FockMonomial":
        modes = list(self.modes)
        modes.remove(index2)
        return FockMonomial(tuple(modes), self.ground)

    def with_ground(self, ground: Ground) -> "FockMonomial":
        return FockMonomial(self.modes, ground)

    def __str__(self):
        modes = ",".join(format_index(d) for d in self.modes)
        return f"[{modes}] @ {self.ground}"


def monomial(*indices, ground: Ground = VACUUM) -> FockMonomial:
    """h(-i_1)...h(-i_s) ground, indices given undoubled (ints or Fractions)."""
    return FockMonomial.create((doubled(i) for i in indices), ground)


def weight(m: FockMonomial, profile: GeneratorProfile = H_PROFILE):
    """
    L(0)-weight of a monomial.

    Parameters
    ----------
    m : FockMonomial
        Canonical monomial
    profile : GeneratorProfile
        Supplies the norm N of the generator

    Returns
    -------
    Fraction
        sum n_i + c^2 N / 2 over e^{c beta}; sum n_i + 1/16 over 1_tw.
        A quotient-ring element when c is one.
    """
    if m.twisted:
        return m.level + TWISTED_GROUND_WEIGHT
    c = m.ground.c
    return m.level + c * c * profile.norm / 2


################################################################################
# Vectors
################################################################################


def _is_zero(value) -> bool:
    if isinstance(value, QuotientRingElem):
        return not value
    return value == 0


def _coerce(value):
    if isinstance(value, QuotientRingElem):
        return value
    return to_fraction(value)


class FockVector(Mapping):
    """A finite linear combination of monomials from one sector."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[FockMonomial, object]] = None):
        kept: Dict[FockMonomial, object] = {}
        sectors = set()
        for mono, coeff in (terms or {}).items():
            if not isinstance(mono, FockMonomial):
                raise FockError(f"Not a monomial: {mono!r}")
            coeff = _coerce(coeff)
            if _is_zero(coeff):
                continue
            kept[mono] = coeff
            sectors.add(mono.twisted)
        if len(sectors) > 1:
            raise SectorMismatchError("A FockVector cannot mix untwisted and twisted monomials")
        self._terms = kept
        self._hash = None

    @classmethod
    def from_monomial(cls, mono: FockMonomial, coeff=1) -> "FockVector":
        return cls({mono: coeff})

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    @classmethod
    def accumulate(cls, pairs: Iterable[Tuple[FockMonomial, object]]) -> "FockVector":
        total: Dict[FockMonomial, object] = {}
        for mono, coeff in pairs:
            total[mono] = total[mono] + coeff if mono in total else coeff
        return cls(total)

    # Mapping protocol
    def __getitem__(self, mono):
        return self._terms[mono]

    def __iter__(self) -> Iterator[FockMonomial]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, mono: FockMonomial):
        return self._terms.get(mono, Fraction(0))

    @property
    def twisted(self) -> Optional[bool]:
        for mono in self._terms:
            return mono.twisted
        return None

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, FockVector):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Linear structure
    def __add__(self, other: "FockVector") -> "FockVector":
        if not isinstance(other, FockVector):
            return NotImplemented
        return FockVector.accumulate(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: "FockVector") -> "FockVector":
        if not isinstance(other, FockVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "FockVector":
        return FockVector({m: -c for m, c in self._terms.items()})

    def __mul__(self, scalar) -> "FockVector":
        if isinstance(scalar, FockVector):
            return NotImplemented
        scalar = _coerce(scalar)
        return FockVector({m: c * scalar for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "FockVector":
        return self * (1 / to_fraction(scalar))

    # Grading
    def weight_components(self, profile: GeneratorProfile = H_PROFILE) -> Dict[object, "FockVector"]:
        parts: Dict[object, Dict[FockMonomial, object]] = {}
        for mono, coeff in self._terms.items():
            parts.setdefault(weight(mono, profile), {})[mono] = coeff
        return {w: FockVector(terms) for w, terms in parts.items()}

    def is_homogeneous(self, profile: GeneratorProfile = H_PROFILE) -> bool:
        return len(self.weight_components(profile)) <= 1

    def weight(self, profile: GeneratorProfile = H_PROFILE):
        components = self.weight_components(profile)
        if len(components) != 1:
            raise NonHomogeneousError(f"Vector is not homogeneous (weights {sorted(map(str, components))})")
        return next(iter(components))

    def max_level(self) -> Fraction:
        return max((m.level for m in self._terms), default=Fraction(0))

    def truncated(self, max_level) -> "FockVector":
        return FockVector({m: c for m, c in self._terms.items() if m.level <= max_level})

    def scalar_multiple_of(self, other: "FockVector") -> Optional[object]:
        """lambda with self == lambda * other, or None."""
        if not other:
            return None
        if not self:
            return Fraction(0)
        mono = next(iter(other))
        ratio = self.coefficient(mono) / other[mono]
        return ratio if self == other * ratio else None

    def __repr__(self):
        try:
            return f"FockVector({serialize(self)!r})"
        except FockError:
            return f"FockVector({dict(self._terms)!r})"


def vec(*indices, coeff=1, ground: Ground = VACUUM) -> FockVector:
    """Shorthand for a single scaled monomial."""
    return FockVector.from_monomial(monomial(*indices, ground=ground), coeff)


def vacuum(ground: Ground = VACUUM) -> FockVector:
    return FockVector.from_monomial(FockMonomial((), ground))


################################################################################
# Theta
################################################################################


def theta(v: FockVector) -> FockVector:
    """
    The order-two automorphism: h -> -h, e^{c beta} -> e^{-c beta}.

    Quotient-ring coefficients are sent through t -> -t.
    """
    result = {}
    for mono, coeff in v.items():
        sign = -1 if mono.mode_count % 2 else 1
        if isinstance(coeff, QuotientRingElem):
            coeff = coeff.reflected()
        target = mono.with_ground(mono.ground.negated())
        result[target] = result.get(target, 0) + sign * coeff
    return FockVector(result)


def is_theta_fixed(v: FockVector) -> bool:
    return theta(v) == v


def to_lattice_generator(v: FockVector, k: int) -> FockVector:
    """
    Rewrite a momentum-zero vector given in h as one in alpha = sqrt(2k) h.

    Only even-degree monomials are converted; each pair of factors picks up 1/(2k).
    """
    result = {}
    for mono, coeff in v.items():
        if mono.twisted or mono.ground.c != 0:
            raise FockError("Only momentum-zero untwisted vectors convert between generators")
        if mono.mode_count % 2:
            raise FockError(f"Odd-degree monomial {mono} has no rational conversion")
        result[mono] = coeff / Fraction(2 * k) ** (mono.mode_count // 2)
    return FockVector(result)


################################################################################
# Serialization
################################################################################


def _sort_key(mono: FockMonomial):
    if mono.twisted:
        ground_key = (1, Fraction(0))
    else:
        ground_key = (0, mono.ground.c)
    return (weight(mono), mono.modes, ground_key)


def serialize(v: FockVector) -> str:
    """
    Canonical text: terms "coeff * [n_1,...,n_s] @ ground" joined by " + ".

    Terms are ordered by weight, then modes, then ground. Only rational
    coefficients and momenta serialize.
    """
    for mono, coeff in v.items():
        if isinstance(coeff, QuotientRingElem) or (
            not mono.twisted and isinstance(mono.ground.c, QuotientRingElem)
        ):
            raise FockError("Quotient-ring states have no canonical text form")
    return " + ".join(f"{v[mono]} * {mono}" for mono in sorted(v, key=_sort_key))


_TERM = re.compile(
    r"^\s*(-?\d+(?:/\d+)?)\s*\*\s*\[([^\]]*)\]\s*@\s*(tw|e\^(-?\d+(?:/\d+)?))\s*$"
)
_INDEX = re.compile(r"^\s*\d+(?:/\d+)?\s*$")


def parse(text: str) -> FockVector:
    """Inverse of serialize; rejects anything that is not canonical."""
    if not text.strip():
        return FockVector.zero()
    terms: Dict[FockMonomial, Fraction] = {}
    for chunk in text.split(" + "):
        match = _TERM.match(chunk)
        if match is None:
            raise FockParseError(f"Malformed term: {chunk!r}")
        coeff_text, modes_text, ground_text, momentum_text = match.groups()
        coeff = Fraction(coeff_text)
        if coeff == 0:
            raise FockParseError(f"Explicit zero coefficient in {chunk!r}")
        ground = TW if ground_text == "tw" else Momentum(Fraction(momentum_text))
        modes2 = []
        if modes_text.strip():
            for item in modes_text.split(","):
                if not _INDEX.match(item):
                    raise FockParseError(f"Malformed mode index {item!r} in {chunk!r}")
                try:
                    modes2.append(doubled(Fraction(item.strip())))
                except FockError as err:
                    raise FockParseError(str(err)) from err
        try:
            mono = FockMonomial(tuple(modes2), ground)
        except FockError as err:
            raise FockParseError(f"{err} in {chunk!r}") from err
        if mono in terms:
            raise FockParseError(f"Repeated monomial {mono}")
        terms[mono] = coeff
    try:
        return FockVector(terms)
    except SectorMismatchError as err:
        raise FockParseError(str(err)) from err


################################################################################
# Bases
################################################################################


@lru_cache(maxsize=None)
def _parts_of(total2: int, twisted: bool) -> Tuple[Tuple[int, ...], ...]:
    """Doubled-index multisets summing to total2."""
    if total2 == 0:
        return ((),)
    result = []
    if twisted:
        for part in partitions(total2):
            if all(p % 2 for p in part):
                result.append(tuple(sorted(
                    (p for p, mult in part.items() for _ in range(mult)), reverse=True
                )))
    elif total2 % 2 == 0:
        for part in partitions(total2 // 2):
            # partitions() reuses its dict
            part = dict(part)
            result.append(tuple(sorted(
                (2 * p for p, mult in part.items() for _ in range(mult)), reverse=True
            )))
    return tuple(sorted(result, reverse=True))


def basis(level, ground: Ground = VACUUM, even_only: bool = False) -> List[FockMonomial]:
    """
    Monomials of exactly the given level over a ground.

    Parameters
    ----------
    level : Fraction or int
        Sum of the creation indices
    ground : Ground
        Momentum or twisted vacuum
    even_only : bool
        Keep only monomials with an even number of factors
    """
    total2 = doubled(level)
    if total2 < 0:
        return []
    monos = [FockMonomial(modes, ground) for modes in _parts_of(total2, ground.twisted)]
    if even_only:
        monos = [m for m in monos if m.mode_count % 2 == 0]
    return monos


def levels_up_to(max_level, twisted: bool) -> List[Fraction]:
    step = Fraction(1, 2) if twisted else Fraction(1)
    values, level = [], Fraction(0)
    while level <= to_fraction(max_level):
        values.append(level)
        level += step
    return values


def basis_up_to(max_level, ground: Ground = VACUUM, even_only: bool = False) -> List[FockMonomial]:
    monos = []
    for level in levels_up_to(max_level, ground.twisted):
        monos.extend(basis(level, ground, even_only))
    return monos


def fixed_point_basis(max_level) -> List[FockMonomial]:
    """A basis of M(1)^+ up to the given weight."""
    return basis_up_to(max_level, VACUUM, even_only=True)

# EOF
