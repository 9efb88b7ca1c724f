#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 09:12:40 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/exact_math.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/exact_math.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

"""
Exact arithmetic substrate.

Functionality:
    - Generalized binomials and the odd polynomial constants c_i
    - Univariate polynomials and quotient rings C[t]/(f) over the rationals
    - Truncated bivariate series (the twisted-sector contraction constants)
    - Exact span membership through fraction-free row reduction
Input:
    Python ints, fractions.Fraction, sympy rationals
Output:
    fractions.Fraction scalars, UniPoly / QuotientRingElem / BiSeries values
Prerequisites:
    sympy
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import sympy
from sympy import QQ, Poly, Symbol
from sympy.polys.matrices import DomainMatrix
from sympy.polys.ring_series import rs_log, rs_nth_root
from sympy.polys.rings import ring

from .debug_print import debug_print

T = Symbol("t")
_N = Symbol("n")


class ExactMathError(ArithmeticError):
    """Raised when an internal exactness check fails."""


def to_fraction(value) -> Fraction:
    """Convert ints, Fractions, sympy Rationals and QQ elements to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ExactMathError(f"Floats are not exact: {value!r}")
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, sympy.Basic):
        if not value.is_Rational:
            raise ExactMathError(f"Not a rational number: {value}")
        return Fraction(int(value.p), int(value.q))
    # PythonMPQ and gmpy2.mpq
    return Fraction(int(value.numerator), int(value.denominator))


def to_qq(value):
    value = to_fraction(value)
    return QQ(value.numerator, value.denominator)


def gen_binomial(x, m: int) -> Fraction:
    """
    Generalized binomial coefficient.

    Parameters
    ----------
    x : Fraction or int
        Upper argument, any rational
    m : int
        Lower argument, m >= 0

    Returns
    -------
    Fraction
        x(x-1)...(x-m+1)/m!
    """
    if m < 0:
        raise ValueError(f"gen_binomial needs m >= 0, got {m}")
    return _gen_binomial(to_fraction(x), m)


@lru_cache(maxsize=None)
def _gen_binomial(x: Fraction, m: int) -> Fraction:
    numerator = Fraction(1)
    for j in range(m):
        numerator *= x - j
    return numerator / factorial(m)


def binomial_expr(upper, i: int):
    """C(upper, i) as a sympy expression, polynomial in the symbols of upper."""
    result = sympy.Integer(1)
    for j in range(i):
        result *= upper - j
    return sympy.expand(result / sympy.factorial(i))


################################################################################
# Polynomials
################################################################################


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial over Q, coefficients indexed by degree."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [to_fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        # -1 marks the zero polynomial
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __call__(self, x):
        value = 0
        for coeff in reversed(self.coefficients):
            value = value * x + coeff
        return value

    def to_poly(self, symbol: Symbol = T) -> Poly:
        terms = [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coefficients)]
        return Poly(terms or [0], symbol, domain=QQ)

    @classmethod
    def from_poly(cls, poly) -> "UniPoly":
        if not isinstance(poly, Poly):
            poly = Poly(poly, T, domain=QQ)
        return cls(tuple(to_fraction(c) for c in reversed(poly.all_coeffs())))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        poly = Poly(1, T, domain=QQ)
        for root in roots:
            root = to_fraction(root)
            poly *= Poly(T - sympy.Rational(root.numerator, root.denominator), T, domain=QQ)
        return cls.from_poly(poly)

    def reflected(self) -> "UniPoly":
        """f(-t)"""
        return UniPoly(tuple(c if d % 2 == 0 else -c for d, c in enumerate(self.coefficients)))

    def __str__(self):
        return str(self.to_poly().as_expr())


def odd_polynomial(r: int) -> Poly:
    """(-1)^{r-1} 2r C(n+r-1, r-1) C(n, r) as a polynomial in n."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    poly = Poly((-1) ** (r - 1) * 2 * r, _N, domain=QQ)
    for j in range(1, r):
        poly *= Poly(_N + j, _N, domain=QQ)
    for j in range(r):
        poly *= Poly(_N - j, _N, domain=QQ)
    return poly.exquo_ground(factorial(r - 1) * factorial(r))


@lru_cache(maxsize=None)
def _odd_poly_coeffs(r: int) -> Tuple[Fraction, ...]:
    terms = {deg: to_fraction(c) for (deg,), c in odd_polynomial(r).terms()}
    even = {deg: c for deg, c in terms.items() if deg % 2 == 0 and c != 0}
    if even:
        raise ExactMathError(f"Even-degree terms in the odd polynomial for r={r}: {even}")
    coeffs = tuple(terms.get(2 * i - 1, Fraction(0)) for i in range(1, r + 1))
    if coeffs[-1] == 0:
        raise ExactMathError(f"Leading constant vanishes for r={r}")
    return coeffs


def odd_poly_coeffs(r: int) -> List[Fraction]:
    """
    Constants c_1, ..., c_r with (-1)^{r-1} 2r C(n+r-1,r-1) C(n,r) = sum_i c_i n^{2i-1}.

    Parameters
    ----------
    r : int
        Positive integer

    Returns
    -------
    list of Fraction
        The r constants, c_r nonzero
    """
    return list(_odd_poly_coeffs(r))


################################################################################
# Quotient rings C[t]/(f)
################################################################################


class QuotientRing:
    """The ring Q[t]/(f) for a monic f of degree >= 1."""

    def __init__(self, modulus):
        if isinstance(modulus, UniPoly):
            modulus = modulus.to_poly()
        elif not isinstance(modulus, Poly):
            modulus = Poly(modulus, T, domain=QQ)
        if modulus.degree() < 1:
            raise ValueError(f"Modulus must have degree >= 1, got {modulus}")
        if modulus.LC() != 1:
            modulus = modulus.monic()
        self.modulus = modulus
        self.key = tuple(modulus.all_coeffs())

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and self.key == other.key

    def __hash__(self):
        return hash(("QuotientRing", self.key))

    def __repr__(self):
        return f"QuotientRing({self.modulus.as_expr()})"

    @property
    def dimension(self) -> int:
        return self.modulus.degree()

    def element(self, poly) -> "QuotientRingElem":
        if not isinstance(poly, Poly):
            poly = Poly(poly, T, domain=QQ)
        return QuotientRingElem(poly, self)

    def scalar(self, value) -> "QuotientRingElem":
        value = to_fraction(value)
        return self.element(Poly(sympy.Rational(value.numerator, value.denominator), T, domain=QQ))

    @property
    def one(self) -> "QuotientRingElem":
        return self.scalar(1)

    @property
    def gen(self) -> "QuotientRingElem":
        return self.element(Poly(T, T, domain=QQ))

    def single_root(self) -> Optional[Fraction]:
        """c when the modulus is (t-c)^m with c rational, else None."""
        roots = sympy.roots(self.modulus, filter="Q")
        if len(roots) == 1:
            (root, multiplicity), = roots.items()
            if multiplicity == self.dimension:
                return to_fraction(root)
        return None

    def canonical_basis(self) -> List["QuotientRingElem"]:
        """(t-c)^j when the modulus is (t-c)^m, otherwise t^j."""
        root = self.single_root()
        shift = 0 if root is None else root
        base = self.gen - self.scalar(shift)
        basis = [self.one]
        for _ in range(1, self.dimension):
            basis.append(basis[-1] * base)
        return basis

    def coordinates(self, elem: "QuotientRingElem", basis=None) -> List[Fraction]:
        """Coordinates of elem over a basis (canonical_basis by default)."""
        basis = basis or self.canonical_basis()
        vectors = [dict(enumerate(b.coefficients())) for b in basis]
        target = dict(enumerate(elem.coefficients()))
        combination = solve_in_span(target, vectors)
        if combination is None:
            raise ExactMathError(f"{elem} is outside the span of the basis")
        return [combination.get(j, Fraction(0)) for j in range(len(basis))]


class QuotientRingElem:
    """An element of Q[t]/(f), stored as the reduced representative."""

    __slots__ = ("rep", "ring", "_key")

    def __init__(self, rep: Poly, ring_: QuotientRing):
        self.ring = ring_
        self.rep = rep.rem(ring_.modulus)
        self._key = tuple(self.rep.all_coeffs())

    def coefficients(self) -> List[Fraction]:
        """Coefficients indexed by degree, padded to the ring dimension."""
        coeffs = [to_fraction(c) for c in reversed(self.rep.all_coeffs())]
        coeffs += [Fraction(0)] * (self.ring.dimension - len(coeffs))
        return coeffs

    def _lift(self, other):
        if isinstance(other, QuotientRingElem):
            if other.ring != self.ring:
                raise ValueError(f"Mixed quotient rings {self.ring} and {other.ring}")
            return other.rep
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Poly(sympy.Rational(other.numerator, other.denominator), T, domain=QQ)
        return None

    def __add__(self, other):
        rep = self._lift(other)
        if rep is None:
            return NotImplemented
        return QuotientRingElem(self.rep + rep, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._lift(other)
        if rep is None:
            return NotImplemented
        return QuotientRingElem(self.rep - rep, self.ring)

    def __rsub__(self, other):
        rep = self._lift(other)
        if rep is None:
            return NotImplemented
        return QuotientRingElem(rep - self.rep, self.ring)

    def __mul__(self, other):
        rep = self._lift(other)
        if rep is None:
            return NotImplemented
        return QuotientRingElem(self.rep * rep, self.ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return self * (1 / other)
        return NotImplemented

    def __neg__(self):
        return QuotientRingElem(-self.rep, self.ring)

    def __pow__(self, exponent: int):
        result = self.ring.one
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self):
        return not self.rep.is_zero

    def __eq__(self, other):
        rep = self._lift(other)
        if rep is None:
            return NotImplemented
        return (self.rep - rep).rem(self.ring.modulus).is_zero

    def __hash__(self):
        return hash((self.ring.key, self._key))

    def reflected(self) -> "QuotientRingElem":
        """The image under t -> -t."""
        return QuotientRingElem(self.rep.compose(Poly(-T, T, domain=QQ)), self.ring)

    def __repr__(self):
        return f"[{self.rep.as_expr()}]"

    __str__ = __repr__


################################################################################
# Truncated bivariate series
################################################################################


@dataclass(frozen=True)
class BiSeries:
    """Bivariate power series in x, y truncated at total degree <= order."""

    order: int
    coeffs: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        kept = {
            (m, n): to_fraction(c)
            for (m, n), c in self.coeffs.items()
            if m + n <= self.order and c != 0
        }
        object.__setattr__(self, "coeffs", kept)

    def coefficient(self, m: int, n: int) -> Fraction:
        return self.coeffs.get((m, n), Fraction(0))

    def __add__(self, other: "BiSeries") -> "BiSeries":
        order = min(self.order, other.order)
        total = dict(self.coeffs)
        for key, c in other.coeffs.items():
            total[key] = total.get(key, Fraction(0)) + c
        return BiSeries(order, total)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        order = min(self.order, other.order)
        product: Dict[Tuple[int, int], Fraction] = {}
        for (m1, n1), c1 in self.coeffs.items():
            for (m2, n2), c2 in other.coeffs.items():
                if m1 + m2 + n1 + n2 <= order:
                    key = (m1 + m2, n1 + n2)
                    product[key] = product.get(key, Fraction(0)) + c1 * c2
        return BiSeries(order, product)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.order, {k: -c for k, c in self.coeffs.items()})

    def log(self) -> "BiSeries":
        """log of a series with constant term 1, truncated at the same order."""
        if self.coefficient(0, 0) != 1:
            raise ExactMathError("log needs constant term 1")
        R, x, y, tau = ring("x,y,tau", QQ)
        graded = R(0)
        for (m, n), c in self.coeffs.items():
            graded += to_qq(c) * x**m * y**n * tau ** (m + n)
        return self._from_graded(rs_log(graded, tau, self.order + 1), self.order)

    def is_symmetric(self) -> bool:
        return all(self.coefficient(n, m) == c for (m, n), c in self.coeffs.items())

    @staticmethod
    def _from_graded(element, order: int) -> "BiSeries":
        coeffs = {}
        for (m, n, _), c in element.items():
            coeffs[(m, n)] = to_fraction(c)
        return BiSeries(order, coeffs)


@lru_cache(maxsize=None)
def delta_series(order: int) -> BiSeries:
    """
    -log((sqrt(1+x) + sqrt(1+y))/2) truncated at total degree <= order.

    The coefficient at x^m y^n is the contraction constant c_mn of the
    twisted-sector operator Delta_z.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    # tau tracks total degree so the univariate series routines apply
    R, x, y, tau = ring("x,y,tau", QQ)
    prec = order + 1
    sqrt_x = rs_nth_root(1 + x * tau, 2, tau, prec)
    sqrt_y = rs_nth_root(1 + y * tau, 2, tau, prec)
    half_sum = (sqrt_x + sqrt_y) * QQ(1, 2)
    series = -rs_log(half_sum, tau, prec)
    debug_print(f"delta_series: computed order {order}")
    return BiSeries._from_graded(series, order)


################################################################################
# Linear algebra
################################################################################


def solve_in_span(
    target: Mapping[Hashable, object],
    generators: Sequence[Mapping[Hashable, object]],
) -> Optional[Dict[int, Fraction]]:
    """
    Express target as a rational combination of generators.

    Parameters
    ----------
    target : mapping
        Sparse vector, coordinate -> rational
    generators : sequence of mappings
        Sparse vectors over the same coordinates

    Returns
    -------
    dict or None
        generator index -> coefficient (nonzero entries only), or None
        when target is outside the span
    """
    if not any(target.values()):
        return {}
    index: Dict[Hashable, int] = {}
    columns = list(generators) + [target]
    rows: Dict[int, Dict[int, object]] = {}
    for col, vector in enumerate(columns):
        for key, value in vector.items():
            if not value:
                continue
            row = index.setdefault(key, len(index))
            rows.setdefault(row, {})[col] = to_qq(value)
    last = len(columns) - 1
    matrix = DomainMatrix(rows, (len(index), len(columns)), QQ)
    _, numerators = matrix.clear_denoms(convert=True)
    reduced, _, pivots = numerators.rref_den()
    if last in pivots:
        return None
    entries = reduced.to_sdm()
    combination = {}
    for row, col in enumerate(pivots):
        values = entries.get(row, {})
        value = values.get(last)
        if value:
            combination[col] = Fraction(int(value), int(values[col]))
    return combination


def combine(
    combination: Mapping[int, Fraction],
    generators: Sequence[Mapping[Hashable, object]],
) -> Dict[Hashable, Fraction]:
    """Evaluate sum_i c_i g_i as a sparse vector (zero entries dropped)."""
    total: Dict[Hashable, Fraction] = {}
    for i, coeff in combination.items():
        for key, value in generators[i].items():
            total[key] = total.get(key, 0) + coeff * value
    return {k: v for k, v in total.items() if v}


def rational_matrix(rows: Sequence[Sequence[Fraction]]) -> DomainMatrix:
    n = len(rows)
    m = len(rows[0]) if rows else 0
    return DomainMatrix([[to_qq(x) for x in row] for row in rows], (n, m), QQ)


def matrix_to_fractions(matrix: DomainMatrix) -> List[List[Fraction]]:
    return [[to_fraction(x) for x in row] for row in matrix.to_list()]

# EOF
