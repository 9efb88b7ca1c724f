#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 12:04:55 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/CommutatorLab.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/CommutatorLab.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

"""
Commutators among L(m), H~^4(n) and H~^6(n).

Functionality:
    - OPE products a(i)b inside the span S and their decomposition over
      the basis {1, L(-1)^j H^{2i}}
    - Commutators assembled from the commutativity formula
    - The displayed commutator families in symbolic form, with the readings
      that disagree with direct evaluation kept side by side
    - Pointwise verification on three sectors and central-term interpolation
Input:
    Relation ids, index ranges, weight cutoffs
Output:
    ModeExpression values, VerificationReport
Prerequisites:
    sympy
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from .FockSpace import FockVector, serialize, vacuum
from .HVectors import build_H, commutation_states
from .VertexEngine import DEFAULT_DELTA_SIGN, l_minus_one_power, mode_apply, unshifted_mode_apply
from .VerificationReport import VerificationReport
from .exact_math import binomial_expr, gen_binomial, solve_in_span, to_fraction

M, N = sympy.symbols("m n")

# Operator symbol -> r with underlying vector H^{2r}
SYMBOLS = {"L": 1, "H4": 2, "H6": 3}
NAMES = {r: sym for sym, r in SYMBOLS.items()}


class DecompositionError(ValueError):
    """Raised when a vector expected in S is outside the span."""


def symbol_vector(sym: str) -> FockVector:
    return build_H(SYMBOLS[sym]).vector


################################################################################
# OPE data
################################################################################


def ope_products(a: FockVector, b: FockVector) -> List[Tuple[int, FockVector]]:
    """a(i)b for 0 <= i <= wt a + wt b."""
    top = int(a.weight() + b.weight())
    return [(i, unshifted_mode_apply(a, i, b)) for i in range(top + 1)]


def decompose_S(v: FockVector) -> Dict[Tuple[int, int], Fraction]:
    """
    Coefficients of v over {1} and {L(-1)^j H^{2i}: 2i + j = weight}.

    Parameters
    ----------
    v : FockVector
        Element of S, possibly a sum of homogeneous pieces

    Returns
    -------
    dict
        (i, j) -> coefficient; (0, 0) stands for the vacuum
    """
    result: Dict[Tuple[int, int], Fraction] = {}
    for wt, component in v.weight_components().items():
        wt = int(wt)
        if wt == 0:
            labels = [(0, 0)]
            vectors = [vacuum()]
        else:
            labels = [(i, wt - 2 * i) for i in range(1, wt // 2 + 1)]
            vectors = [l_minus_one_power(build_H(i).vector, j) for i, j in labels]
        combination = solve_in_span(dict(component.items()), [dict(x.items()) for x in vectors])
        if combination is None:
            raise DecompositionError(f"{serialize(component)} is outside the span S")
        for index, coeff in combination.items():
            result[labels[index]] = result.get(labels[index], Fraction(0)) + coeff
    return {label: c for label, c in result.items() if c}


@dataclass(frozen=True)
class ModeExpression:
    """sum coeff * H~^{2r}(index) + central * id"""

    terms: Tuple[Tuple[Fraction, int, Fraction], ...] = ()
    central: Fraction = Fraction(0)

    def normalized(self) -> "ModeExpression":
        collected: Dict[Tuple[int, Fraction], Fraction] = {}
        for coeff, r, index in self.terms:
            collected[(r, index)] = collected.get((r, index), Fraction(0)) + coeff
        terms = sorted(((c, r, i) for (r, i), c in collected.items() if c), key=lambda t: (t[1], t[2]))
        return ModeExpression(tuple(terms), self.central)

    def __eq__(self, other):
        if not isinstance(other, ModeExpression):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return a.terms == b.terms and a.central == b.central

    def __hash__(self):
        n = self.normalized()
        return hash((n.terms, n.central))

    def apply(self, v: FockVector, sign: int = DEFAULT_DELTA_SIGN) -> FockVector:
        total = v * self.central
        for coeff, r, index in self.terms:
            total = total + mode_apply(build_H(r).vector, index, v, sign=sign) * coeff
        return total

    def __str__(self):
        parts = [f"{c}*{NAMES[r]}({i})" for c, r, i in self.normalized().terms]
        if self.central:
            parts.append(f"{self.central}*id")
        return " + ".join(parts) or "0"


def _shift_factor(weight: int, j: int, p: Fraction) -> Fraction:
    """(L(-1)^j x)~(p) = prod_{l<j} (-(wt x + l + p)) x~(p)"""
    factor = Fraction(1)
    for l in range(j):
        factor *= -(weight + l + p)
    return factor


@lru_cache(maxsize=None)
def _ope_decompositions(a_sym: str, b_sym: str):
    a, b = symbol_vector(a_sym), symbol_vector(b_sym)
    return tuple(
        (i, tuple(sorted(decompose_S(ab).items())))
        for i, ab in ope_products(a, b)
        if ab
    )


def predicted_commutator(a_sym: str, b_sym: str, m, n) -> ModeExpression:
    """
    [a~(m), b~(n)] = sum_i C(wt a + m - 1, i) (a(i)b)~(m+n), with each a(i)b
    rewritten over {1, L(-1)^j H^{2i}}.
    """
    m, n = to_fraction(m), to_fraction(n)
    wt_a = 2 * SYMBOLS[a_sym]
    p = m + n
    terms, central = [], Fraction(0)
    for i, decomposition in _ope_decompositions(a_sym, b_sym):
        binom = gen_binomial(wt_a + m - 1, i)
        if not binom:
            continue
        for (r, j), coeff in decomposition:
            if r == 0:
                if p == 0:
                    central += binom * coeff
                continue
            factor = _shift_factor(2 * r, j, p)
            if factor:
                terms.append((binom * coeff * factor, r, p))
    return ModeExpression(tuple(terms), central).normalized()


def direct_commutator(a_sym: str, m, b_sym: str, n, v: FockVector, sign: int = DEFAULT_DELTA_SIGN) -> FockVector:
    a, b = symbol_vector(a_sym), symbol_vector(b_sym)
    return (
        mode_apply(a, m, mode_apply(b, n, v, sign=sign), sign=sign)
        - mode_apply(b, n, mode_apply(a, m, v, sign=sign), sign=sign)
    )


################################################################################
# Displayed formulas
################################################################################


@dataclass(frozen=True)
class CommutatorFormula:
    """
    [left(left_index), right(right_index)] = sum coeff * target(index)
    + central * delta_{central_when, 0} id, every entry a sympy expression in m, n.
    """

    left: str
    right: str
    terms: Tuple[Tuple[sympy.Expr, str, sympy.Expr], ...]
    left_index: sympy.Expr = M
    right_index: sympy.Expr = N
    central: sympy.Expr = sympy.Integer(0)
    central_when: sympy.Expr = M + N
    variables: Tuple[sympy.Symbol, ...] = (M, N)

    def evaluate(self, m, n=0) -> ModeExpression:
        values = {M: sympy.Rational(str(to_fraction(m))), N: sympy.Rational(str(to_fraction(n)))}
        terms = []
        for coeff, sym, index in self.terms:
            c = to_fraction(sympy.sympify(coeff).subs(values))
            if c:
                terms.append((c, SYMBOLS[sym], to_fraction(sympy.sympify(index).subs(values))))
        central = Fraction(0)
        if to_fraction(sympy.sympify(self.central_when).subs(values)) == 0:
            central = to_fraction(sympy.sympify(self.central).subs(values))
        return ModeExpression(tuple(terms), central).normalized()

    def indices(self, m, n=0) -> Tuple[Fraction, Fraction]:
        values = {M: sympy.Rational(str(to_fraction(m))), N: sympy.Rational(str(to_fraction(n)))}
        return (
            to_fraction(sympy.sympify(self.left_index).subs(values)),
            to_fraction(sympy.sympify(self.right_index).subs(values)),
        )

    def specialized(self, m_expr, n_expr, negate: bool = False) -> Dict[Tuple[str, str], sympy.Expr]:
        """Terms after m -> m_expr, n -> n_expr, keyed by (target, index)."""
        sign = -1 if negate else 1
        result: Dict[Tuple[str, str], sympy.Expr] = {}
        for coeff, sym, index in self.terms:
            subs = {M: m_expr, N: n_expr}
            key = (sym, str(sympy.expand(sympy.sympify(index).subs(subs, simultaneous=True))))
            value = sign * sympy.sympify(coeff).subs(subs, simultaneous=True)
            result[key] = sympy.expand(result.get(key, 0) + value)
        return {k: v for k, v in result.items() if v != 0}


_R = sympy.Rational

LL = CommutatorFormula(
    "L", "L",
    ((M - N, "L", M + N),),
    central=(M**3 - M) / 12,
)

_L_H4_TERMS = (
    (3 * M - N, "H4", M + N),
    (M * (M + 1) * (3 * M + N) / 6, "L", M + N),
)
L_H4_STATED = CommutatorFormula("L", "H4", _L_H4_TERMS, central=-_R(5, 3) * binomial_expr(M + 1, 5))
L_H4_AMENDED = CommutatorFormula("L", "H4", _L_H4_TERMS, central=-_R(1, 3) * binomial_expr(M + 1, 5))

H4_H4 = CommutatorFormula(
    "H4", "H4",
    (
        (3 * (M - N), "H6", M + N),
        ((M - N) / 12 * (9 * M**2 - 2 * M * N + 9 * N**2 + 21 * M + 21 * N), "H4", M + N),
        (
            (M - N) / 180 * (
                3 * M**4 + 2 * M**3 * N + 3 * M**2 * N**2 + 2 * M * N**3 + 3 * N**4
                + 12 * M**3 + 11 * M**2 * N + 11 * M * N**2 + 12 * N**3
                + 3 * M**2 + 11 * M * N + 3 * N**2 - 18 * M - 18 * N
            ),
            "L", M + N,
        ),
    ),
    central=_R(5, 3) * binomial_expr(M + 3, 7),
)

L_H6 = CommutatorFormula(
    "L", "H6",
    (
        (5 * M - N, "H6", M + N),
        (3 * M * (M + 1) * (5 * M + N) / 4, "H4", M + N),
        (
            M * (M + 1) / 120 * (
                40 * M**3 + 56 * M**2 * N + 19 * M * N**2 + N**3
                + 40 * M**2 + 3 * M * N - 7 * N**2 - 20 * M - 12 * N
            ),
            "L", M + N,
        ),
    ),
    central=_R(1, 2) * binomial_expr(M + 1, 7),
)

# Single-index families: [X(fixed), Y(m)]
_SINGLE = dict(right_index=M, central_when=sympy.Integer(1), variables=(M,))

H4_ZERO_L = CommutatorFormula(
    "H4", "L",
    ((-3 * M, "H4", M), (-M**2 * (M + 1) / 2, "L", M)),
    left_index=sympy.Integer(0), **_SINGLE,
)

_H4_ZERO_H4_TERMS = ((-3 * M, "H6", M), (-M**2 * (3 * M + 7) / 4, "H4", M))
H4_ZERO_H4_STATED = CommutatorFormula(
    "H4", "H4",
    _H4_ZERO_H4_TERMS + ((-M**2 * (M - 1) * (M + 2) * (M + 3) / 180, "L", M),),
    left_index=sympy.Integer(0), **_SINGLE,
)
H4_ZERO_H4_AMENDED = CommutatorFormula(
    "H4", "H4",
    _H4_ZERO_H4_TERMS + ((-M**2 * (M - 1) * (M + 2) * (M + 3) / 60, "L", M),),
    left_index=sympy.Integer(0), **_SINGLE,
)

H6_ZERO_L = CommutatorFormula(
    "H6", "L",
    (
        (-5 * M, "H6", M),
        (-15 * M**2 * (M + 1) / 4, "H4", M),
        (-M**2 * (M + 1) * (2 * M**2 + 2 * M - 1) / 6, "L", M),
    ),
    left_index=sympy.Integer(0), **_SINGLE,
)

_H4_ONE_L_LOWER = (-M * (M + 1) * (3 * M + 1) / 6, "L", M + 1)
H4_ONE_L_STATED = CommutatorFormula(
    "H4", "L",
    ((-(3 * M - 1), "H4", sympy.Integer(2)), _H4_ONE_L_LOWER),
    left_index=sympy.Integer(1), **_SINGLE,
)
H4_ONE_L_AMENDED = CommutatorFormula(
    "H4", "L",
    ((-(3 * M - 1), "H4", M + 1), _H4_ONE_L_LOWER),
    left_index=sympy.Integer(1), **_SINGLE,
)

# relation id -> reading -> formula
RELATIONS: Dict[str, Dict[str, CommutatorFormula]] = {
    "L-L": {"stated": LL},
    "L-H4": {"stated": L_H4_STATED, "amended": L_H4_AMENDED},
    "H4-H4": {"stated": H4_H4},
    "L-H6": {"stated": L_H6},
    "H4(0)-L": {"stated": H4_ZERO_L},
    "H4(0)-H4": {"stated": H4_ZERO_H4_STATED, "amended": H4_ZERO_H4_AMENDED},
    "H6(0)-L": {"stated": H6_ZERO_L},
    "H4(1)-L": {"stated": H4_ONE_L_STATED, "amended": H4_ONE_L_AMENDED},
}

# single-index family -> (two-index family, m image, n image, negate)
SPECIALIZATIONS = {
    "H4(0)-L": ("L-H4", M, sympy.Integer(0), True),
    "H4(0)-H4": ("H4-H4", sympy.Integer(0), M, False),
    "H6(0)-L": ("L-H6", M, sympy.Integer(0), True),
    "H4(1)-L": ("L-H4", M, sympy.Integer(1), True),
}


################################################################################
# Verification
################################################################################


def _index_pairs(formula: CommutatorFormula, index_range: int):
    values = range(-index_range, index_range + 1)
    if len(formula.variables) == 1:
        return [(m, 0) for m in values]
    return list(product(values, values))


def verify_specializations() -> VerificationReport:
    """Single-index families as polynomial specializations of the two-index ones."""
    report = VerificationReport("specializations")
    for rel_id, (parent_id, m_expr, n_expr, negate) in SPECIALIZATIONS.items():
        parent = RELATIONS[parent_id]["stated"]
        expected = parent.specialized(m_expr, n_expr, negate)
        for reading, formula in RELATIONS[rel_id].items():
            got = formula.specialized(M, N)
            difference = {
                str(key): str(sympy.expand(got.get(key, 0) - expected.get(key, 0)))
                for key in set(got) | set(expected)
                if sympy.expand(got.get(key, 0) - expected.get(key, 0)) != 0
            }
            report.add(f"{rel_id}/{reading}", not difference, {"difference": difference} if difference else None, parent=parent_id)
    return report


def central_polynomial(a_sym: str, b_sym: str, samples: Sequence[int] = tuple(range(-4, 5))) -> sympy.Expr:
    """The central term of [a~(m), b~(-m)] interpolated from sampled m."""
    points = [(m, sympy.Rational(str(predicted_commutator(a_sym, b_sym, m, -m).central))) for m in samples]
    return sympy.expand(sympy.interpolate(points, M))


def verify_appendix(
    relation_id: str,
    index_range: int = 4,
    max_weight=6,
    momenta: Sequence = (0, Fraction(3, 2)),
    twisted: bool = True,
    sign: int = DEFAULT_DELTA_SIGN,
) -> VerificationReport:
    """
    Every reading of a commutator family against direct double application
    on basis states of three sectors, the commutativity-formula assembly
    against the same direct values, and the central polynomial.
    """
    readings = RELATIONS[relation_id]
    some = next(iter(readings.values()))
    states = commutation_states(max_weight, momenta, twisted)
    report = VerificationReport(
        f"appendix-{relation_id}",
        {"relation": relation_id, "range": index_range, "max_weight": max_weight,
         "momenta": list(momenta), "twisted": twisted, "delta_sign": sign},
    )
    witnesses: Dict[str, Optional[dict]] = {reading: None for reading in readings}
    assembly_witness = None
    checks = 0
    for m, n in _index_pairs(some, index_range):
        left_index, right_index = some.indices(m, n)
        predicted = predicted_commutator(some.left, some.right, left_index, right_index)
        expressions = {reading: f.evaluate(m, n) for reading, f in readings.items()}
        for v in states:
            direct = direct_commutator(some.left, left_index, some.right, right_index, v, sign)
            checks += 1
            if assembly_witness is None and predicted.apply(v, sign) != direct:
                assembly_witness = {"m": m, "n": n, "state": serialize(v), "direct": serialize(direct), "assembled": str(predicted)}
            for reading, expression in expressions.items():
                if witnesses[reading] is None:
                    got = expression.apply(v, sign)
                    if got != direct:
                        witnesses[reading] = {
                            "m": m, "n": n, "state": serialize(v),
                            "direct": serialize(direct), "formula": serialize(got),
                        }
    for reading, witness in witnesses.items():
        report.add(f"{relation_id}/{reading}", witness is None, witness, checks=checks)
    report.add(f"{relation_id}/assembly", assembly_witness is None, assembly_witness, checks=checks)

    if len(some.variables) == 2 and some.left_index == M and some.right_index == N:
        interpolated = central_polynomial(some.left, some.right)
        for reading, formula in readings.items():
            difference = sympy.expand(interpolated - sympy.expand(formula.central))
            report.add(
                f"{relation_id}/{reading}/central",
                difference == 0,
                None if difference == 0 else {"interpolated": str(interpolated), "formula": str(sympy.expand(formula.central))},
            )
    return report


def surviving_readings(report: VerificationReport, relation_id: str) -> List[str]:
    """Readings whose pointwise case and central case (if any) both pass."""
    survivors = []
    for reading in RELATIONS[relation_id]:
        ids = [f"{relation_id}/{reading}", f"{relation_id}/{reading}/central"]
        cases = [c for c in report.cases if c.case_id in ids]
        if cases and all(c.passed for c in cases):
            survivors.append(reading)
    return survivors

# EOF
