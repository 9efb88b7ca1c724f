#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 14:03:18 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/ExtensionLab.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/ExtensionLab.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

"""
The weak module M(1)[t] and its quotients M(1)[t]/(f).

Functionality:
    - States over C[t]/(f) with h(0) acting as multiplication by t
    - Matrices of L(0) and H~^{2r}(0) on generalized weight spaces
    - Jordan-block and splitting checks, theta-sector mixing identities
Input:
    Monic moduli f (UniPoly, sympy Poly or expression in t)
Output:
    JordanResult, VerificationReport
Prerequisites:
    sympy
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy
from sympy import QQ, Poly
from sympy.polys.matrices import DomainMatrix

from .FockSpace import (
    FockError,
    FockMonomial,
    FockVector,
    Momentum,
    NonHomogeneousError,
    basis,
    monomial,
    theta,
    vec,
)
from .HVectors import build_H, h_eigenvalue
from .VertexEngine import conformal_vector, heisenberg, mode_apply, virasoro
from .VerificationReport import VerificationReport
from .exact_math import (
    T,
    QuotientRing,
    QuotientRingElem,
    UniPoly,
    matrix_to_fractions,
    rational_matrix,
    solve_in_span,
    to_fraction,
)
from .debug_print import debug_print

OPERATORS = {"L0": 1, "H4": 2, "H6": 3}


class ExtensionError(FockError):
    pass


class ParamModule:
    """
    M(1)[t]/(f): Fock monomials over one ground whose momentum is the class
    of t, with coefficients in Q[t]/(f).
    """

    def __init__(self, modulus):
        self.ring = QuotientRing(modulus)
        self.ground = Momentum(self.ring.gen)

    def __repr__(self):
        return f"ParamModule({self.ring.modulus.as_expr()})"

    @property
    def modulus(self) -> UniPoly:
        return UniPoly.from_poly(self.ring.modulus)

    def state(self, *indices, coeff=None) -> FockVector:
        """h(-n_1)...h(-n_s) times a ring element (1 by default)."""
        coeff = self.ring.one if coeff is None else coeff
        if not isinstance(coeff, QuotientRingElem):
            coeff = self.ring.scalar(coeff)
        return FockVector.from_monomial(monomial(*indices, ground=self.ground), coeff)

    @property
    def v_plus(self) -> FockVector:
        return self.state()

    @property
    def v_minus(self) -> FockVector:
        return self.state(coeff=self.ring.gen)

    @property
    def v_c(self) -> FockVector:
        return self.state()

    @property
    def u_c(self) -> FockVector:
        """(t - c) times the ground state, for f = (t - c)^m."""
        root = self.ring.single_root()
        if root is None:
            raise ExtensionError(f"{self} has no single rational root")
        return self.state(coeff=self.ring.gen - root)

    @property
    def theta_stable(self) -> bool:
        f = self.modulus
        g = f.reflected()
        return g == f or UniPoly(tuple(-c for c in g.coefficients)) == f

    def theta(self, v: FockVector) -> FockVector:
        if not self.theta_stable:
            raise ExtensionError(f"theta does not preserve the ideal of {self}")
        return theta(v)

    # Finite-dimensional pieces
    def level_basis(self, level: int) -> List[Tuple[FockMonomial, object]]:
        """(monomial, ring basis element) pairs spanning the level."""
        ring_basis = self.ring.canonical_basis()
        return [(mono, r) for mono in basis(level, self.ground) for r in ring_basis]

    def coordinates(self, v: FockVector, level: int) -> List[Fraction]:
        coords = []
        ring_basis = self.ring.canonical_basis()
        for mono in basis(level, self.ground):
            coeff = v.coefficient(mono)
            if not isinstance(coeff, QuotientRingElem):
                coeff = self.ring.scalar(coeff)
            coords.extend(self.ring.coordinates(coeff, ring_basis))
        return coords

    def from_coordinates(self, coords: Sequence, level: int) -> FockVector:
        terms = {}
        for (mono, r), x in zip(self.level_basis(level), coords):
            if x:
                terms[mono] = terms[mono] + r * to_fraction(x) if mono in terms else r * to_fraction(x)
        return FockVector(terms)


def param_mode_apply(a: FockVector, n, v: FockVector) -> FockVector:
    """a~(n)v on M(1)[t]/(f), with h(0) acting by t."""
    if not a.is_homogeneous():
        raise NonHomogeneousError("param_mode_apply needs a homogeneous a")
    return mode_apply(a, n, v)


def _operator_vector(operator: str) -> FockVector:
    if operator not in OPERATORS:
        raise ValueError(f"Unknown operator {operator!r}; choose from {sorted(OPERATORS)}")
    r = OPERATORS[operator]
    return conformal_vector() if r == 1 else build_H(r).vector


def _scalar_matrix(n: int, value) -> DomainMatrix:
    return rational_matrix([[value if i == j else 0 for j in range(n)] for i in range(n)])


@dataclass
class JordanResult:
    modulus: str
    weight: Fraction
    operator: str
    matrix: List[List[Fraction]]
    diagonalizable: bool
    eigenvalues: List[Fraction]
    basis: List[str]

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    def to_dict(self):
        return {
            "modulus": self.modulus,
            "weight": str(self.weight),
            "operator": self.operator,
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "diagonalizable": self.diagonalizable,
            "eigenvalues": [str(x) for x in self.eigenvalues],
            "basis": self.basis,
        }


def _level_matrix(module: ParamModule, op_vector: FockVector, level: int) -> List[List[Fraction]]:
    """Row i holds the coordinates of the image of basis vector i."""
    rows = []
    for mono, r in module.level_basis(level):
        image = param_mode_apply(op_vector, 0, FockVector.from_monomial(mono, r))
        rows.append(module.coordinates(image, level))
    return rows


def _generalized_eigenspace(rows: List[List[Fraction]], value: Fraction) -> List[List[Fraction]]:
    """Row vectors x with x (A - value)^n = 0, or the canonical basis when that is everything."""
    n = len(rows)
    shifted = rational_matrix(rows) - _scalar_matrix(n, value)
    power = shifted ** n
    if power.is_zero_matrix:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    kernel = power.transpose().nullspace()
    return matrix_to_fractions(kernel) if kernel.shape[0] else []


def _restricted(rows: List[List[Fraction]], space: List[List[Fraction]]) -> List[List[Fraction]]:
    generators = [dict(enumerate(x)) for x in space]
    result = []
    for x in space:
        image = [sum((x[i] * rows[i][j] for i in range(len(x))), Fraction(0)) for j in range(len(x))]
        combination = solve_in_span({j: c for j, c in enumerate(image) if c}, generators)
        if combination is None:
            raise ExtensionError("Generalized weight space is not operator-stable")
        result.append([combination.get(i, Fraction(0)) for i in range(len(space))])
    return result


def _is_diagonalizable(matrix: List[List[Fraction]]) -> bool:
    """The squarefree part of the characteristic polynomial annihilates the matrix."""
    if not matrix:
        return True
    m = rational_matrix(matrix)
    charpoly = Poly([sympy.Rational(to_fraction(c).numerator, to_fraction(c).denominator) for c in m.charpoly()], T, domain=QQ)
    n = len(matrix)
    total = _scalar_matrix(n, 0)
    for c in charpoly.sqf_part().all_coeffs():
        total = total * m + _scalar_matrix(n, to_fraction(c))
    return total.is_zero_matrix


def _eigenvalues(matrix: List[List[Fraction]]) -> List[Fraction]:
    if not matrix:
        return []
    charpoly = rational_matrix(matrix).to_Matrix().charpoly(T)
    values = []
    for root, multiplicity in sorted(sympy.roots(charpoly.as_expr(), T, filter="Q").items()):
        values.extend([to_fraction(root)] * multiplicity)
    return values


def jordan_analysis(modulus, weight, operator: str = "L0") -> JordanResult:
    """
    Matrix of L(0) or H~^{2r}(0) on the generalized weight space of
    M(1)[t]/(f).

    Parameters
    ----------
    modulus : UniPoly, Poly or expression in t
        Monic f
    weight : Fraction
        Generalized L(0)-eigenvalue selecting the space
    operator : str
        "L0", "H4" or "H6"

    Returns
    -------
    JordanResult
        Exact rational matrix (row convention) and a squarefree-minimal-polynomial flag
    """
    module = ParamModule(modulus)
    weight = to_fraction(weight)
    op_vector = _operator_vector(operator)
    omega = conformal_vector()
    blocks: List[List[List[Fraction]]] = []
    labels: List[str] = []
    level = 0
    while level <= weight:
        l0_rows = _level_matrix(module, omega, level)
        space = _generalized_eigenspace(l0_rows, weight)
        if space:
            rows = l0_rows if op_vector == omega else _level_matrix(module, op_vector, level)
            blocks.append(_restricted(rows, space))
            level_labels = [f"{mono} x {r}" for mono, r in module.level_basis(level)]
            for x in space:
                nonzero = [f"{c}*({label})" for c, label in zip(x, level_labels) if c]
                labels.append(" + ".join(nonzero))
        level += 1

    size = sum(len(b) for b in blocks)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, x in enumerate(row):
                matrix[offset + i][offset + j] = x
        offset += len(block)
    debug_print(f"jordan_analysis({module}, {weight}, {operator}): dimension {size}")
    return JordanResult(
        str(module.ring.modulus.as_expr()), weight, operator, matrix,
        _is_diagonalizable(matrix), _eigenvalues(matrix), labels,
    )


def jordan_block(c) -> List[List[Fraction]]:
    """[[c^2/2, c], [0, c^2/2]]"""
    c = to_fraction(c)
    return [[c * c / 2, c], [Fraction(0), c * c / 2]]


################################################################################
# Suites
################################################################################


def theta_sector_identities() -> VerificationReport:
    """Mixing identities in M(1)[t]/(t^2) between the theta-sectors."""
    report = VerificationReport("ext-theta-sectors", {"modulus": "t**2"})
    module = ParamModule(T ** 2)
    v_plus, v_minus = module.v_plus, module.v_minus
    h_v_plus = heisenberg(-1, v_plus)
    h_v_minus = heisenberg(-1, v_minus)

    report.add("theta(v+)=v+", module.theta(v_plus) == v_plus)
    report.add("theta(v-)=-v-", module.theta(v_minus) == -v_minus)
    report.add("theta(h(-1)v-)=h(-1)v-", module.theta(h_v_minus) == h_v_minus)
    report.add("theta(h(-1)v+)=-h(-1)v+", module.theta(h_v_plus) == -h_v_plus)

    lhs = virasoro(-1, v_plus)
    report.add("L(-1)v+=h(-1)v-", lhs == h_v_minus, None if lhs == h_v_minus else {"lhs": repr(lhs)})
    lhs = virasoro(1, h_v_plus)
    report.add("L(1)h(-1)v+=v-", lhs == v_minus, None if lhs == v_minus else {"lhs": repr(lhs)})
    lhs = heisenberg(0, v_plus)
    report.add("h(0)v+=v-", lhs == v_minus)
    return report


def verify_linear_moduli(
    roots: Sequence = (0, 1, Fraction(1, 2)), extra_levels: int = 4, r_values: Sequence[int] = (1, 2, 3)
) -> VerificationReport:
    """For f = t - c, each L(0), H~^{2r}(0) matrix is diagonal with the M(1,ch) eigenvalues."""
    report = VerificationReport("ext-linear", {"roots": list(roots), "extra_levels": extra_levels})
    operators = {r: name for name, r in OPERATORS.items()}
    for c in map(to_fraction, roots):
        module = ParamModule(T - sympy.Rational(c.numerator, c.denominator))
        for level in range(extra_levels + 1):
            monos = basis(level, Momentum(c))
            for r in r_values:
                result = jordan_analysis(module.ring.modulus, level + c * c / 2, operators[r])
                expected = [h_eigenvalue(m, r) for m in monos]
                diagonal = [result.matrix[i][i] for i in range(result.dimension)]
                off = any(result.matrix[i][j] for i in range(result.dimension) for j in range(result.dimension) if i != j)
                passed = not off and sorted(diagonal) == sorted(expected)
                report.add(
                    f"c={c}/level={level}/{operators[r]}", passed,
                    None if passed else {"matrix": result.matrix, "expected": expected},
                )
    return report


def verify_jordan_blocks(roots: Sequence = (1, 2, Fraction(1, 2))) -> VerificationReport:
    report = VerificationReport("ext-jordan", {"roots": list(roots)})
    for c in map(to_fraction, roots):
        f = UniPoly.from_roots([c, c])
        result = jordan_analysis(f, c * c / 2, "L0")
        passed = result.matrix == jordan_block(c) and not result.diagonalizable
        report.add(f"(t-{c})^2/L0", passed, None if passed else result.to_dict())
        module = ParamModule(f)
        image = virasoro(0, module.v_c)
        expected = module.v_c * (c * c / 2) + module.u_c * c
        report.add(f"(t-{c})^2/L(0)v_c", image == expected)
    zero = jordan_analysis(T ** 2, 0, "L0")
    report.add("t^2/weight0", all(x == 0 for row in zero.matrix for x in row) and zero.diagonalizable)
    return report


def verify_split_moduli(
    moduli: Sequence[Tuple] = ((1, -1), (1, 3), (0, 2, -1)), max_level: int = 2
) -> VerificationReport:
    """Products of distinct linear factors give diagonalizable grade-preserving operators."""
    report = VerificationReport("ext-split", {"moduli": [list(m) for m in moduli], "max_level": max_level})
    for roots in moduli:
        f = UniPoly.from_roots(roots)
        weights = sorted({level + to_fraction(c) ** 2 / 2 for c in roots for level in range(max_level + 1)})
        for w in weights:
            for operator in ("L0", "H4"):
                result = jordan_analysis(f, w, operator)
                report.add(f"{f}/w={w}/{operator}", result.diagonalizable, None if result.diagonalizable else result.to_dict())
    return report


def spanned_dimension(module: ParamModule, level: int) -> int:
    """
    Rank of the states h(-k_1)...h(-k_s)h(0)^j v_c at one level, built by
    applying modes rather than read off level_basis.
    """
    h = vec(1)
    layers = [[module.v_c]]
    for _ in range(module.modulus.degree):
        layers[0].append(param_mode_apply(h, 0, layers[0][-1]))
    for n in range(1, level + 1):
        layers.append([param_mode_apply(h, -k, w) for k in range(1, n + 1) for w in layers[n - k]])
    rows = [module.coordinates(w, level) for w in layers[level] if w]
    return rational_matrix(rows).rank() if rows else 0


def verify_dimensions(max_level: int = 5) -> VerificationReport:
    """
    Each level of M(1)[t]/(f) is spanned by mode images of v_c, with rank
    deg f times the partition count; dimensions add over f = g h.
    """
    report = VerificationReport("ext-dimensions", {"max_level": max_level})
    pieces = ((1,), (1, 1), (2, -1), (0, 0, 3))
    for level in range(max_level + 1):
        partitions = len(basis(level))
        for roots in pieces:
            dim = spanned_dimension(ParamModule(UniPoly.from_roots(roots)), level)
            report.add(f"roots={list(roots)}/level={level}", dim == len(roots) * partitions, dimension=dim)
        whole = spanned_dimension(ParamModule(UniPoly.from_roots((1, 1, 2))), level)
        parts = spanned_dimension(ParamModule(UniPoly.from_roots((1, 1))), level) + spanned_dimension(
            ParamModule(UniPoly.from_roots((2,))), level
        )
        report.add(f"exact/level={level}", whole == parts, whole=whole, parts=parts)
    return report


def verify_extensions(roots: Sequence = (1, 2, Fraction(1, 2))) -> VerificationReport:
    report = VerificationReport("ext", {"roots": list(roots)})
    report.extend(theta_sector_identities(), "theta/")
    report.extend(verify_jordan_blocks(roots), "jordan/")
    diag = jordan_analysis(T ** 2 - 1, Fraction(1, 2), "L0")
    report.add(
        "split/t^2-1", diag.diagonalizable and diag.eigenvalues == [Fraction(1, 2)] * 2,
        None if diag.diagonalizable else diag.to_dict(),
    )
    report.extend(verify_linear_moduli(extra_levels=2), "linear/")
    report.extend(verify_split_moduli(max_level=1), "split/")
    report.extend(verify_dimensions(), "dimensions/")
    return report

# EOF
