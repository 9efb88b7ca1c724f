#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 11:20:14 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/HVectors.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/HVectors.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

"""
The vectors H^{2r} and their zero modes.

Functionality:
    - Recursive construction of H^{2r} in S_{2r}, cached on disk
    - Eigenvalue oracle for H~^{2r}(0) and the twisted constants q_r
    - Commutation, diagonality, decomposition and spectral-gap checks
Input:
    r, test states, index ranges
Output:
    HVector values, VerificationReport
Prerequisites:
    sympy
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .FockSpace import (
    TW,
    VACUUM,
    FockError,
    FockMonomial,
    FockVector,
    Momentum,
    basis,
    basis_up_to,
    is_theta_fixed,
    parse,
    serialize,
    vacuum,
)
from .VertexEngine import (
    DEFAULT_DELTA_SIGN,
    heisenberg,
    l_minus_one_power,
    mode_apply,
    unshifted_mode_apply,
    virasoro,
)
from .VerificationReport import VerificationReport
from .exact_math import odd_poly_coeffs, solve_in_span, to_fraction
from .debug_print import debug_print


class HVectorError(RuntimeError):
    """Raised when the engine produces an inconsistent H-vector result."""


class PreconditionError(ValueError):
    """Raised when a check is called on inputs that violate its precondition."""


def in_span_s(v: FockVector) -> bool:
    """v lies in span{1, h(-n)h(-m)1}"""
    return all(
        not mono.twisted and mono.ground == VACUUM and mono.mode_count in (0, 2)
        for mono in v
    )


@dataclass(frozen=True)
class HVector:
    r: int
    vector: FockVector
    constants: Tuple[Fraction, ...]

    @property
    def weight(self) -> int:
        return 2 * self.r

    def check(self) -> None:
        if self.vector.weight() != self.weight:
            raise HVectorError(f"H^{self.weight} has weight {self.vector.weight()}")
        if not is_theta_fixed(self.vector):
            raise HVectorError(f"H^{self.weight} is not theta-fixed")
        if not in_span_s(self.vector):
            raise HVectorError(f"H^{self.weight} leaves span S")


################################################################################
# Construction
################################################################################


def _recursion(r: int, lower: Dict[int, FockVector]) -> FockVector:
    """
    H^{2r} = (1/c_r)(h(-r)^2 1 - sum_{i<r} c_i (2i-1)!/(2r-1)! L(-1)^{2r-2i} H^{2i})
    """
    c = odd_poly_coeffs(r)
    total = FockVector.from_monomial(FockMonomial((2 * r, 2 * r), VACUUM))
    for i in range(1, r):
        scale = Fraction(factorial(2 * i - 1), factorial(2 * r - 1)) * c[i - 1]
        total = total - l_minus_one_power(lower[i], 2 * r - 2 * i) * scale
    return total / c[r - 1]


class HVectorCache:
    """
    Build-once store of H^{2r}, optionally persisted as H{2r}.txt files
    in canonical text form.
    """

    _instance = None

    @classmethod
    def get_instance(cls, cache_dir: Optional[str] = None) -> "HVectorCache":
        if cls._instance is None:
            cls._instance = HVectorCache(cache_dir)
        elif cache_dir is not None and cls._instance.cache_dir != cache_dir:
            cls._instance.cache_dir = cache_dir
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        cls._instance = None

    def __init__(self, cache_dir: Optional[str] = None):
        self.cache_dir = cache_dir
        self._vectors: Dict[int, FockVector] = {}
        self.hits = 0

    def path(self, r: int) -> Optional[str]:
        if self.cache_dir is None:
            return None
        return os.path.join(self.cache_dir, f"H{2 * r}.txt")

    def _load(self, r: int) -> Optional[FockVector]:
        path = self.path(r)
        if path is None or not os.path.exists(path):
            return None
        try:
            with open(path, "r") as f:
                return parse(f.read().strip())
        except (OSError, FockError) as e:
            debug_print(f"Ignoring unreadable cache file {path}: {e}")
            return None

    def _save(self, r: int, vector: FockVector) -> None:
        path = self.path(r)
        if path is None:
            return
        try:
            os.makedirs(self.cache_dir, exist_ok=True)
            with open(path, "w") as f:
                f.write(serialize(vector) + "\n")
        except OSError as e:
            debug_print(f"Could not write cache file {path}: {e}")

    def get(self, r: int, verify: bool = False) -> FockVector:
        """
        Parameters
        ----------
        r : int
            Positive integer
        verify : bool
            Rebuild and compare when the vector comes from disk

        Returns
        -------
        FockVector
            H^{2r}
        """
        if r < 1:
            raise ValueError(f"r must be positive, got {r}")
        if r in self._vectors:
            return self._vectors[r]
        lower = {i: self.get(i, verify) for i in range(1, r)}
        stored = self._load(r)
        if stored is not None:
            self.hits += 1
            debug_print(f"H^{2 * r}: cache hit at {self.path(r)}")
            if verify:
                rebuilt = _recursion(r, lower)
                if rebuilt != stored:
                    raise HVectorError(f"Cached H^{2 * r} differs from the rebuilt vector")
            vector = stored
        else:
            vector = _recursion(r, lower)
            self._save(r, vector)
        self._vectors[r] = vector
        return vector


def build_H(r: int, verify: bool = False) -> HVector:
    """H^{2r} via the recursion; H^2 = omega."""
    vector = HVectorCache.get_instance().get(r, verify)
    return HVector(r, vector, tuple(odd_poly_coeffs(r)))


def h_zero_mode(r: int, v: FockVector, sign: int = DEFAULT_DELTA_SIGN) -> FockVector:
    """H~^{2r}(0)v"""
    return mode_apply(build_H(r).vector, 0, v, sign=sign)


################################################################################
# Eigenvalues
################################################################################


def q_constant(r: int, sign: int = DEFAULT_DELTA_SIGN) -> Fraction:
    """The eigenvalue of H~^{2r}(0) on 1_tw, from the twisted engine."""
    top = vacuum(TW)
    value = h_zero_mode(r, top, sign).scalar_multiple_of(top)
    if value is None:
        raise HVectorError(f"H~^{2 * r}(0)1_tw is not a multiple of 1_tw")
    return value


def h_eigenvalue(m: FockMonomial, r: int, sign: int = DEFAULT_DELTA_SIGN) -> Fraction:
    """
    Eigenvalue of H~^{2r}(0) on a monomial.

    Over e^{c h}: sum n_i^{2r-1}, plus c^2/2 when r = 1.
    Over 1_tw: q_r + sum n_i^{2r-1}.
    """
    total = sum((Fraction(d, 2) ** (2 * r - 1) for d in m.modes), Fraction(0))
    if m.twisted:
        return q_constant(r, sign) + total
    if r == 1:
        total += m.ground.c * m.ground.c / 2
    return total


################################################################################
# Checks
################################################################################


def commutation_states(max_level, momenta: Sequence = (0, 1, Fraction(3, 2)), twisted: bool = True) -> List[FockVector]:
    states = []
    for c in momenta:
        states.extend(FockVector.from_monomial(m) for m in basis_up_to(max_level, Momentum(c)))
    if twisted:
        states.extend(FockVector.from_monomial(m) for m in basis_up_to(max_level, TW))
    return states


def _sector_name(v: FockVector) -> str:
    mono = next(iter(v))
    return "tw" if mono.twisted else f"e^{mono.ground.c}"


def verify_h_commutation(
    r: int, n_values: Iterable, states: Sequence[FockVector], sign: int = DEFAULT_DELTA_SIGN
) -> VerificationReport:
    """
    [H~^{2r}(0), h(n)]v = -n^{2r-1} h(n)v for every n and state; indices
    outside the sector of a state are skipped.
    """
    n_values = [to_fraction(n) for n in n_values]
    report = VerificationReport(
        f"hcomm-r{r}", {"r": r, "n": n_values, "states": len(states), "delta_sign": sign}
    )
    for n in n_values:
        per_sector: Dict[str, List] = {}
        for v in states:
            if not v:
                continue
            twisted = next(iter(v)).twisted
            if (n.denominator == 2) != twisted:
                continue
            h_v = heisenberg(n, v)
            lhs = h_zero_mode(r, h_v, sign) - heisenberg(n, h_zero_mode(r, v, sign))
            rhs = h_v * (-(n ** (2 * r - 1)))
            bucket = per_sector.setdefault(_sector_name(v), [0, None])
            bucket[0] += 1
            if lhs != rhs and bucket[1] is None:
                bucket[1] = {"state": serialize(v), "lhs": serialize(lhs), "rhs": serialize(rhs)}
        for sector, (count, witness) in per_sector.items():
            report.add(f"r{r}/{sector}/n={n}", witness is None, witness, states=count)
    return report


def verify_diagonality(
    r_values: Iterable[int], states: Sequence[FockVector], sign: int = DEFAULT_DELTA_SIGN
) -> VerificationReport:
    """Engine H~^{2r}(0) against the eigenvalue oracle on monomial states."""
    report = VerificationReport("h-diagonality", {"r": list(r_values), "states": len(states)})
    for r in report.parameters["r"]:
        witness, count = None, 0
        for v in states:
            (mono,) = tuple(v)
            expected = v * h_eigenvalue(mono, r, sign)
            got = h_zero_mode(r, v, sign)
            count += 1
            if got != expected and witness is None:
                witness = {"state": serialize(v), "engine": serialize(got), "oracle": serialize(expected)}
        report.add(f"r{r}", witness is None, witness, states=count)
    return report


def verify_mutual_commutation(
    r_values: Sequence[int], states: Sequence[FockVector], sign: int = DEFAULT_DELTA_SIGN
) -> VerificationReport:
    """[H~^{2r}(0), H~^{2s}(0)] = 0 on the given states."""
    report = VerificationReport("h-mutual", {"r": list(r_values), "states": len(states)})
    for i, r in enumerate(r_values):
        for s in r_values[i + 1:]:
            witness = None
            for v in states:
                lhs = h_zero_mode(r, h_zero_mode(s, v, sign), sign)
                rhs = h_zero_mode(s, h_zero_mode(r, v, sign), sign)
                if lhs != rhs:
                    witness = {"state": serialize(v), "rs": serialize(lhs), "sr": serialize(rhs)}
                    break
            report.add(f"r{r}-s{s}", witness is None, witness)
    return report


def s_basis(weight: int) -> List[FockVector]:
    """h(-p)h(-q)1 with p >= q >= 1 and p + q = weight."""
    return [
        FockVector.from_monomial(m)
        for m in basis(weight, VACUUM)
        if m.mode_count == 2
    ]


def _as_dict(v: FockVector) -> Dict[FockMonomial, Fraction]:
    return dict(v.items())


def verify_decomposition(r_values: Iterable[int]) -> VerificationReport:
    """S_{2r} = C H^{2r} + L(-1)^2 S_{2r-2}, with matching dimensions."""
    report = VerificationReport("s-decomposition", {"r": list(r_values)})
    for r in report.parameters["r"]:
        target = s_basis(2 * r)
        candidates = [build_H(r).vector] + [l_minus_one_power(s, 2) for s in s_basis(2 * r - 2)]
        spans = all(
            solve_in_span(_as_dict(v), [_as_dict(c) for c in candidates]) is not None
            for v in target
        )
        report.add(f"r{r}", spans and len(candidates) == len(target), dimension=len(target))
    return report


def verify_s_closure(max_mode: int = 5) -> VerificationReport:
    """a(i)b stays in S for a, b among 1 and h(-n)h(-m)1 with n, m <= max_mode."""
    elements = [vacuum()] + [
        FockVector.from_monomial(FockMonomial((2 * n, 2 * m), VACUUM))
        for n in range(1, max_mode + 1)
        for m in range(1, n + 1)
    ]
    witness, count = None, 0
    for a in elements:
        for b in elements:
            for i in range(int(a.weight() + b.weight())):
                product = unshifted_mode_apply(a, i, b)
                count += 1
                if not in_span_s(product) and witness is None:
                    witness = {"a": serialize(a), "b": serialize(b), "i": i, "product": serialize(product)}
    report = VerificationReport("s-closure", {"max_mode": max_mode})
    report.add("closure", witness is None, witness, products=count)
    return report


GAP_REFERENCES = (
    (Fraction(0), Fraction(0)),
    (Fraction(-1, 128), Fraction(1, 256)),
    (Fraction(15, 128), Fraction(9, 256)),
)

GAP_LATTICES = {
    "integral": (Fraction(0), Fraction(1), Fraction(0), Fraction(1)),
    "twisted": (Fraction(-1, 128), Fraction(1, 8), Fraction(1, 256), Fraction(1, 32)),
}

# (h - p, k - q) = (1/2, 1/4) zeroes 5(h-p)(h-p-1) + 9(k-q) - 1 for every reference
HALF_SHIFT = (Fraction(1, 2), Fraction(1, 4))


def gap_value(h, k, p, q) -> Fraction:
    """5(h-p)(h-p-1) + 9(k-q) - 1"""
    h, k, p, q = map(to_fraction, (h, k, p, q))
    return 5 * (h - p) * (h - p - 1) + 9 * (k - q) - 1


def is_half_shift(h, k, p, q) -> bool:
    return (to_fraction(h) - to_fraction(p), to_fraction(k) - to_fraction(q)) == HALF_SHIFT


def gap_zeros(bound: int, p, q, lattice: str) -> List[Tuple[Fraction, Fraction]]:
    """
    All zeros (h, k) of gap_value on one eigenvalue lattice cut at index bound.

    For each h the unique k solving the equation is computed and tested
    for membership, which covers every pair of the cut lattice.
    """
    p, q = to_fraction(p), to_fraction(q)
    h0, h_step, k0, k_step = GAP_LATTICES[lattice]
    zeros = []
    for a in range(bound + 1):
        h = h0 + a * h_step
        k = q + (1 - 5 * (h - p) * (h - p - 1)) / 9
        b = (k - k0) / k_step
        if b.denominator == 1 and 0 <= b <= bound:
            zeros.append((h, k))
    return zeros


def spectral_gap_check(bound: int) -> VerificationReport:
    """
    Zeros of 5(h-p)(h-p-1) + 9(k-q) - 1 on the eigenvalue lattices
    Z>=0 x Z>=0 and (-1/128 + Z>=0/8) x (1/256 + Z>=0/32), cut at index bound.

    The half-shift point (p + 1/2, q + 1/4) lies on the twisted lattice
    for both nonzero references. Those zeros are reported under "half_shift_zeros" and do
    not fail the case; any other zero does.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    report = VerificationReport("gap", {"bound": bound})
    for p, q in GAP_REFERENCES:
        for name in GAP_LATTICES:
            zeros = gap_zeros(bound, p, q, name)
            shifted = [{"h": h, "k": k} for h, k in zeros if is_half_shift(h, k, p, q)]
            others = [{"h": h, "k": k} for h, k in zeros if not is_half_shift(h, k, p, q)]
            details = {"pairs": (bound + 1) ** 2}
            if shifted:
                details["half_shift_zeros"] = shifted
                details["deviation"] = "h = p + 1/2, k = q + 1/4 solves the gap equation"
            report.add(
                f"p={p}/q={q}/{name}",
                not others,
                {"zeros": others[:5]} if others else None,
                **details,
            )
    return report


def l1_eigen_identity_check(u: FockVector, h, k, sign: int = DEFAULT_DELTA_SIGN) -> VerificationReport:
    """
    5(H~4(0)-h)(H~4(0)-h-1)L(1)u + 9(H~6(0)-k)L(1)u - L(1)u = 0
    for an eigenvector u of H~4(0), H~6(0) with eigenvalues h, k.
    """
    h, k = to_fraction(h), to_fraction(k)
    if h_zero_mode(2, u, sign) != u * h or h_zero_mode(3, u, sign) != u * k:
        raise PreconditionError(f"{serialize(u)} is not an eigenvector with eigenvalues ({h}, {k})")
    w = virasoro(1, u, sign=sign)

    def shifted(r, x, value):
        return h_zero_mode(r, x, sign) - x * value

    total = shifted(2, shifted(2, w, h), h + 1) * 5 + shifted(3, w, k) * 9 - w
    report = VerificationReport("l1-eigen-identity", {"u": serialize(u), "h": h, "k": k})
    report.add("identity", not total, {"residual": serialize(total)} if total else None)
    return report

# EOF
