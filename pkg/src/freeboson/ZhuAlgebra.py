#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 13:12:30 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/ZhuAlgebra.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/ZhuAlgebra.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

"""
Zhu's algebra of M(1)^+.

Functionality:
    - The products a*b and a o b, and the extra O(V) families a o_n b
    - O(V)-membership certificates by exact span search, iterative deepening
    - Zero-mode actions on the five families of top levels
    - The defining relations in [omega], [J] and in [omega], [H^4]
    - The idempotents projecting onto single top levels
Input:
    FockVector representatives, weight cutoffs
Output:
    MembershipCertificate, VerificationReport
Prerequisites:
    sympy
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .FockSpace import (
    H_PROFILE,
    TW,
    FockError,
    FockMonomial,
    FockVector,
    GeneratorProfile,
    Momentum,
    basis_up_to,
    fixed_point_basis,
    is_theta_fixed,
    serialize,
    vacuum,
    vec,
    weight,
)
from .HVectors import build_H
from .VertexEngine import DEFAULT_DELTA_SIGN, conformal_vector, mode_apply, unshifted_mode_apply, virasoro
from .VerificationReport import VerificationReport
from .exact_math import combine, gen_binomial, solve_in_span, to_fraction
from .debug_print import debug_print

AMBIENT_PLUS = "M(1)^+"
AMBIENT_FULL = "M(1)"

Mode = Callable[[FockVector, Fraction, FockVector], FockVector]


def _default_mode(x: FockVector, index, v: FockVector) -> FockVector:
    return unshifted_mode_apply(x, index, v)


################################################################################
# Products
################################################################################


def star(a: FockVector, b: FockVector, mode: Optional[Mode] = None, profile: GeneratorProfile = H_PROFILE) -> FockVector:
    """a*b = sum_j C(wt a, j) a(j-1)b, extended linearly over the weights of a."""
    mode = mode or _default_mode
    total = FockVector.zero()
    for wt, part in a.weight_components(profile).items():
        for j in range(int(wt) + 1):
            total = total + mode(part, j - 1, b) * gen_binomial(wt, j)
    return total


def circ_n(a: FockVector, b: FockVector, n: int = 0) -> FockVector:
    """sum_i C(wt a, i) a(i-2-n)b; n = 0 is a o b."""
    total = FockVector.zero()
    for wt, part in a.weight_components().items():
        for i in range(int(wt) + 1):
            total = total + unshifted_mode_apply(part, i - 2 - n, b) * gen_binomial(wt, i)
    return total


def circ(a: FockVector, b: FockVector) -> FockVector:
    return circ_n(a, b, 0)


def _coerce(value) -> FockVector:
    if isinstance(value, FockVector):
        return value
    if isinstance(value, ZhuElement):
        return value.representative
    return vacuum() * to_fraction(value)


@dataclass(frozen=True)
class ZhuElement:
    """A representative in M(1)^+ (or M(1)) standing for its class modulo O(V)."""

    representative: FockVector
    ambient: str = AMBIENT_PLUS

    def __post_init__(self):
        if self.ambient == AMBIENT_PLUS and not is_theta_fixed(self.representative):
            raise FockError("Representatives in M(1)^+ must be theta-fixed")

    def __mul__(self, other) -> "ZhuElement":
        if isinstance(other, (ZhuElement, FockVector)):
            return ZhuElement(star(self.representative, _coerce(other)), self.ambient)
        return ZhuElement(self.representative * to_fraction(other), self.ambient)

    def __rmul__(self, scalar) -> "ZhuElement":
        return ZhuElement(self.representative * to_fraction(scalar), self.ambient)

    def __add__(self, other) -> "ZhuElement":
        return ZhuElement(self.representative + _coerce(other), self.ambient)

    __radd__ = __add__

    def __sub__(self, other) -> "ZhuElement":
        return ZhuElement(self.representative - _coerce(other), self.ambient)

    def __rsub__(self, other) -> "ZhuElement":
        return ZhuElement(_coerce(other) - self.representative, self.ambient)

    def __neg__(self) -> "ZhuElement":
        return ZhuElement(-self.representative, self.ambient)

    def o(self, u: FockVector, sign: int = DEFAULT_DELTA_SIGN) -> FockVector:
        return o_action(self.representative, u, sign)


################################################################################
# O(V) membership
################################################################################


@dataclass
class MembershipCertificate:
    """
    status "proved" carries the combination of generators equal to target;
    "undetermined" means no combination exists among generators of top
    weight <= cutoff, which is not a disproof.
    """

    status: str
    cutoff: int
    target: FockVector
    combination: Dict[str, Fraction] = field(default_factory=dict)
    generators: Dict[str, FockVector] = field(default_factory=dict)

    @property
    def proved(self) -> bool:
        return self.status == "proved"

    def replay(self) -> bool:
        if not self.proved:
            return False
        labels = list(self.combination)
        total = combine(
            {i: self.combination[label] for i, label in enumerate(labels)},
            [dict(self.generators[label].items()) for label in labels],
        )
        return FockVector(total) == self.target

    def to_dict(self) -> Dict:
        return {
            "status": self.status,
            "cutoff": self.cutoff,
            "target": serialize(self.target),
            "combination": {label: str(c) for label, c in sorted(self.combination.items())},
        }


def _ambient_basis(max_level, ambient: str) -> List[FockMonomial]:
    if ambient == AMBIENT_PLUS:
        return fixed_point_basis(max_level)
    return basis_up_to(max_level)


def _family_vectors() -> Dict[str, FockVector]:
    return {"omega": conformal_vector(), "H4": build_H(2).vector, "J": J_AMENDED}


@lru_cache(maxsize=None)
def ov_generators(cutoff: int, ambient: str = AMBIENT_PLUS, full_pair_cutoff: int = 10) -> Tuple[Tuple[str, FockVector], ...]:
    """
    Spanning vectors of O(V) with top weight <= cutoff:
    a o b for basis monomials with wt a + wt b + 1 <= min(cutoff, full_pair_cutoff),
    (L(-1) + L(0))b, and x o_n b for x in {omega, H^4, J}.
    """
    generators: List[Tuple[str, FockVector]] = []
    monos = _ambient_basis(cutoff, ambient)
    pair_top = min(cutoff, full_pair_cutoff)
    for a in monos:
        if a.level == 0:
            continue
        for b in monos:
            if a.level + b.level + 1 <= pair_top:
                vector = circ(FockVector.from_monomial(a), FockVector.from_monomial(b))
                if vector:
                    generators.append((f"circ({a},{b})", vector))
    for b in monos:
        if b.level + 1 <= cutoff:
            b_vec = FockVector.from_monomial(b)
            vector = virasoro(-1, b_vec) + virasoro(0, b_vec)
            if vector:
                generators.append((f"L(-1)+L(0) {b}", vector))
    if cutoff > full_pair_cutoff:
        for name, x in _family_vectors().items():
            wt_x = x.weight()
            for b in monos:
                for n in range(int(cutoff - wt_x - b.level)):
                    vector = circ_n(x, FockVector.from_monomial(b), n)
                    if vector:
                        generators.append((f"{name} o_{n} {b}", vector))
    debug_print(f"O(V) generators at cutoff {cutoff}: {len(generators)}")
    return tuple(generators)


def top_weight(v: FockVector) -> int:
    return int(ceil(max((weight(m) for m in v), default=0)))


def ov_membership(
    v: FockVector, cutoff: int, ambient: str = AMBIENT_PLUS, full_pair_cutoff: int = 10
) -> MembershipCertificate:
    """
    Parameters
    ----------
    v : FockVector
        Candidate element of O(V), supported in weights <= cutoff
    cutoff : int
        Largest generator top weight

    Returns
    -------
    MembershipCertificate
        Proved with the combination, or undetermined at cutoff
    """
    if not v:
        return MembershipCertificate("proved", cutoff, v)
    if top_weight(v) > cutoff:
        return MembershipCertificate("undetermined", cutoff, v)
    generators = ov_generators(cutoff, ambient, full_pair_cutoff)
    combination = solve_in_span(dict(v.items()), [dict(g.items()) for _, g in generators])
    if combination is None:
        return MembershipCertificate("undetermined", cutoff, v)
    used = {generators[i][0]: c for i, c in combination.items()}
    return MembershipCertificate(
        "proved", cutoff, v, used, {generators[i][0]: generators[i][1] for i in combination}
    )


def certify(
    v: FockVector, max_cutoff: int = 14, ambient: str = AMBIENT_PLUS, full_pair_cutoff: int = 10
) -> MembershipCertificate:
    """Iterative deepening from the top weight of v in steps of 2."""
    cutoff = max(top_weight(v), 2)
    certificate = MembershipCertificate("undetermined", cutoff, v)
    while cutoff <= max_cutoff:
        certificate = ov_membership(v, cutoff, ambient, full_pair_cutoff)
        if certificate.proved:
            return certificate
        cutoff += 2
    return certificate


################################################################################
# Top levels
################################################################################


def o_action(a: FockVector, u: FockVector, sign: int = DEFAULT_DELTA_SIGN) -> FockVector:
    """a~(0)u, linear over the homogeneous parts of a."""
    return mode_apply(a, 0, u, sign=sign)


def top_states(lambdas: Sequence = (1, Fraction(3, 2), Fraction(1, 2))) -> List[Tuple[str, FockVector]]:
    """The top levels of M(1)^+, M(1)^-, M(1,lambda), M(1)(theta)^+, M(1)(theta)^-."""
    tops = [
        ("M(1)+", vacuum()),
        ("M(1)-", vec(1)),
    ]
    tops += [(f"M(1,{to_fraction(lam)})", vacuum(Momentum(lam))) for lam in lambdas]
    tops += [
        ("M(1)(theta)+", vacuum(TW)),
        ("M(1)(theta)-", vec(Fraction(1, 2), ground=TW)),
    ]
    return tops


def table_one_values(top: FockVector) -> Tuple[Fraction, Fraction, Fraction]:
    """Expected eigenvalues of L(0), H~4(0), H~6(0) on a top state."""
    (mono,) = tuple(top)
    if mono.twisted:
        if mono.mode_count == 0:
            return Fraction(1, 16), Fraction(-1, 128), Fraction(1, 256)
        return Fraction(9, 16), Fraction(15, 128), Fraction(9, 256)
    if mono.mode_count == 1:
        return Fraction(1), Fraction(1), Fraction(1)
    c = mono.ground.c
    return c * c / 2, Fraction(0), Fraction(0)


def verify_table1(lambdas: Sequence = (1, Fraction(3, 2), Fraction(1, 2)), sign: int = DEFAULT_DELTA_SIGN) -> VerificationReport:
    """Five families times three operators; the M(1,lambda) cases cover every sampled lambda."""
    report = VerificationReport("table1", {"lambdas": list(lambdas), "delta_sign": sign})
    operators = (("L", 1), ("H4", 2), ("H6", 3))
    families: Dict[str, List[FockVector]] = {}
    for name, top in top_states(lambdas):
        family = "M(1,lambda)" if name.startswith("M(1,") else name
        families.setdefault(family, []).append(top)
    for family, tops in families.items():
        for index, (op, r) in enumerate(operators):
            witness = None
            for top in tops:
                expected = table_one_values(top)[index]
                got = o_action(build_H(r).vector, top, sign).scalar_multiple_of(top)
                if got != expected and witness is None:
                    witness = {"top": serialize(top), "expected": expected, "got": got}
            report.add(f"{family}/{op}", witness is None, witness)
    return report


def omega_test(u: FockVector, lowest_weight, sign: int = DEFAULT_DELTA_SIGN) -> bool:
    """L(n)u = H~4(n)u = 0 for 1 <= n <= wt u - lowest_weight."""
    wt = u.weight()
    h4 = build_H(2).vector
    n = Fraction(1)
    while n <= wt - to_fraction(lowest_weight):
        if virasoro(n, u, sign=sign) or mode_apply(h4, n, u, sign=sign):
            return False
        n += 1
    return True


################################################################################
# Relations
################################################################################

# As displayed; not singular for the Virasoro algebra
J_STATED = vec(1, 1, 1, 1) - vec(3, 1, coeff=3) + vec(2, 2, coeff=Fraction(3, 2))
# Virasoro singular, and equal to -9H^4 + 4L(-2)omega - 3L(-4)1
J_AMENDED = vec(1, 1, 1, 1) - vec(3, 1, coeff=2) + vec(2, 2, coeff=Fraction(3, 2))

J_READINGS = {"stated": J_STATED, "amended": J_AMENDED}


def j_from_h4() -> FockVector:
    """-9H^4 + 4L(-2)^2 1 - 3L(-4)1"""
    one = vacuum()
    l22 = virasoro(-2, virasoro(-2, one))
    return build_H(2).vector * -9 + l22 * 4 - virasoro(-4, one) * 3


def is_virasoro_singular(v: FockVector) -> bool:
    return not virasoro(1, v) and not virasoro(2, v)


def _omega() -> ZhuElement:
    return ZhuElement(conformal_vector())


def _cubic_projector() -> ZhuElement:
    w = _omega()
    return ((w - 1) * (w - Fraction(1, 16))) * (w - Fraction(9, 16))


def relation_vectors(reading: str = "amended") -> Dict[str, FockVector]:
    """
    Representing vectors of the defining relations, products associated to
    the left. The [J] relations depend on the reading of J and of the
    factor [J] -/+ [omega] +/- 4[omega]*[omega]; the [H^4] ones do not.
    """
    w = _omega()
    j = ZhuElement(J_READINGS[reading])
    h4 = ZhuElement(build_H(2).vector)
    ww = w * w
    factor = (j - w + 4 * ww) if reading == "stated" else (j + w - 4 * ww)
    cubic = _cubic_projector()
    return {
        "wJ-commute": (w * j - j * w).representative,
        "wJ-cubic": (cubic * factor).representative,
        "wJ-quadratic": (factor * (70 * j + 908 * ww - 515 * w + 27)).representative,
        "wH-commute": (w * h4 - h4 * w).representative,
        "wH-cubic": (cubic * h4).representative,
        "wH-quadratic": ((70 * h4 - 132 * ww + 65 * w - 3) * h4).representative,
    }


def _tops_vanish(v: FockVector, tops, sign) -> Optional[Dict]:
    for name, top in tops:
        image = o_action(v, top, sign)
        if image:
            return {"top": name, "image": serialize(image)}
    return None


def verify_zhu_relations(
    cutoff: int = 14,
    lambdas: Sequence = (1, Fraction(3, 2), Fraction(1, 2)),
    names: Optional[Sequence[str]] = None,
    readings: Sequence[str] = ("stated", "amended"),
    full_pair_cutoff: int = 10,
    certify_membership: bool = True,
    sign: int = DEFAULT_DELTA_SIGN,
) -> VerificationReport:
    """
    Each relation vector: zero action on all tops, then an O(V) certificate
    found by iterative deepening up to cutoff. A vector acting nonzero on
    a top is outside O(V), so its membership search is skipped. The J
    identities are checked as exact vector equalities.
    """
    report = VerificationReport(
        "zhu",
        {"cutoff": cutoff, "lambdas": list(lambdas), "readings": list(readings),
         "full_pair_cutoff": full_pair_cutoff, "delta_sign": sign},
    )
    tops = top_states(lambdas)
    h_identity = j_from_h4()
    for reading in readings:
        j = J_READINGS[reading]
        report.add(f"J/{reading}/theta-fixed-weight4", is_theta_fixed(j) and j.weight() == 4)
        report.add(f"J/{reading}/virasoro-singular", is_virasoro_singular(j))
        difference = j - h_identity
        report.add(
            f"J/{reading}/from-H4", not difference,
            {"difference": serialize(difference)} if difference else None,
        )

    done = set()
    for reading in readings:
        for name, v in relation_vectors(reading).items():
            if names is not None and name not in names:
                continue
            key = name if name.startswith("wH") else f"{name}/{reading}"
            if key in done:
                continue
            done.add(key)
            witness = _tops_vanish(v, tops, sign)
            report.add(f"{key}/tops", witness is None, witness)
            if not certify_membership:
                continue
            if witness is not None:
                report.add(f"{key}/membership", False, {"reason": "acts nonzero on a top level"})
                continue
            certificate = certify(v, cutoff, AMBIENT_PLUS, full_pair_cutoff)
            report.add(
                f"{key}/membership",
                certificate.proved and certificate.replay(),
                None if certificate.proved else {"undetermined_at": certificate.cutoff},
                certifying_cutoff=certificate.cutoff if certificate.proved else None,
                generators_used=len(certificate.combination),
                certificate=certificate.to_dict() if certificate.proved else None,
            )
    return report


################################################################################
# Idempotents
################################################################################


def idempotent_vectors() -> Dict[str, Tuple[FockVector, str, Fraction, Fraction]]:
    """name -> (vector, own top, omega eigenvalue, H^4 eigenvalue on that top)"""
    w = _omega()
    h4 = build_H(2).vector
    a_core = ((w - Fraction(1, 16)) * (w - Fraction(9, 16))) * h4
    plus_core = ((w - 1) * (w - Fraction(9, 16))) * h4
    minus_core = ((w - 1) * (w - Fraction(1, 16))) * h4
    return {
        "a/stated": ((a_core * Fraction(-256, 105)).representative, "M(1)-", Fraction(1), Fraction(1)),
        "a/amended": ((a_core * Fraction(256, 105)).representative, "M(1)-", Fraction(1), Fraction(1)),
        "a+": ((plus_core * Fraction(-4096, 15)).representative, "M(1)(theta)+", Fraction(1, 16), Fraction(-1, 128)),
        "a-": ((minus_core * Fraction(-4096, 105)).representative, "M(1)(theta)-", Fraction(9, 16), Fraction(15, 128)),
    }


def verify_idempotents(
    cutoff: int = 14,
    lambdas: Sequence = (1, Fraction(3, 2), Fraction(1, 2)),
    full_pair_cutoff: int = 10,
    certify_membership: bool = True,
    sign: int = DEFAULT_DELTA_SIGN,
) -> VerificationReport:
    """
    Projection pattern of o(x) on the five tops, and the eigen-relations
    [omega]*[x] = alpha[x], [H^4]*[x] = beta[x] certified in O(V).

    x = p(omega)*H^4 with beta p(alpha) = 1, which the projection pattern
    on the own top records. The wH-commute certificate puts [x] in the
    commutative subalgebra generated by [omega] and [H^4], so
    [x]*[x] = p([omega])*([H^4]*[x]) = beta p(alpha)[x] = [x]. The law
    case replays every certificate it is derived from.
    """
    report = VerificationReport(
        "idempotents",
        {"cutoff": cutoff, "lambdas": list(lambdas), "full_pair_cutoff": full_pair_cutoff, "delta_sign": sign},
    )
    tops = top_states(lambdas)
    omega = conformal_vector()
    h4 = build_H(2).vector
    commute = None
    for name, (x, own, alpha, beta) in idempotent_vectors().items():
        witness = None
        for top_name, top in tops:
            expected = top if top_name == own else FockVector.zero()
            got = o_action(x, top, sign)
            if got != expected and witness is None:
                witness = {"top": top_name, "expected": serialize(expected), "got": serialize(got)}
        report.add(f"{name}/projection", witness is None, witness)
        if not certify_membership or witness is not None:
            continue
        if commute is None:
            commute = certify(relation_vectors()["wH-commute"], cutoff, AMBIENT_PLUS, full_pair_cutoff)
        certificates = {}
        for label, y, eigen in (("omega", omega, alpha), ("H4", h4, beta)):
            v = star(y, x) - x * eigen
            certificate = certify(v, cutoff, AMBIENT_PLUS, full_pair_cutoff)
            certificates[f"{label}-eigen"] = certificate
            report.add(
                f"{name}/{label}-eigen",
                certificate.proved and certificate.replay(),
                None if certificate.proved else {"undetermined_at": certificate.cutoff},
                certifying_cutoff=certificate.cutoff if certificate.proved else None,
            )
        certificates["wH-commute"] = commute
        replayed = {label: c.proved and c.replay() for label, c in certificates.items()}
        report.add(
            f"{name}/law",
            all(replayed.values()),
            None if all(replayed.values()) else {"not_replayed": sorted(k for k, ok in replayed.items() if not ok)},
            derived_from=sorted(certificates) + ["projection"],
            certifying_cutoffs={label: c.cutoff for label, c in certificates.items()},
        )
    return report


################################################################################
# Invariants on top levels
################################################################################


def verify_top_multiplicativity(lambdas: Sequence = (1, Fraction(3, 2)), sign: int = DEFAULT_DELTA_SIGN) -> VerificationReport:
    """o(a*b)u = o(a)o(b)u for a, b in {omega, H^4, J}."""
    report = VerificationReport("top-multiplicativity", {"lambdas": list(lambdas)})
    elements = {"omega": conformal_vector(), "H4": build_H(2).vector, "J": J_AMENDED}
    for (na, a), (nb, b) in ((x, y) for x in elements.items() for y in elements.items()):
        product = star(a, b)
        witness = None
        for top_name, top in top_states(lambdas):
            lhs = o_action(product, top, sign)
            rhs = o_action(a, o_action(b, top, sign), sign)
            if lhs != rhs and witness is None:
                witness = {"top": top_name, "lhs": serialize(lhs), "rhs": serialize(rhs)}
        report.add(f"{na}*{nb}", witness is None, witness)
    return report


def verify_ov_on_tops(max_weight: int = 4, lambdas: Sequence = (1,), sign: int = DEFAULT_DELTA_SIGN) -> VerificationReport:
    """a o b acts as zero on every top level."""
    report = VerificationReport("ov-on-tops", {"max_weight": max_weight})
    monos = [FockVector.from_monomial(m) for m in fixed_point_basis(max_weight) if m.level > 0]
    witness, count = None, 0
    for a in monos:
        for b in monos:
            if a.weight() + b.weight() + 1 > max_weight + 2:
                continue
            v = circ(a, b)
            count += 1
            found = _tops_vanish(v, top_states(lambdas), sign)
            if found and witness is None:
                witness = dict(found, a=serialize(a), b=serialize(b))
    report.add("circ", witness is None, witness, products=count)
    return report


def verify_zhu_image(samples: Sequence = (1, Fraction(1, 2), Fraction(-2, 3))) -> VerificationReport:
    """o(omega) and o(H^4) act on e^{ch} by c^2/2 and 0."""
    report = VerificationReport("zhu-image", {"samples": list(samples)})
    for c in samples:
        c = to_fraction(c)
        top = vacuum(Momentum(c))
        omega_value = o_action(conformal_vector(), top).scalar_multiple_of(top)
        h4_value = o_action(build_H(2).vector, top).scalar_multiple_of(top)
        report.add(f"c={c}", omega_value == c * c / 2 and h4_value == 0, omega=omega_value, h4=h4_value)
    return report

# EOF
