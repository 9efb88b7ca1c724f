#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 15:02:44 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/suites.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/suites.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

"""
Verification suites behind the command line.

Each run_* function returns one VerificationReport. Independent pieces
are farmed out to a process pool when more than one worker is configured;
cases are sorted by id on emission, so the result does not depend on
completion order.
"""

import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .CommutatorLab import RELATIONS, verify_appendix, verify_specializations
from .ExtensionLab import verify_extensions
from .FockSpace import (
    TW,
    FockVector,
    GeneratorProfile,
    Momentum,
    basis_up_to,
    serialize,
    vacuum,
    vec,
)
from .HVectors import (
    HVectorCache,
    build_H,
    commutation_states,
    l1_eigen_identity_check,
    spectral_gap_check,
    verify_decomposition,
    verify_diagonality,
    verify_h_commutation,
    verify_mutual_commutation,
    verify_s_closure,
)
from .VertexEngine import (
    DEFAULT_DELTA_SIGN,
    LatticeExp,
    borcherds_sides,
    conformal_vector,
    lattice_lowest_weight,
    lattice_vector_mode,
    twisted_lowest_weight,
)
from .VerificationReport import VerificationReport
from .ZhuAlgebra import (
    star,
    verify_idempotents,
    verify_ov_on_tops,
    verify_table1,
    verify_top_multiplicativity,
    verify_zhu_image,
    verify_zhu_relations,
)
from .load_config import FreebosonConfig
from .debug_print import debug_print

READINGS = ("stated", "amended")


################################################################################
# Plumbing
################################################################################


def _init_worker(cache_dir: Optional[str]) -> None:
    HVectorCache.get_instance(cache_dir)


def _map(function: Callable, jobs: Sequence[Tuple], workers: int, cache_dir: Optional[str]) -> List:
    if workers <= 1 or len(jobs) <= 1:
        return [function(*job) for job in jobs]
    with ProcessPoolExecutor(
        max_workers=min(workers, len(jobs)), initializer=_init_worker, initargs=(cache_dir,)
    ) as executor:
        return list(executor.map(function, *zip(*jobs)))


def _merge(suite: str, parameters: Dict, parts: Sequence[VerificationReport], prefixes=None) -> VerificationReport:
    report = VerificationReport(suite, parameters)
    for i, part in enumerate(parts):
        report.extend(part, prefixes[i] if prefixes else "")
    return report


def condense_readings(report: VerificationReport) -> VerificationReport:
    """
    Fold cases carrying a reading segment ("stated"/"amended") into one
    "<prefix>/readings" case per prefix, which passes when some reading
    has all of its cases passing. The surviving readings are recorded.
    """
    condensed = VerificationReport(report.suite, report.parameters, timing=report.timing)
    groups: Dict[str, Dict[str, list]] = {}
    for case in report.cases:
        segments = case.case_id.split("/")
        position = next((i for i, s in enumerate(segments) if s in READINGS), None)
        if position is None:
            condensed.cases.append(case)
            continue
        prefix = "/".join(segments[:position])
        groups.setdefault(prefix, {}).setdefault(segments[position], []).append(case)
    for prefix, readings in groups.items():
        surviving = sorted(r for r, cases in readings.items() if all(c.passed for c in cases))
        failing = {
            r: {c.case_id: c.witness for c in cases if not c.passed}
            for r, cases in readings.items() if r not in surviving
        }
        condensed.add(f"{prefix}/readings", bool(surviving), surviving=surviving, failing=failing)
    return condensed


def _timed(function: Callable, *args, timing: bool = False, **kwargs) -> VerificationReport:
    start = time.perf_counter()
    report = function(*args, **kwargs)
    if timing:
        report.timing = {"seconds": round(time.perf_counter() - start, 3)}
    return report


################################################################################
# H-vectors
################################################################################


def run_hvec_build(r: int, cache_dir: Optional[str] = None) -> VerificationReport:
    """Build (or load) H^2..H^{2r}; loaded vectors are rebuilt and compared."""
    cache = HVectorCache.get_instance(cache_dir)
    hits_before = cache.hits
    report = VerificationReport("hvec", {"r": r, "cache_dir": cache_dir})
    for i in range(1, r + 1):
        h = build_H(i, verify=True)
        h.check()
        report.add(f"H{2 * i}", True, vector=serialize(h.vector), constants=list(h.constants))
    report.add("cache", True, hits=cache.hits - hits_before)
    return report


def _hcomm_part(r: int, index_range: int, max_weight: int, sign: int) -> VerificationReport:
    n_values = [Fraction(n) for n in range(-index_range, index_range + 1)]
    n_values += [Fraction(2 * n + 1, 2) for n in range(-index_range, index_range)]
    states = commutation_states(max_weight)
    return verify_h_commutation(r, n_values, states, sign)


def run_hcomm(
    r_values: Sequence[int] = (1, 2, 3, 4),
    index_range: int = 4,
    max_weight: int = 6,
    workers: int = 1,
    cache_dir: Optional[str] = None,
    sign: int = DEFAULT_DELTA_SIGN,
) -> VerificationReport:
    """Defining commutator, diagonality, mutual commutation and the S-structure."""
    jobs = [(r, index_range, max_weight, sign) for r in r_values]
    parts = _map(_hcomm_part, jobs, workers, cache_dir)
    states = commutation_states(max_weight)
    small = [r for r in r_values if r <= 3]
    parts.append(verify_diagonality(list(r_values), states, sign))
    parts.append(verify_mutual_commutation(small, states, sign))
    parts.append(verify_decomposition(r_values))
    parts.append(verify_s_closure())
    prefixes = [""] * len(r_values) + ["diagonal/", "mutual/", "decomposition/", "s-closure/"]
    return _merge(
        "hcomm",
        {"r": list(r_values), "range": index_range, "max_weight": max_weight, "delta_sign": sign},
        parts, prefixes,
    )


################################################################################
# Top levels and commutators
################################################################################


def run_table1(lambdas: Sequence = (1, Fraction(3, 2), Fraction(1, 2))) -> VerificationReport:
    """
    Table of zero-mode eigenvalues on the five top levels. The opposite
    sign of the twisted correction is evaluated too and recorded, so a
    failure names the convention that would match.
    """
    report = verify_table1(lambdas, DEFAULT_DELTA_SIGN)
    flipped = verify_table1(lambdas, -DEFAULT_DELTA_SIGN)
    report.parameters["matching_delta_signs"] = [
        s for s, r in ((DEFAULT_DELTA_SIGN, report), (-DEFAULT_DELTA_SIGN, flipped)) if r.passed
    ]
    return report


def _appendix_part(relation_id: str, index_range: int, max_weight: int, sign: int) -> VerificationReport:
    return verify_appendix(relation_id, index_range, max_weight, sign=sign)


def run_appendix(
    index_range: int = 4,
    max_weight: int = 6,
    relation_ids: Optional[Sequence[str]] = None,
    workers: int = 1,
    cache_dir: Optional[str] = None,
    sign: int = DEFAULT_DELTA_SIGN,
) -> VerificationReport:
    relation_ids = list(relation_ids or RELATIONS)
    jobs = [(rel, index_range, max_weight, sign) for rel in relation_ids]
    parts = _map(_appendix_part, jobs, workers, cache_dir)
    parts.append(verify_specializations())
    report = _merge(
        "appendix",
        {"relations": relation_ids, "range": index_range, "max_weight": max_weight, "delta_sign": sign},
        parts, [""] * len(relation_ids) + ["specializations/"],
    )
    return condense_readings(report)


################################################################################
# Borcherds identity
################################################################################


def borcherds_samples(count: int, seed: int) -> List[Tuple[str, FockVector, FockVector, FockVector, Fraction, Fraction, int]]:
    """
    Seeded samples (sector, a, b, u, p, s, t) alternating between the
    untwisted and twisted sectors. On the twisted module p and s lie in
    Z + (number of factors of a resp. b)/2.
    """
    rng = random.Random(seed)
    elements = [FockVector.from_monomial(m) for m in basis_up_to(3) if m.level > 0]
    untwisted = [FockVector.from_monomial(m) for c in (0, 1, Fraction(3, 2)) for m in basis_up_to(2, Momentum(c))]
    twisted = [FockVector.from_monomial(m) for m in basis_up_to(2, TW)]
    samples = []
    for i in range(count):
        a, b = rng.choice(elements), rng.choice(elements)
        t = rng.randint(-3, 2)
        if i % 2 == 0:
            sector, u = "untwisted", rng.choice(untwisted)
            p, s = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
        else:
            sector, u = "twisted", rng.choice(twisted)
            a_deg = next(iter(a)).mode_count
            b_deg = next(iter(b)).mode_count
            p = Fraction(rng.randint(-3, 3)) + Fraction(a_deg % 2, 2)
            s = Fraction(rng.randint(-3, 3)) + Fraction(b_deg % 2, 2)
        samples.append((sector, a, b, u, p, s, t))
    return samples


def _borcherds_part(sample_ids: Sequence[int], count: int, seed: int, sign: int) -> VerificationReport:
    samples = borcherds_samples(count, seed)
    report = VerificationReport("borcherds-part")
    for i in sample_ids:
        sector, a, b, u, p, s, t = samples[i]
        lhs, rhs = borcherds_sides(a, b, u, p, s, t, sign=sign)
        witness = None
        if lhs != rhs:
            witness = {
                "a": serialize(a), "b": serialize(b), "u": serialize(u),
                "p": p, "s": s, "t": t, "lhs": serialize(lhs), "rhs": serialize(rhs),
            }
        report.add(f"{sector}/{i:04d}", witness is None, witness)
    return report


def run_borcherds(
    count: int = 200, seed: int = 0, workers: int = 1, cache_dir: Optional[str] = None, sign: int = DEFAULT_DELTA_SIGN
) -> VerificationReport:
    chunks = max(1, min(workers, count))
    jobs = [(list(range(j, count, chunks)), count, seed, sign) for j in range(chunks)]
    parts = _map(_borcherds_part, jobs, workers, cache_dir)
    return _merge("borcherds", {"samples": count, "seed": seed, "delta_sign": sign}, parts)


################################################################################
# Zhu algebra
################################################################################


def run_zhu(
    cutoff: int = 14,
    lambdas: Sequence = (1, Fraction(3, 2), Fraction(1, 2)),
    full_pair_cutoff: int = 10,
    sign: int = DEFAULT_DELTA_SIGN,
) -> VerificationReport:
    relations = verify_zhu_relations(cutoff, lambdas, full_pair_cutoff=full_pair_cutoff, sign=sign)
    report = _merge(
        "zhu",
        {"cutoff": cutoff, "lambdas": list(lambdas), "full_pair_cutoff": full_pair_cutoff, "delta_sign": sign},
        [
            relations,
            verify_top_multiplicativity(lambdas, sign),
            verify_ov_on_tops(sign=sign),
            verify_zhu_image(),
        ],
        ["", "multiplicativity/", "ov-on-tops/", "image/"],
    )
    return condense_readings(report)


def run_idempotents(
    cutoff: int = 14,
    lambdas: Sequence = (1, Fraction(3, 2), Fraction(1, 2)),
    full_pair_cutoff: int = 10,
    sign: int = DEFAULT_DELTA_SIGN,
) -> VerificationReport:
    report = verify_idempotents(cutoff, lambdas, full_pair_cutoff, sign=sign)
    return condense_readings(report)


################################################################################
# Lattice
################################################################################


def lattice_E_star_E(k: int = 1) -> FockVector:
    """E*E for E = e^alpha + e^-alpha, in the alpha generator."""
    profile = GeneratorProfile.lattice(k)
    e = LatticeExp(1, k).vector() + LatticeExp(-1, k).vector()

    def mode(x, index, v):
        return lattice_vector_mode(x, index, v, k)

    return star(e, e, mode, profile)


def run_lattice(k_values: Sequence[int] = (1, 2, 3)) -> VerificationReport:
    """E*E = 4 omega at k = 1, and lowest weights of the V_L^+ modules."""
    report = VerificationReport("lattice", {"k": list(k_values)})
    if 1 in k_values:
        got = lattice_E_star_E(1)
        expected = conformal_vector(GeneratorProfile.lattice(1)) * 4
        report.add("k=1/E*E=4omega", got == expected, None if got == expected else {"got": serialize(got)})
    for k in k_values:
        expected = {
            "V_L+": (0, 1, Fraction(0)),
            "V_L-": (0, -1, Fraction(1)),
            "V_L^{T1,+}": (None, 1, Fraction(1, 16)),
            "V_L^{T1,-}": (None, -1, Fraction(9, 16)),
            "V_{1/2+L}+": (Fraction(1, 2), 1, Fraction(k, 4)),
            "V_{1/2+L}-": (Fraction(1, 2), -1, Fraction(k, 4)),
        }
        for r in range(1, k):
            expected[f"V_{{{r}/{2 * k}+L}}"] = (Fraction(r, 2 * k), None, Fraction(r * r, 4 * k))
        for name, (coset, parity, value) in expected.items():
            if coset is None:
                got = twisted_lowest_weight(parity)
            else:
                got = lattice_lowest_weight(k, coset, parity)
            report.add(f"k={k}/{name}", got == value, None if got == value else {"expected": value, "got": got})
    return report


################################################################################
# Remaining suites
################################################################################


def run_ext() -> VerificationReport:
    return verify_extensions()


def run_gap(bound: int = 200, sign: int = DEFAULT_DELTA_SIGN) -> VerificationReport:
    """Spectral gap over both eigenvalue lattices, plus the L(1) identity on each top."""
    parts = [spectral_gap_check(bound)]
    prefixes = [""]
    for name, u, h, k in (
        ("vacuum", vacuum(), 0, 0),
        ("1_tw", vacuum(TW), Fraction(-1, 128), Fraction(1, 256)),
        ("h(-1/2)1_tw", vec(Fraction(1, 2), ground=TW), Fraction(15, 128), Fraction(9, 256)),
    ):
        parts.append(l1_eigen_identity_check(u, h, k, sign))
        prefixes.append(f"l1/{name}/")
    return _merge("gap", {"bound": bound, "delta_sign": sign}, parts, prefixes)


SUITES = ("hcomm", "table1", "appendix", "borcherds", "zhu", "idempotents", "lattice", "ext", "gap")


def _option(overrides: Dict, key: str, default):
    value = overrides.get(key)
    return default if value is None else value


def run_suite(name: str, config: FreebosonConfig, timing: bool = False, **overrides) -> VerificationReport:
    """Dispatch one suite with config defaults, CLI overrides taking precedence."""
    option = {
        "r": overrides.get("r"),
        "index_range": _option(overrides, "index_range", config.index_range),
        "max_weight": _option(overrides, "max_weight", config.max_weight),
        "cutoff": _option(overrides, "cutoff", config.zhu_cutoff),
        "samples": _option(overrides, "samples", config.borcherds_samples),
        "seed": _option(overrides, "seed", config.seed),
        "k": overrides.get("k"),
        "bound": _option(overrides, "bound", config.gap_bound),
    }
    workers = _option(overrides, "workers", config.workers)
    debug_print(f"Running suite {name} with {option} on {workers} worker(s)")
    if name == "hcomm":
        r_values = [option["r"]] if option["r"] is not None else [1, 2, 3, 4]
        hcomm_weight = _option(overrides, "max_weight", config.hcomm_max_weight)
        return _timed(run_hcomm, r_values, option["index_range"], hcomm_weight, workers, config.cache_dir, timing=timing)
    if name == "table1":
        return _timed(run_table1, config.lambda_samples, timing=timing)
    if name == "appendix":
        return _timed(run_appendix, option["index_range"], option["max_weight"], None, workers, config.cache_dir, timing=timing)
    if name == "borcherds":
        return _timed(run_borcherds, option["samples"], option["seed"], workers, config.cache_dir, timing=timing)
    if name == "zhu":
        return _timed(run_zhu, option["cutoff"], config.lambda_samples, config.full_pair_cutoff, timing=timing)
    if name == "idempotents":
        return _timed(run_idempotents, option["cutoff"], config.lambda_samples, config.full_pair_cutoff, timing=timing)
    if name == "lattice":
        k_values = [option["k"]] if option["k"] is not None else config.k_values
        return _timed(run_lattice, k_values, timing=timing)
    if name == "ext":
        return _timed(run_ext, timing=timing)
    if name == "gap":
        return _timed(run_gap, option["bound"], timing=timing)
    raise ValueError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)}")

# EOF
