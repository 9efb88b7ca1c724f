#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 15:20:06 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/parse_args.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/parse_args.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

import argparse
from typing import Optional, Sequence

from .suites import SUITES


def _env_int(name: str) -> Optional[int]:
    value = os.environ.get(name)
    if value in (None, "", "None", "none", "null"):
        return None
    return int(value)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--config",
        type=str,
        default=os.environ.get("FREEBOSON_CONFIG"),
        help="Flat key=value config file (default: %(default)s)",
    )
    parser.add_argument(
        "--output-dir",
        type=str,
        default=os.environ.get("FREEBOSON_REPORT_DIR"),
        help="Directory for JSON reports, overriding report_dir (default: %(default)s)",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=_env_int("FREEBOSON_WORKERS"),
        help="Worker processes; config value or physical CPU count when omitted (default: %(default)s)",
    )
    parser.add_argument(
        "--timing",
        action="store_true",
        default=os.environ.get("FREEBOSON_TIMING", "").lower() in ("true", "yes", "1"),
        help="Attach wall-clock timing to reports (breaks byte-identical output)",
    )


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="freeboson",
        description="Exact verification suites for the free boson orbifold M(1)^+",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    hvec = commands.add_parser("hvec", help="Manage the H-vector cache")
    hvec_commands = hvec.add_subparsers(dest="action", required=True)
    build = hvec_commands.add_parser("build", help="Build H^2..H^{2r} and store them")
    build.add_argument("--r", type=int, required=True, help="Largest r to build")
    _add_common(build)

    verify = commands.add_parser("verify", help="Run an identity suite")
    verify.add_argument("suite", choices=list(SUITES) + ["all"], help="Suite to run")
    verify.add_argument("--r", type=int, default=None, help="Single r for hcomm (default: 1..4)")
    verify.add_argument(
        "--range",
        dest="index_range",
        type=int,
        default=_env_int("FREEBOSON_RANGE"),
        help="Mode index range |m|, |n| <= N (default: %(default)s)",
    )
    verify.add_argument(
        "--max-weight",
        type=int,
        default=_env_int("FREEBOSON_MAX_WEIGHT"),
        help="Largest weight of test states (default: %(default)s)",
    )
    verify.add_argument(
        "--samples",
        type=int,
        default=_env_int("FREEBOSON_SAMPLES"),
        help="Number of Borcherds samples (default: %(default)s)",
    )
    verify.add_argument(
        "--seed",
        type=int,
        default=_env_int("FREEBOSON_SEED"),
        help="Seed of the Borcherds sampler (default: %(default)s)",
    )
    verify.add_argument(
        "--cutoff",
        type=int,
        default=_env_int("FREEBOSON_ZHU_CUTOFF"),
        help="Largest O(V) generator weight for membership search (default: %(default)s)",
    )
    verify.add_argument("--k", type=int, default=None, help="Single lattice parameter k (default: config k_values)")
    verify.add_argument(
        "--bound",
        type=int,
        default=_env_int("FREEBOSON_GAP_BOUND"),
        help="Lattice index bound for the spectral gap check (default: %(default)s)",
    )
    _add_common(verify)

    args = parser.parse_args(argv)
    for name in ("r", "index_range", "max_weight", "samples", "cutoff", "k", "bound", "workers"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative, got {value}")
    return args

# EOF
