#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 15:31:52 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/main.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/main.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

import sys
from typing import List, Optional, Sequence

from .HVectors import HVectorCache
from .VerificationReport import VerificationReport
from .load_config import load_config
from .parse_args import parse_args
from .suites import SUITES, run_hvec_build, run_suite
from .debug_print import debug_print


def _save(report: VerificationReport, report_dir: str) -> str:
    return report.save(os.path.join(report_dir, f"{report.suite}.json"))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point for the freeboson CLI.

    Writes one JSON report per suite and exits 0 iff every case passed.
    """
    args = parse_args(argv)
    try:
        config = load_config(args.config)
    except (OSError, KeyError, ValueError) as e:
        sys.stderr.write(f"Error reading config: {e}\n")
        sys.exit(1)
    if args.workers:
        config.workers = args.workers
    report_dir = args.output_dir or config.report_dir
    HVectorCache.get_instance(config.cache_dir)

    reports: List[VerificationReport] = []
    try:
        if args.command == "hvec":
            reports.append(run_hvec_build(args.r, config.cache_dir))
        else:
            names = SUITES if args.suite == "all" else (args.suite,)
            overrides = {
                "r": args.r,
                "index_range": args.index_range,
                "max_weight": args.max_weight,
                "samples": args.samples,
                "seed": args.seed,
                "cutoff": args.cutoff,
                "k": args.k,
                "bound": args.bound,
                "workers": args.workers,
            }
            for name in names:
                reports.append(run_suite(name, config, timing=args.timing, **overrides))
    except (ValueError, ArithmeticError, RuntimeError) as e:
        sys.stderr.write(f"Error running {args.command}: {e}\n")
        sys.exit(1)

    for report in reports:
        path = _save(report, report_dir)
        print(f"{report.summary()} -> {path}")
        for case in report.failures:
            debug_print(f"  failed: {case.case_id} {case.witness}")

    if not all(report.passed for report in reports):
        sys.stderr.write("Some cases failed\n")
        sys.exit(1)
    return 0


if __name__ == "__main__":
    main()

# EOF
