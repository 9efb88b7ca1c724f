#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 14:40:11 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/load_config.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/load_config.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import psutil

from .debug_print import debug_print

DEFAULT_CONFIG_FILE = "freeboson.cfg"
DEFAULT_CACHE_DIR = "hvec_cache"


def _default_workers() -> int:
    return psutil.cpu_count(logical=False) or 1


def _parse_list(text: str, cast) -> List:
    return [cast(item.strip()) for item in text.split(",") if item.strip()]


@dataclass
class FreebosonConfig:
    """
    Defaults for the verification suites.

    Read from a flat key=value file; "#" starts a comment. The cache
    directory can be overridden with FREEBOSON_CACHE_DIR.
    """

    cache_dir: Optional[str] = DEFAULT_CACHE_DIR
    report_dir: str = "reports"
    max_weight: int = 6
    hcomm_max_weight: int = 8
    index_range: int = 4
    zhu_cutoff: int = 14
    full_pair_cutoff: int = 10
    lambda_samples: List[Fraction] = field(
        default_factory=lambda: [Fraction(1), Fraction(3, 2), Fraction(1, 2)]
    )
    k_values: List[int] = field(default_factory=lambda: [1, 2, 3])
    workers: int = field(default_factory=_default_workers)
    seed: int = 0
    borcherds_samples: int = 200
    gap_bound: int = 200

    _CASTS = {
        "cache_dir": str,
        "report_dir": str,
        "max_weight": int,
        "hcomm_max_weight": int,
        "index_range": int,
        "zhu_cutoff": int,
        "full_pair_cutoff": int,
        "lambda_samples": lambda text: _parse_list(text, Fraction),
        "k_values": lambda text: _parse_list(text, int),
        "workers": int,
        "seed": int,
        "borcherds_samples": int,
        "gap_bound": int,
    }

    def update(self, key: str, value: str) -> None:
        if key not in self._CASTS:
            raise KeyError(f"Unknown configuration key: {key}")
        try:
            setattr(self, key, self._CASTS[key](value))
        except ValueError as e:
            raise ValueError(f"Bad value for {key}: {value!r} ({e})") from e


def load_config(path: Optional[str] = None) -> FreebosonConfig:
    """
    Parameters
    ----------
    path : str, optional
        Config file; FREEBOSON_CONFIG, then ./freeboson.cfg when omitted

    Returns
    -------
    FreebosonConfig
        Defaults overridden by the file and the environment
    """
    config = FreebosonConfig()
    explicit = path is not None
    path = path or os.environ.get("FREEBOSON_CONFIG") or DEFAULT_CONFIG_FILE
    if os.path.exists(path):
        with open(path, "r") as f:
            for lineno, line in enumerate(f, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
                key, value = (part.strip() for part in line.split("=", 1))
                config.update(key, value)
        debug_print(f"Configuration loaded from {path}")
    elif explicit:
        sys.stderr.write(f"Config file not found: {path}\n")
        raise FileNotFoundError(path)

    cache_dir = os.environ.get("FREEBOSON_CACHE_DIR")
    if cache_dir:
        config.cache_dir = cache_dir
    return config

# EOF
