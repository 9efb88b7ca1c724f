#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 09:02:11 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/debug_print.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/debug_print.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

import sys


def is_debug_mode() -> bool:
    return os.environ.get("FREEBOSON_DEBUG", "").lower() in ("true", "yes", "1")


def debug_print(message, is_debug_mode_=False):
    if is_debug_mode_ or is_debug_mode():
        sys.stderr.write(f"[DEBUG]: {str(message)}\n")

# EOF
