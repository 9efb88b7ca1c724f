#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 15:40:25 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/__init__.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/__init__.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

"""
freeboson

Exact computation and identity checking for the free boson vertex
operator algebra M(1), its twisted module, the orbifold M(1)^+ and its
Zhu algebra.
"""

from . import exact_math
from . import FockSpace
from . import VertexEngine
from . import HVectors
from . import CommutatorLab
from . import ZhuAlgebra
from . import ExtensionLab
from . import main

from .FockSpace import FockMonomial, FockVector, parse, serialize
from .VerificationReport import VerificationReport

__copyright__ = "Copyright (C) 2026 Yusuke Watanabe"
__version__ = "0.1.0"
__license__ = "MIT"
__author__ = "Yusuke Watanabe"
__author_email__ = "ywatanabe@alumni.u-tokyo.ac.jp"
__url__ = "https://github.com/ywatanabe1989/freeboson"

# EOF
