#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 18:05:12 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/setup.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/setup.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

import re
from codecs import open
from os import path

from setuptools import find_packages, setup

################################################################################
PACKAGE_NAME = "freeboson"
PACKAGES = find_packages(where="src")
DESCRIPTION = "Exact verification of the free boson orbifold vertex operator algebra M(1)^+"
KEYWORDS = ["vertex-operator-algebra", "zhu-algebra", "orbifold", "free-boson", "sympy"]
CLASSIFIERS = [
    "Programming Language :: Python :: 3",
    "License :: OSI Approved :: MIT License",
    "Topic :: Scientific/Engineering :: Mathematics",
]
################################################################################

root_dir = path.abspath(path.dirname(__file__))


def _requirements():
    return [
        name.rstrip()
        for name in open(path.join(root_dir, "requirements.txt")).readlines()
        if name.strip() and "--no-deps" not in name
    ]


def _dunder(name, text):
    return re.search(rf"__{name}__\s*=\s*[\'\"](.+?)[\'\"]", text).group(1)


with open(path.join(root_dir, "src", PACKAGE_NAME, "__init__.py")) as f:
    init_text = f.read()
    version = _dunder("version", init_text)
    license = _dunder("license", init_text)
    author = _dunder("author", init_text)
    author_email = _dunder("author_email", init_text)
    url = _dunder("url", init_text)

assert version
assert license
assert author
assert author_email
assert url

with open(path.join(root_dir, "README.md"), encoding="utf-8") as f:
    long_description = f.read()

setup(
    package_dir={"": "src"},
    name=PACKAGE_NAME,
    packages=PACKAGES,
    version=version,
    license=license,
    install_requires=_requirements(),
    author=author,
    author_email=author_email,
    url=url,
    description=DESCRIPTION,
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=KEYWORDS,
    classifiers=CLASSIFIERS,
    python_requires=">=3.8",
    entry_points={
        "console_scripts": [
            "freeboson=freeboson.main:main",
        ],
    },
)

# EOF
