#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 17:56:44 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/tests/test_cli.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/tests/test_cli.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

import json
from fractions import Fraction

import pytest

from freeboson.FockSpace import GeneratorProfile
from freeboson.HVectors import HVectorCache
from freeboson.VerificationReport import VerificationReport
from freeboson.VertexEngine import conformal_vector
from freeboson.load_config import FreebosonConfig, load_config
from freeboson.main import main
from freeboson.parse_args import parse_args
from freeboson.suites import (
    SUITES,
    borcherds_samples,
    condense_readings,
    lattice_E_star_E,
    run_borcherds,
    run_lattice,
    run_suite,
    run_table1,
)

ENV_VARS = (
    "FREEBOSON_CONFIG",
    "FREEBOSON_CACHE_DIR",
    "FREEBOSON_REPORT_DIR",
    "FREEBOSON_WORKERS",
    "FREEBOSON_TIMING",
    "FREEBOSON_SEED",
    "FREEBOSON_DEBUG",
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    """Run every test from an empty directory without freeboson variables."""
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    HVectorCache.reset()
    yield
    HVectorCache.reset()


################################################################################
# Configuration
################################################################################


def test_config_defaults():
    config = load_config()
    assert config.max_weight == 6
    assert config.zhu_cutoff == 14
    assert config.full_pair_cutoff == 10
    assert config.lambda_samples == [1, Fraction(3, 2), Fraction(1, 2)]
    assert config.workers >= 1
    assert config.cache_dir == "hvec_cache"


def test_config_file(tmp_path):
    path = tmp_path / "custom.cfg"
    path.write_text(
        "# suite defaults\n"
        "max_weight = 4  # smaller\n"
        "lambda_samples = 1, 1/2\n"
        "k_values = 2\n"
        "\n"
        "report_dir = out\n"
    )
    config = load_config(str(path))
    assert config.max_weight == 4
    assert config.lambda_samples == [1, Fraction(1, 2)]
    assert config.k_values == [2]
    assert config.report_dir == "out"


def test_config_from_environment(tmp_path, monkeypatch):
    (tmp_path / "env.cfg").write_text("seed = 7\n")
    monkeypatch.setenv("FREEBOSON_CONFIG", str(tmp_path / "env.cfg"))
    monkeypatch.setenv("FREEBOSON_CACHE_DIR", str(tmp_path / "cache"))
    config = load_config()
    assert config.seed == 7
    assert config.cache_dir == str(tmp_path / "cache")


def test_config_local_file(tmp_path):
    (tmp_path / "freeboson.cfg").write_text("gap_bound = 30\n")
    assert load_config().gap_bound == 30


@pytest.mark.parametrize(
    "content,error",
    [("colour = blue\n", KeyError), ("max_weight = six\n", ValueError), ("max_weight\n", ValueError)],
)
def test_config_errors(tmp_path, content, error):
    path = tmp_path / "bad.cfg"
    path.write_text(content)
    with pytest.raises(error):
        load_config(str(path))


def test_config_missing_explicit_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(str(tmp_path / "missing.cfg"))


def test_config_update():
    config = FreebosonConfig()
    config.update("workers", "3")
    assert config.workers == 3
    with pytest.raises(KeyError):
        config.update("nothing", "1")


################################################################################
# Reports
################################################################################


def test_report_basics(tmp_path):
    report = VerificationReport("demo", {"n": Fraction(1, 2)})
    report.add("b", True, value=Fraction(3, 4))
    report.add("a", False, {"lhs": Fraction(1, 3)})
    assert not report.passed
    assert [c.case_id for c in report.failures] == ["a"]
    assert report.summary() == "[FAIL] demo: 1/2 cases passed"

    data = json.loads(report.to_json())
    assert [c["case_id"] for c in data["cases"]] == ["a", "b"]
    assert data["parameters"] == {"n": "1/2"}
    assert data["cases"][0]["witness"] == {"lhs": "1/3"}

    path = report.save(str(tmp_path / "reports" / "demo.json"))
    loaded = VerificationReport.load(path)
    assert loaded.to_json() == report.to_json()


def test_report_extend_and_lookup():
    part = VerificationReport("part")
    part.add("x", True)
    report = VerificationReport("whole").extend(part, "p/")
    assert report.case("p/x").passed
    with pytest.raises(KeyError):
        report.case("x")


def test_condense_readings():
    report = VerificationReport("appendix")
    report.add("L-H4/stated", True)
    report.add("L-H4/stated/central", False, {"difference": "1"})
    report.add("L-H4/amended", True)
    report.add("L-H4/amended/central", True)
    report.add("H4(0)-H4/stated", False)
    report.add("L-L/stated", True)
    report.add("specializations/other", True)
    condensed = condense_readings(report)
    ids = sorted(c.case_id for c in condensed.cases)
    assert ids == ["H4(0)-H4/readings", "L-H4/readings", "L-L/readings", "specializations/other"]
    case = condensed.case("L-H4/readings")
    assert case.passed
    assert case.details["surviving"] == ["amended"]
    assert "stated" in case.details["failing"]
    assert not condensed.case("H4(0)-H4/readings").passed


################################################################################
# Suites
################################################################################


def test_borcherds_samples_are_seeded():
    first, second = borcherds_samples(6, 3), borcherds_samples(6, 3)
    assert [(s[0], s[4], s[5], s[6]) for s in first] == [(s[0], s[4], s[5], s[6]) for s in second]
    assert [s[0] for s in first] == ["untwisted", "twisted"] * 3


def test_run_borcherds():
    report = run_borcherds(count=6, seed=1)
    assert report.passed, report.failures
    assert report.case("twisted/0001").passed


def test_lattice_suite():
    expected = conformal_vector(GeneratorProfile.lattice(1)) * 4
    assert lattice_E_star_E(1) == expected
    report = run_lattice((1, 2))
    assert report.passed, report.failures
    assert report.case("k=2/V_{1/4+L}").passed


def test_table1_records_matching_signs():
    report = run_table1((1,))
    assert report.passed
    assert 1 in report.parameters["matching_delta_signs"]


def test_run_suite_rejects_unknown_names():
    with pytest.raises(ValueError):
        run_suite("nothing", FreebosonConfig(workers=1))


def test_run_suite_applies_overrides():
    report = run_suite("gap", FreebosonConfig(workers=1), bound=5, timing=True)
    assert report.parameters["bound"] == 5
    assert "seconds" in report.timing


def test_run_suite_keeps_explicit_zero_overrides():
    config = FreebosonConfig(workers=1, borcherds_samples=50)
    report = run_suite("borcherds", config, samples=0)
    assert report.parameters["samples"] == 0
    assert report.cases == []
    with pytest.raises(ValueError):
        run_suite("gap", config, bound=0)


################################################################################
# Command line
################################################################################


def test_parse_args():
    args = parse_args(["verify", "table1", "--workers", "2", "--range", "3"])
    assert args.command == "verify"
    assert args.suite == "table1"
    assert args.workers == 2
    assert args.index_range == 3
    args = parse_args(["hvec", "build", "--r", "3"])
    assert (args.command, args.action, args.r) == ("hvec", "build", 3)


def test_parse_args_environment(monkeypatch):
    monkeypatch.setenv("FREEBOSON_SEED", "11")
    assert parse_args(["verify", "borcherds"]).seed == 11


@pytest.mark.parametrize(
    "argv",
    [["verify", "gap", "--bound", "-1"], ["verify", "nothing"], ["hvec", "build"], []],
)
def test_parse_args_rejects(argv):
    with pytest.raises(SystemExit):
        parse_args(argv)


def test_every_suite_is_selectable():
    for name in SUITES:
        assert parse_args(["verify", name]).suite == name


def test_main_writes_reports(tmp_path):
    assert main(["verify", "gap", "--bound", "5", "--output-dir", str(tmp_path / "out")]) == 0
    data = json.loads((tmp_path / "out" / "gap.json").read_text())
    assert data["passed"]
    assert data["suite"] == "gap"


def test_main_hvec_build(tmp_path, monkeypatch):
    monkeypatch.setenv("FREEBOSON_CACHE_DIR", str(tmp_path / "cache"))
    assert main(["hvec", "build", "--r", "2", "--output-dir", str(tmp_path)]) == 0
    assert sorted(os.listdir(tmp_path / "cache")) == ["H2.txt", "H4.txt"]
    assert json.loads((tmp_path / "hvec.json").read_text())["passed"]


def test_main_hvec_build_uses_default_cache(tmp_path):
    assert main(["hvec", "build", "--r", "2"]) == 0
    assert sorted(os.listdir(tmp_path / "hvec_cache")) == ["H2.txt", "H4.txt"]
    first = json.loads((tmp_path / "reports" / "hvec.json").read_text())

    # a fresh process finds both vectors on disk
    HVectorCache.reset()
    assert main(["hvec", "build", "--r", "2"]) == 0
    second = json.loads((tmp_path / "reports" / "hvec.json").read_text())
    cases = {case["case_id"]: case for case in second["cases"]}
    assert cases["cache"]["details"]["hits"] == 2
    assert [c["details"]["vector"] for c in first["cases"] if c["case_id"] == "H4"] == [
        cases["H4"]["details"]["vector"]
    ]


def test_main_exits_on_missing_config(tmp_path):
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "gap", "--config", str(tmp_path / "missing.cfg")])
    assert excinfo.value.code == 1


if __name__ == "__main__":
    pytest.main(["-xvs", __file__])

# EOF
