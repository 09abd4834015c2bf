"""Scenario parsing, report determinism, exit codes, file formats."""

import subprocess
import sys

import pytest

from nervelab.cli import SELFTEST, main
from nervelab.runner import emit, run
from nervelab.scenario import ScenarioError, parse_scenario

MINIMAL = """\
trunc 4
monoid Z2: elems 0,1; unit 0; mul 0*0=0, 0*1=1, 1*0=1, 1*1=0
job homology nerve(Z2) upto 4
"""

COUNTEREXAMPLE = """\
trunc 3
monoid M0: builtin zero-monoid
job counterexample partial-monoid M0 sub 1 0 p 3
"""

COMPARISON = """\
trunc 3
monoid Z2: builtin cyclic 2
job comparison Z2 upto 3
"""

SUSPENSION = """\
trunc 4
space C: circle
job suspension C upto 3
"""


def test_minimal_scenario_parses_and_runs():
    sc = parse_scenario(MINIMAL)
    assert sc.trunc == 4 and "Z2" in sc.monoids
    report = run(sc)
    assert report.exit_code() == 0
    text = emit(report)
    assert "H_3 = Z/2" in text


def test_undefined_monoid_reports_line_number():
    bad = "monoid Z2: builtin cyclic 2\njob homology nerve(Zx) upto 2\n"
    with pytest.raises(ScenarioError) as err:
        parse_scenario(bad)
    assert err.value.line_no == 2
    assert "Zx" not in str(err.value) or "monoid" in str(err.value)


def test_invalid_monoid_table_rejected_with_line():
    bad = "monoid B: elems 0,1; unit 0; mul 0*0=0, 0*1=1, 1*0=0, 1*1=1\n"
    with pytest.raises(ScenarioError) as err:
        parse_scenario(bad)
    assert err.value.line_no == 1


def test_counterexample_scenario():
    report = run(parse_scenario(COUNTEREXAMPLE))
    assert report.exit_code() == 0
    assert report.results[0].witness


def test_comparison_scenario():
    report = run(parse_scenario(COMPARISON))
    assert report.exit_code() == 0
    assert all("ok" in d or "instance" in d for d in report.results[0].details)


def test_suspension_scenario():
    report = run(parse_scenario(SUSPENSION))
    assert report.exit_code() == 0
    assert any("H~_2(diag) = Z" in d for d in report.results[0].details)


def test_records_deterministic():
    a = emit(run(parse_scenario(SELFTEST)), fmt="records")
    b = emit(run(parse_scenario(SELFTEST)), fmt="records")
    assert a == b
    assert "record 0" in a


def test_failing_job_gives_exit_one(tmp_path):
    scn = tmp_path / "bad.scn"
    scn.write_text("trunc 3\nmonoid Z2: builtin cyclic 2\n"
                   "job pi0 nerve Z2 expect 5\n")
    assert main(["verify", str(scn)]) == 1


def test_cli_selftest_exit_zero(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "[ok]" in out and "FAIL" not in out


def test_cli_build_emits_sset(tmp_path, capsys):
    scn = tmp_path / "b.scn"
    scn.write_text("trunc 3\nspace C: circle\n")
    assert main(["build", str(scn), "--emit-sset"]) == 0
    out = capsys.readouterr().out
    assert "sset N=3" in out and "nondegenerate (1, 1, 0, 0)" in out


def test_cap_flag_flags_job(tmp_path, capsys):
    scn = tmp_path / "cap.scn"
    scn.write_text("trunc 4\nmonoid S3: builtin symmetric3\n"
                   "job homology nerve S3 upto 2\n")
    code = main(["--cap", "100", "homology", str(scn)])
    out = capsys.readouterr().out
    # flagged, not failed: exit stays zero
    assert code == 0
    assert "flagged" in out and "cap" in out


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "nervelab.cli", "selftest",
                           "--format", "records"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "status=pass" in proc.stdout


def test_action_definitions_parse_and_shear():
    scn = """\
trunc 3
monoid Z3: builtin cyclic 3
action tr: Z3 on Z3 by translation
action tv: Z3 on Z3 by trivial
action ex: Z3 on Z3: left 0.0=0, 0.1=1, 0.2=2, 1.0=1, 1.1=2, 1.2=0, \
2.0=2, 2.1=0, 2.2=1; right 0.0=0, 1.0=1, 2.0=2, 0.1=1, 1.1=2, 2.1=0, \
0.2=2, 1.2=0, 2.2=1
job shear tr expect bijective
job shear ex expect bijective
"""
    report = run(parse_scenario(scn))
    assert report.exit_code() == 0


def test_action_axiom_violation_reported_with_line():
    bad = ("monoid Z2: builtin cyclic 2\n"
           "action a: Z2 on Z2: left 0.0=0, 0.1=1, 1.0=1, 1.1=1; "
           "right 0.0=0, 1.0=1, 0.1=1, 1.1=0\n")
    with pytest.raises(ScenarioError) as err:
        parse_scenario(bad)
    assert err.value.line_no == 2


def test_shipped_scenarios_run_clean():
    import pathlib
    root = pathlib.Path(__file__).resolve().parent.parent / "scenarios"
    commands = {
        "comparison.scn": "verify",
        "counterexample.scn": "counterexample",
        "suspension.scn": "homology",
        "homology.scn": "homology",
        "regression.scn": "verify",
    }
    for name, cmd in commands.items():
        path = root / name
        assert path.exists(), name
        assert main([cmd, str(path), "--format", "records"]) == 0, name


def test_scenario_loads_external_sset(tmp_path):
    from nervelab.constructions import simplicial_circle
    from nervelab.sset import serialize
    (tmp_path / "c.sset").write_text(serialize(simplicial_circle(3)))
    scn = tmp_path / "s.scn"
    scn.write_text("trunc 3\nsset C c.sset\njob verify C\n"
                   "job homology product C C upto 2\njob pi0 C expect 1\n")
    assert main(["verify", str(scn)]) == 0
    assert main(["homology", str(scn), "--format", "records"]) == 0


def test_nonpositive_truncation_rejected():
    with pytest.raises(ScenarioError):
        parse_scenario("trunc 0\n")


def test_named_situations_and_augmentations():
    scn = """\
trunc 3
monoid Z4: builtin cyclic 4
monoid Z2: builtin cyclic 2
situation S: submonoid 0 2 of Z4
augmentation A: pointed-translation Z2
job verify wedgeof S
job homology wedgeof S upto 2
job comparison A upto 3
"""
    report = run(parse_scenario(scn))
    assert report.exit_code() == 0
    kinds = [r.kind for r in report.results]
    assert kinds == ["verify", "homology", "comparison"]
