"""Command-line interface: output formats, determinism, exit codes."""
import io
import json
import sys

import pytest

from besselprod.cli import (EXIT_DOMAIN, EXIT_OK, EXIT_USAGE,
                            EXIT_VERIFICATION, main)


def _run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_eval_json(capsys):
    code, out = _run(["eval", "--family", "phi", "--nu", "0.5", "--z", "1"],
                     capsys)
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["command"] == "eval"
    assert rec["outputs"]["value"] == pytest.approx(0.42239318701811266537)


def test_zeros_json_lines(capsys):
    code, out = _run(["zeros", "--family", "j", "--nu", "0", "--n", "3"],
                     capsys)
    assert code == EXIT_OK
    lines = out.strip().split("\n")
    assert len(lines) == 3
    recs = [json.loads(line) for line in lines]
    assert recs[0]["outputs"]["zero"] == pytest.approx(2.4048255576957727686)
    lo, hi = recs[0]["outputs"]["bracket"]
    assert lo < recs[0]["outputs"]["zero"] < hi


def test_csv_format(capsys):
    code, out = _run(["--format", "csv", "zeros", "--family", "j",
                      "--nu", "0", "--n", "2"], capsys)
    assert code == EXIT_OK
    lines = out.strip().split("\n")
    assert lines[0] == "command,inputs,outputs,provenance"
    assert len(lines) == 3


def test_rayleigh_closed_exact(capsys):
    code, out = _run(["rayleigh", "--family", "tau", "--nu", "1/2",
                      "--k", "1"], capsys)
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["outputs"]["sum"] == "1/70"


def test_radii_and_bounds(capsys):
    code, out = _run(["radii", "--kind", "g", "--mode", "starlike",
                      "--nu", "0", "--alpha", "0"], capsys)
    assert code == EXIT_OK
    rec = json.loads(out)
    assert 2.0939 < rec["outputs"]["radius"] < 2.123
    code, out = _run(["bounds", "--kind", "g", "--mode", "starlike",
                      "--nu", "0"], capsys)
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["outputs"]["verdict"] is True


def test_thresholds_command(capsys):
    code, out = _run(["thresholds", "--kind", "f", "--mode", "starlike",
                      "--alpha", "0"], capsys)
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["outputs"]["nu"] == pytest.approx(-0.44, abs=0.005)


def test_certify_command(capsys):
    code, out = _run(["certify", "--family", "phi", "--nu", "0/1",
                      "--nmax", "8"], capsys)
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["outputs"]["report"] == "8/8 hyperbolic"


def test_verify_suite(capsys):
    code, out = _run(["verify", "--suite", "sums"], capsys)
    assert code == EXIT_OK
    for line in out.strip().split("\n"):
        assert json.loads(line)["outputs"]["ok"] is True


def test_exit_codes(capsys):
    code, _ = _run(["radii", "--kind", "u", "--mode", "starlike",
                    "--nu", "-2"], capsys)
    assert code == EXIT_DOMAIN
    code, _ = _run(["certify", "--family", "phi", "--nu", "not-a-number",
                    "--nmax", "4"], capsys)
    assert code == EXIT_DOMAIN


def test_usage_error_exit_code(capsys):
    old_stderr = sys.stderr
    sys.stderr = io.StringIO()
    try:
        assert main(["bogus-subcommand"]) == EXIT_USAGE
        assert main([]) == EXIT_USAGE
    finally:
        sys.stderr = old_stderr


def test_deterministic_output(capsys):
    argv = ["bounds", "--kind", "v", "--mode", "convex", "--nu", "1.5"]
    _, out1 = _run(argv, capsys)
    _, out2 = _run(argv, capsys)
    assert out1 == out2


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "settings.cfg"
    cfg.write_text("# tighter bisection\nbisect_width = 1e-12\n")
    code, out = _run(["--config", str(cfg), "zeros", "--family", "j",
                      "--nu", "0", "--n", "1"], capsys)
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["outputs"]["zero"] == pytest.approx(2.4048255576957727686)
