"""End-to-end tests of the command line front end."""

import json
import math
import shutil
import subprocess

import pytest

from abharmonic.cli import main
from abharmonic.verify import CHECK_NAMES


def parse_csv(text):
    lines = text.strip().splitlines()
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


@pytest.fixture
def rot_json(tmp_path):
    path = tmp_path / "rot.json"
    path.write_text(json.dumps({"1": [1.0, 0.0]}))
    return str(path)


# -- hypergeom -------------------------------------------------------------


def test_hypergeom_linear_case(capsys):
    rc = main(
        ["--cmd", "hypergeom", "--alpha", "-1", "--beta", "-1", "--p", "1",
         "--radii", "0,0.25,0.5"]
    )
    out, _ = capsys.readouterr()
    assert rc == 0
    rows = parse_csv(out)
    assert [r["x"] for r in rows] == ["0", "0.25", "0.5"]
    for row in rows:
        x = float(row["x"])
        assert float(row["F"]) == pytest.approx(1.0 + x, rel=1e-13)
        assert float(row["dF"]) == pytest.approx(1.0, rel=1e-13)
        assert float(row["limitF"]) == pytest.approx(2.0, rel=1e-13)


def test_hypergeom_json_format(capsys):
    rc = main(
        ["--cmd", "hypergeom", "--alpha", "0.5", "--beta", "0.5", "--p", "1.5",
         "--radii", "0.3", "--format", "json"]
    )
    out, _ = capsys.readouterr()
    assert rc == 0
    payload = json.loads(out)
    assert len(payload) == 1
    assert set(payload[0]) == {"x", "F", "dF", "limitF"}


def test_hypergeom_divergent_limit_is_nan(capsys):
    # c - a - b = 0 has no finite boundary value
    rc = main(
        ["--cmd", "hypergeom", "--alpha", "1", "--beta", "1", "--p", "2",
         "--radii", "0.5"]
    )
    out, _ = capsys.readouterr()
    assert rc == 0
    assert math.isnan(float(parse_csv(out)[0]["limitF"]))


def test_hypergeom_needs_grid(capsys):
    rc = main(["--cmd", "hypergeom", "--alpha", "0.5", "--beta", "0.5"])
    _, err = capsys.readouterr()
    assert rc == 2
    assert "error" in err


# -- extend ----------------------------------------------------------------


def test_extend_classical_rotation(rot_json, capsys):
    rc = main(
        ["--cmd", "extend", "--alpha", "0", "--beta", "0", "--in", rot_json,
         "--radii", "0.5"]
    )
    out, _ = capsys.readouterr()
    assert rc == 0
    rows = parse_csv(out)
    assert len(rows) == 16  # one radius, sixteen phases
    for row in rows:
        r, th = float(row["r"]), float(row["theta"])
        assert float(row["re_u"]) == pytest.approx(r * math.cos(th), abs=1e-12)
        assert float(row["im_u"]) == pytest.approx(r * math.sin(th), abs=1e-12)
        assert float(row["re_dz"]) == pytest.approx(1.0, abs=1e-12)
        assert float(row["im_dz"]) == pytest.approx(0.0, abs=1e-12)
        assert abs(complex(float(row["re_dzbar"]), float(row["im_dzbar"]))) < 1e-12
        assert float(row["route_disagreement"]) < 1e-7


def test_extend_requires_input(capsys):
    rc = main(["--cmd", "extend", "--alpha", "1", "--beta", "1"])
    _, err = capsys.readouterr()
    assert rc == 2
    assert "--in" in err


def test_extend_requires_pair(rot_json, capsys):
    rc = main(["--cmd", "extend", "--in", rot_json])
    _, err = capsys.readouterr()
    assert rc == 2


def test_extend_rejects_nonintegrable_pair(rot_json, capsys):
    rc = main(
        ["--cmd", "extend", "--alpha", "-0.5", "--beta", "-0.6", "--in", rot_json]
    )
    _, err = capsys.readouterr()
    assert rc == 2
    assert "error" in err


def test_extend_rejects_malformed_csv(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("theta,re\n0.0,1.0\n0.9,1.0\n1.8,1.0\n")  # 3 rows, skewed grid
    rc = main(["--cmd", "extend", "--alpha", "1", "--beta", "1", "--in", str(bad)])
    _, err = capsys.readouterr()
    assert rc == 2


def test_extend_output_is_deterministic(rot_json, tmp_path, capsys):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["--cmd", "extend", "--alpha", "0.5", "--beta", "0.5", "--in", rot_json]
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


# -- hardy-scan ------------------------------------------------------------


def test_hardy_scan_profiles(rot_json, capsys):
    rc = main(
        ["--cmd", "hardy-scan", "--alpha", "1", "--beta", "1", "--in", rot_json]
    )
    out, _ = capsys.readouterr()
    assert rc == 0
    rows = parse_csv(out)
    assert len(rows) == 4 * 5  # four targets, five default radii
    by_target = {}
    for row in rows:
        by_target.setdefault(row["target"], []).append(row)
    assert set(by_target) == {"u", "dz", "dzbar", "dtheta"}
    # the (1,1) extension of e^{i theta} is z: flat mean r, zero conjugate part
    for row in by_target["u"]:
        assert float(row["mean"]) == pytest.approx(float(row["r"]), abs=1e-9)
        assert abs(float(row["fitted_exponent"])) < 0.05
    for row in by_target["dzbar"]:
        assert float(row["mean"]) == 0.0
        assert math.isnan(float(row["fitted_exponent"]))


def test_hardy_scan_rejects_small_p(rot_json, capsys):
    rc = main(
        ["--cmd", "hardy-scan", "--alpha", "1", "--beta", "1", "--in", rot_json,
         "--p", "0.5"]
    )
    _, err = capsys.readouterr()
    assert rc == 2
    assert "--p" in err


def test_infinite_p_accepted(rot_json, capsys):
    rc = main(
        ["--cmd", "hardy-scan", "--alpha", "1", "--beta", "1", "--in", rot_json,
         "--p", "inf"]
    )
    out, _ = capsys.readouterr()
    assert rc == 0
    assert parse_csv(out)[0]["p"] == "inf"


# -- verify ----------------------------------------------------------------


def test_verify_targeted_divergent_pair(capsys):
    rc = main(["--cmd", "verify", "--alpha", "-0.25", "--beta", "-0.25"])
    out, _ = capsys.readouterr()
    assert rc == 0
    assert "rigidity_zero" in out
    assert "area cutoff" in out
    assert "DIVERGENT-as-expected" in out
    assert "FAIL" not in out


def test_verify_targeted_inadmissible_pair(capsys):
    rc = main(["--cmd", "verify", "--alpha", "-0.5", "--beta", "-0.6"])
    out, _ = capsys.readouterr()
    assert rc == 2
    assert "inadmissible" in out


def test_verify_rejects_negative_integer_weight(capsys):
    rc = main(["--cmd", "verify", "--alpha", "-1", "--beta", "0"])
    _, err = capsys.readouterr()
    assert rc == 2
    assert "negative integer" in err


def test_verify_full_suite(capsys, tmp_path):
    table = tmp_path / "report.csv"
    rc = main(["--cmd", "verify", "--out", str(table)])
    out, _ = capsys.readouterr()
    lines = [line for line in out.strip().splitlines()]
    assert rc == 0
    assert len(lines) == len(CHECK_NAMES)
    for line, name in zip(lines, CHECK_NAMES):
        assert line.startswith("PASS " + name)
    rows = parse_csv(table.read_text())
    assert [r["name"] for r in rows] == list(CHECK_NAMES)
    assert all(r["passed"] == "True" for r in rows)


# -- console entry point ---------------------------------------------------


@pytest.mark.skipif(shutil.which("abharmonic") is None, reason="script not installed")
def test_console_script_runs():
    proc = subprocess.run(
        ["abharmonic", "--cmd", "hypergeom", "--alpha", "-1", "--beta", "-1",
         "--p", "1", "--radii", "0.5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert parse_csv(proc.stdout)[0]["F"] == "1.5"
