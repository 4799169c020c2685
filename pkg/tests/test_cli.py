import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from boothlem.cli import build_parser, main, run_command

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    ("radius_starlike.json", "radius --class starlike --alpha 0.5 --format json", 0),
    ("inscribed_center1.txt", "inscribed --alpha 0.5 --center 1 --format text", 0),
    ("janowski_bad_A.txt", "radius --class janowski --A 1.5 --alpha 0.5", 2),
    ("janowski_bad_A.json", "radius --class janowski --A 1.5 --alpha 0.5 --format json", 2),
]


def run(line):
    return run_command(build_parser().parse_args(line.split()))


@pytest.mark.parametrize("name, line, code", GOLDEN_CASES)
def test_golden(name, line, code):
    out, got = run(line)
    assert got == code
    assert out == (GOLDEN / name).read_text()


def test_radius_json_fields():
    doc = json.loads(run("radius --class starlike --alpha 0.5 --format json")[0])
    assert list(doc) == ["schema_version", "command", "inputs", "results", "status"]
    assert doc["results"] == {"radius": 0.314269680527, "branch": "rho0", "clamped": False}


def test_inscribed_text_exact():
    assert run("inscribed --alpha 0.5 --center 1 --format text")[0] == "r_a = 0.666666666667  R_a = 2.000000000000\n"


def test_error_names_parameter():
    doc = json.loads(run("radius --class janowski --A 1.5 --alpha 0.5 --format json")[0])
    assert doc["status"] == "error" and doc["error"]["parameter"] == "A"
    assert "A=1.5" in doc["error"]["message"]


@pytest.mark.parametrize(
    "line, param",
    [
        ("radius --class janowski --A 0.5 --alpha 0.5", "B"),
        ("radius --class starlike-order --alpha 0.5", "beta"),
        ("radius --alpha 0.5", "class"),
        ("radius --class starlike --alpha 1.0", "alpha"),
        ("inscribed --alpha 0.5 --center 3", "center"),
        ("inscribed --alpha 0.5", "center"),
        ("inclusion --alpha 0.5 --A 0.1 --B 0.2", "A"),
        ("sharpness --class fournier --beta 0.3333333333333333 --alpha 0.5", "class"),
    ],
)
def test_input_errors_exit_two(line, param):
    out, code = run(line + " --format json")
    assert code == 2 and json.loads(out)["error"]["parameter"] == param


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
@pytest.mark.parametrize(
    "line",
    [
        "radius --class m-class --beta 1.2 --alpha 0.4",
        "verify --alpha 0.3 --center 0.9",
        "verify --class parvatham --beta 0.6 --alpha 0.7",
        "sharpness --class convex --alpha 0.5",
        "inclusion --alpha 0.5 --A 0.1 --B -0.1",
        "boundary --alpha 0.5 --samples 16",
    ],
)
def test_deterministic(line, fmt):
    assert run(f"{line} --format {fmt}") == run(f"{line} --format {fmt}")


def test_verify_round_trip():
    doc = json.loads(run("verify --class janowski --A 0.5 --B -0.25 --alpha 0.3 --format json")[0])
    res = doc["results"]
    assert doc["status"] == ("ok" if res["abs_gap"] <= res["tolerance"] else "fail") == "ok"
    assert {"closed_form", "oracle", "abs_gap", "tolerance"} <= set(res)


def test_verify_forced_failure_exit_one():
    out, code = run("verify --class starlike --alpha 0.5 --tolerance 1e-16 --format json")
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "fail" and doc["results"]["abs_gap"] > 1e-16


def test_sharpness_sub_radius_fails():
    out, code = run("sharpness --class starlike --alpha 0.5 --radius-override 0.31 --format json")
    assert code == 1 and json.loads(out)["results"]["witnessed"] is False


def test_csv_single_record():
    rows = list(csv.reader(io.StringIO(run("radius --class convex --alpha 0.5 --format csv")[0])))
    assert rows[0][:2] == ["schema_version", "status"] and len(rows) == 2


def test_boundary_csv():
    out, code = run("boundary --alpha 0.5 --samples 8 --format csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "t,u,v" and lines[1] == "0,3,0" and len(lines) == 9


def test_boundary_alpha_zero_unit_circle():
    rows = list(csv.DictReader(io.StringIO(run("boundary --alpha 0 --samples 8 --format csv")[0])))
    assert len(rows) == 8
    for row in rows:
        assert (float(row["u"]) - 1) ** 2 + float(row["v"]) ** 2 == pytest.approx(1, abs=1e-11)


def test_boundary_json_and_default_samples():
    doc = json.loads(run("boundary --alpha 0.2 --format json")[0])
    assert len(doc["results"]["points"]) == 256
    assert list(doc["results"]["points"][0]) == ["t", "u", "v"]


def test_boundary_too_few_samples():
    out, code = run("boundary --alpha 0.5 --samples 4")
    assert code == 2 and "samples" in out


def test_main_writes_errors_to_stderr(capsys):
    assert main(["radius", "--class", "janowski", "--A", "1.5", "--alpha", "0.5"]) == 2
    captured = capsys.readouterr()
    assert captured.out == "" and captured.err.startswith("error: A:")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "boothlem", "inscribed", "--alpha", "0.5", "--center", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == (GOLDEN / "inscribed_center1.txt").read_text()
