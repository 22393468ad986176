import json
import subprocess
import sys

import pytest

from quadsub.cli import EXIT_GENERICITY, EXIT_INVARIANT, EXIT_OK, EXIT_USAGE, main

PROBLEM = "field 32003\nvars x v a b c\nseed 3\nform a^2 + b^2 + c^2 + x*v\nform x*v\nform x\n"


@pytest.fixture
def problem_file(tmp_path):
    p = tmp_path / "problem.txt"
    p.write_text(PROBLEM)
    return p


def test_text_output(problem_file, capsys):
    assert main(["--input", str(problem_file)]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("quadsub-certificate 1\n")
    assert "verdict pass" in out and "Case2b h=1" in out


def test_json_output(problem_file, capsys):
    assert main(["--input", str(problem_file), "--emit", "json", "--verify-level", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verify-level"] == "3" and data["pd"] != "-"


def test_seed_flag_overrides_file(problem_file, capsys):
    main(["--input", str(problem_file), "--seed", "11"])
    assert "seed 11" in capsys.readouterr().out


def test_bounds_table(capsys):
    assert main(["--bounds-table", "6"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7 and lines[2].split("\t")[:3] == ["2", "31", "31"]
    assert main(["--bounds-table", "99"]) == EXIT_USAGE


def test_usage_errors(tmp_path, capsys):
    assert main([]) == EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        main(["--verify-level", "7"])
    assert e.value.code == EXIT_USAGE
    bad = tmp_path / "bad.txt"
    bad.write_text("field 32003\nvars x y\nform x^3\n")
    assert main(["--input", str(bad)]) == EXIT_USAGE
    assert "degree 3 exceeds 2 at line 3" in capsys.readouterr().err
    assert main(["--input", str(tmp_path / "missing.txt")]) == EXIT_USAGE
    assert main(["--input", str(bad), "--retries", "-1"]) == EXIT_USAGE


def test_genericity_exhaustion(tmp_path, capsys):
    p = tmp_path / "p.txt"
    p.write_text("vars x y z w\nform x*y + z*w\nform x*z\nform y*w\n")
    assert main(["--input", str(p), "--retries", "0"]) == EXIT_GENERICITY
    assert "genericity" in capsys.readouterr().err


def test_failed_verification_exit_code(problem_file, tmp_path, capsys):
    assert main(["--input", str(problem_file)]) == 0
    doc = capsys.readouterr().out
    good = tmp_path / "good.txt"
    good.write_text(doc)
    assert main(["--verify", str(good)]) == EXIT_OK
    lines = doc.splitlines()
    k = lines.index("quadrics")
    tampered = tmp_path / "bad.txt"
    tampered.write_text("\n".join(lines[:k + 1] + lines[k + 2:]) + "\n")
    assert main(["--verify", str(tampered)]) == EXIT_INVARIANT


def test_fresh_process_reverification(problem_file, tmp_path):
    run = [sys.executable, "-m", "quadsub", "--input", str(problem_file)]
    first = subprocess.run(run, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(run, capture_output=True, text=True, check=True).stdout
    assert first == second
    doc = tmp_path / "doc.txt"
    doc.write_text(first)
    res = subprocess.run([sys.executable, "-m", "quadsub", "--verify", str(doc)],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "verified"
