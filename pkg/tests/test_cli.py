"""CLI contract: flags, formats, exit codes."""

import json
import subprocess
import sys

from supercong.cli import USAGE_ERROR, main, parse_args


def test_parse_args_verify():
    cfg = parse_args(["verify", "--ids", "all", "--primes", "3:500"])
    assert cfg.command == "verify"
    assert cfg.ids is None
    assert (cfg.prime_lo, cfg.prime_hi) == (3, 500)
    assert cfg.fmt == "text" and cfg.jobs == 1 and cfg.seed == 0
    cfg = parse_args(["verify", "--ids", "E1.3,T3.4", "--primes", "5:97",
                      "--format", "json", "--jobs", "4", "--seed", "7",
                      "--coeffwise-max-p", "101"])
    assert cfg.ids == ["E1.3", "T3.4"]
    assert cfg.fmt == "json" and cfg.jobs == 4 and cfg.seed == 7
    assert cfg.coeffwise_max_p == 101


def test_parse_args_list_and_oracle():
    assert parse_args(["list"]).command == "list"
    cfg = parse_args(["oracle-check", "--pmax", "13"])
    assert cfg.command == "oracle-check" and cfg.oracle_max_p == 13


def test_usage_errors_exit_64():
    assert main(["verify", "--primes", "10:5"]) == USAGE_ERROR
    assert main(["verify", "--primes", "nonsense"]) == USAGE_ERROR
    assert main(["verify", "--primes", "3:9", "--jobs", "0"]) == USAGE_ERROR
    assert main(["represent", "--c1", "1", "--c2", "1", "--p", "9"]) == USAGE_ERROR
    assert main(["frobnicate"]) == USAGE_ERROR


def test_verify_end_to_end(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["verify", "--ids", "E1.3,E1.4", "--primes", "3:60",
                 "--format", "json", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["totals"]["FAIL"] == 0
    ids = {rec["id"] for rec in doc["outcomes"]}
    assert ids == {"E1.3", "E1.4"}
    assert all(isinstance(rec["lhs"], (str, type(None))) for rec in doc["outcomes"])


def test_verify_conjecture_failure_exit_code(tmp_path):
    # CJ4.22 fails at p=5 (degenerate tiny prime); conjecture FAIL -> exit 2
    out = tmp_path / "r.json"
    code = main(["verify", "--ids", "CJ4.22", "--primes", "3:30",
                 "--format", "json", "--out", str(out)])
    assert code == 2
    doc = json.loads(out.read_text())
    fails = [r for r in doc["outcomes"] if r["status"] == "FAIL"]
    assert fails and fails[0]["p"] == 5 and fails[0]["witness"]


def test_list_output(capsys):
    assert main(["list"]) == 0
    text = capsys.readouterr().out
    assert "T2.2" in text and "CJ5.5" in text and "conjecture" in text
    assert "p^3" in text  # T2.1 and L4.2 moduli


def test_represent_output(capsys):
    assert main(["represent", "--c1", "1", "--c2", "1", "--p", "13"]) == 0
    text = capsys.readouterr().out
    assert "1*13 = 1*3^2 + 1*2^2" in text
    assert main(["represent", "--c1", "1", "--c2", "1", "--p", "7"]) == 0
    assert "no representation" in capsys.readouterr().out


def test_oracle_check_subcommand(capsys):
    assert main(["oracle-check", "--pmax", "5", "--ids", "E1.3,T3.4,L4.2"]) == 0
    text = capsys.readouterr().out
    assert "L4.2" in text


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "supercong.cli", "verify", "--ids", "E1.3",
         "--primes", "3:20", "--format", "csv"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("id,kind,p,status")
    assert "verify:" in proc.stderr  # wall time lives on stderr only
