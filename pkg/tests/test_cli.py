import json

import pytest

from hullcert import cli


def run_json(tmp_path, name, argv):
    out = tmp_path / f"{name}.json"
    code = cli.run(argv + ["--out", str(out)])
    return code, json.loads(out.read_text())


def test_lb_command(tmp_path):
    code, report = run_json(tmp_path, "lb", [
        "lb", "--family", "wheel", "--m", "4", "--relaxation", "triangle",
        "--x", "0.5,0.5,0.5,0.5,0.5"])
    assert code == 0
    assert report["schema"] == "hullcert-report/1"
    assert report["lb"] == "1/1"


def test_envelope_command(tmp_path):
    code, report = run_json(tmp_path, "env", [
        "envelope", "--family", "split", "--n1", "2", "--n2", "1",
        "--x", "0.5,0.5,0.5"])
    assert code == 0
    # complete_split(2,1) is a triangle; its envelope at all-1/2 is 1/2
    assert report["envelope"] == "1/2"
    assert report["f"] == "3/4"
    assert report["upper_boundary"] == "3/2"


def test_split_cert_and_verify_round_trip(tmp_path):
    code, report = run_json(tmp_path, "cert", [
        "split-cert", "--n1", "4", "--n2", "5",
        "--x", "0.85,0.8,0.7,0.5,0.8,0.6,0.5,0.3,0.1"])
    assert code == 0
    assert report["edge_sum"] == "161/20"
    assert report["lb"] == "161/20"
    assert report["envelope"] == "161/20"
    assert report["S"] == [7, 8, 9]

    cert_file = tmp_path / "cert.json"
    code2, verdict = run_json(tmp_path, "verify", [
        "verify", "--certificate", str(cert_file)])
    assert code2 == 0
    assert verdict["ok"] is True
    assert verdict["equality"] is True


def test_wheel_cert_and_verify_round_trip(tmp_path):
    code, report = run_json(tmp_path, "wcert", [
        "wheel-cert", "--x", "0.5,0.75,0.25,0.5,0.5"])
    assert code == 0
    assert report["ok"] is True
    code2, verdict = run_json(tmp_path, "wverify", [
        "verify", "--certificate", str(tmp_path / "wcert.json")])
    assert code2 == 0
    assert verdict["ok"] is True


def test_five_wheel_command(tmp_path):
    code, report = run_json(tmp_path, "fw", ["five-wheel"])
    assert code == 0
    assert report["ok"] is True
    assert report["left"]["violation"] == "1/6"
    assert report["right"]["violation"] == "1/6"


def test_suite_families(tmp_path):
    code, report = run_json(tmp_path, "s1", [
        "suite", "--family", "even-wheel", "--m", "4", "--samples", "5",
        "--seed", "3"])
    assert code == 0 and report["ok"] is True
    code, report = run_json(tmp_path, "s2", [
        "suite", "--family", "split", "--sizes", "2-1,3-2", "--samples", "4",
        "--seed", "3", "--boundary-prob", "0.1"])
    assert code == 0 and report["ok"] is True
    code, report = run_json(tmp_path, "s3", [
        "suite", "--family", "bipartite", "--samples", "6", "--seed", "3"])
    assert code == 0 and report["ok"] is True


def test_suite_is_deterministic_for_a_seed(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for path in (a, b):
        assert cli.run(["suite", "--family", "split", "--sizes", "2-1",
                        "--samples", "3", "--seed", "7",
                        "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_usage_errors_exit_2():
    assert cli.run(["no-such-command"]) == 2
    assert cli.run([]) == 2
    assert cli.run(["lb", "--family", "wheel", "--x", "0.5"]) == 2  # no --m
    assert cli.run(["lb", "--family", "wheel", "--m", "4",
                    "--x", "0.5,0.5"]) == 2  # wrong dimension
    assert cli.run(["verify", "--certificate", "/nonexistent.json"]) == 2


def test_stdout_output(capsys):
    code = cli.run(["lb", "--family", "wheel", "--m", "4",
                    "--relaxation", "triangle",
                    "--x", "0.5,0.5,0.5,0.5,0.5"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lb"] == "1/1"
