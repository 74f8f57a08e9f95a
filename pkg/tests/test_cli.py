import json
import os
import subprocess
import sys

import pytest

from partition_forge import cli


def run_cli(args, **kw):
    return cli.main(args)


def read_report(path):
    with open(path) as f:
        return json.load(f)


def test_borodin_ok(tmp_path):
    out = str(tmp_path / "r.json")
    assert run_cli(["verify-borodin", "--profile", "10", "--max-weight", "6", "--out", out]) == 0
    rep = read_report(out)
    assert rep["mode"] == "verify-borodin"
    assert rep["profile"] == "10"
    assert rep["ok"] is True
    assert all(r["match"] for r in rep["coefficients"])
    assert [r["degree"] for r in rep["coefficients"]] == [
        "10:z^%d" % w for w in range(7)
    ]


def test_malformed_profile_exit_2(capsys):
    assert run_cli(["verify-borodin", "--profile", "2X"]) == 2
    capsys.readouterr()


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.build_parser().parse_args(["no-such-command"])
    assert exc.value.code == 2


def test_perturb_detected(tmp_path, capsys):
    out = str(tmp_path / "r.json")
    code = run_cli(
        [
            "verify-lambda-det",
            "--n",
            "2",
            "--points",
            "3",
            "--seed",
            "7",
            "--perturb",
            "--out",
            out,
        ]
    )
    capsys.readouterr()
    assert code == 1
    rep = read_report(out)
    assert rep["ok"] is False
    assert not rep["coefficients"][0]["match"]
    assert all(r["match"] for r in rep["coefficients"][1:])


def test_instance_cap_exit_2(capsys):
    code = run_cli(
        ["verify-borodin", "--profile", "10", "--max-weight", "10", "--max-instances", "5"]
    )
    err = capsys.readouterr().err
    assert code == 2
    assert "cap" in err


def test_determinism_across_threads(tmp_path):
    env = dict(os.environ)
    outs = []
    for threads in ("1", "4"):
        out = str(tmp_path / ("r%s.json" % threads))
        env["PARTITION_FORGE_THREADS"] = threads
        subprocess.check_call(
            [
                sys.executable,
                "-m",
                "partition_forge.cli",
                "verify-bijection",
                "--profile",
                "10",
                "--max-weight",
                "5",
                "--out",
                out,
            ],
            env=env,
        )
        with open(out, "rb") as f:
            outs.append(f.read())
    assert outs[0] == outs[1]


def test_seed_reproducible(tmp_path):
    texts = []
    for _ in range(2):
        out = str(tmp_path / "r.json")
        assert (
            run_cli(
                [
                    "verify-lambda-det",
                    "--n",
                    "2",
                    "--points",
                    "4",
                    "--seed",
                    "11",
                    "--out",
                    out,
                ]
            )
            == 0
        )
        with open(out, "rb") as f:
            texts.append(f.read())
    assert texts[0] == texts[1]


def test_csv_format(tmp_path):
    out = str(tmp_path / "r.csv")
    assert (
        run_cli(
            [
                "verify-macmahon",
                "--max-weight",
                "5",
                "--format",
                "csv",
                "--out",
                out,
            ]
        )
        == 0
    )
    with open(out) as f:
        lines = f.read().strip().split("\n")
    assert lines[0] == "degree,lhs,rhs,match"
    assert lines[1] == "pp:z^0,1,1,true"
    assert lines[-1] == "ok,true"


def test_enumerate_cpps(tmp_path):
    out = str(tmp_path / "e.json")
    assert (
        run_cli(
            ["enumerate", "--kind", "cpps", "--profile", "10", "--max-weight", "2", "--out", out]
        )
        == 0
    )
    items = read_report(out)
    assert {"profile": "10", "seq": [[], [], []]} in items
    assert {"profile": "10", "seq": [[1], [1], [1]]} in items
    assert all(it["profile"] == "10" for it in items)


def test_enumerate_tilings(tmp_path):
    out = str(tmp_path / "t.json")
    assert run_cli(["enumerate", "--kind", "tilings", "--n", "1", "--out", out]) == 0
    items = read_report(out)
    assert len(items) == 2
    for tiling in items:
        assert all(set(d) == {"x", "y", "dir"} for d in tiling)


def test_enumerate_requires_profile(capsys):
    code = run_cli(["enumerate", "--kind", "cpps"])
    capsys.readouterr()
    assert code == 2


def test_frac_str():
    from fractions import Fraction

    assert cli.frac_str(Fraction(-4, -6)) == "2/3"
    assert cli.frac_str(Fraction(4, -6)) == "-2/3"
    assert cli.frac_str(5) == "5"


def test_smoke_every_verify_command(tmp_path):
    small = {
        "verify-borodin": ["--profile", "10", "--max-weight", "4"],
        "verify-qt-borodin": ["--profile", "10", "--max-weight", "3", "--qt-degree", "3"],
        "verify-stanley": ["--n", "3", "--max-weight", "4"],
        "verify-macmahon": ["--max-weight", "4"],
        "verify-bijection": ["--profile", "10", "--max-weight", "4"],
        "verify-asm": ["--n", "3"],
        "verify-aztec": ["--n", "2"],
        "verify-lambda-det": ["--n", "2", "--points", "3", "--seed", "1"],
    }
    for command, extra in sorted(small.items()):
        out = str(tmp_path / (command + ".json"))
        assert run_cli([command] + extra + ["--out", out]) == 0, command
        assert read_report(out)["ok"] is True
