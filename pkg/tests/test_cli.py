"""Command-line interface tests: files, exit codes, diagnostics."""

import json
from pathlib import Path

import pytest

from groupauth import cli
from groupauth.claims import ClaimResult

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"


def run_cli(argv):
    return cli.main(argv)


class TestSetup:
    def test_writes_public_and_token_files(self, tmp_path, capsys):
        out = tmp_path / "group"
        code = run_cli(
            ["setup", "--p", "13", "--t", "2", "--n", "3", "--seed", "7", "--out", str(out)]
        )
        assert code == 0
        public = json.loads((out / "public.json").read_text())
        assert public == {
            "p": 13,
            "t": 2,
            "n": 3,
            "hash": "sha256",
            "commitment": public["commitment"],
        }
        assert len(public["commitment"]) == 64
        token_files = sorted(out.glob("token-*.json"))
        assert len(token_files) == 3
        tokens = [json.loads(f.read_text()) for f in token_files]
        assert {t["x"] for t in tokens} == {1, 2, 3}
        assert all(set(t) == {"user_id", "x", "y", "p"} for t in tokens)
        assert "seed: 7" in capsys.readouterr().out

    def test_public_file_never_contains_share_values(self, tmp_path):
        out = tmp_path / "group"
        run_cli(["setup", "--p", "13", "--t", "2", "--n", "3", "--seed", "7", "--out", str(out)])
        assert "y" not in json.loads((out / "public.json").read_text())

    def test_rerun_is_byte_identical(self, tmp_path):
        out_a, out_b = tmp_path / "a", tmp_path / "b"
        for out in (out_a, out_b):
            run_cli(
                ["setup", "--p", "13", "--t", "2", "--n", "3", "--seed", "9", "--out", str(out)]
            )
        for name in ["public.json"] + [f"token-user-{i}.json" for i in (1, 2, 3)]:
            assert (out_a / name).read_bytes() == (out_b / name).read_bytes()

    def test_invalid_params_exit_2(self, tmp_path, capsys):
        code = run_cli(
            ["setup", "--p", "12", "--t", "2", "--n", "3", "--out", str(tmp_path / "x")]
        )
        assert code == 2
        assert "error" in capsys.readouterr().err


class TestRun:
    def test_honest_scenario_exits_zero(self, tmp_path, capsys):
        scenario = {
            "protocol": "P1",
            "seed": 3,
            "group": {"p": 13, "t": 2, "n": 3},
            "trials": 5,
            "roster": [
                {"role": "honest", "token_index": 1},
                {"role": "honest", "token_index": 2},
                {"role": "honest", "token_index": 3},
            ],
        }
        path = tmp_path / "sc.json"
        path.write_text(json.dumps(scenario))
        out = tmp_path / "transcript.jsonl"
        code = run_cli(["run", "--scenario", str(path), "--out", str(out)])
        captured = capsys.readouterr().out
        assert code == 0
        assert "seed: 3" in captured
        assert "trial 0: ACCEPTED" in captured
        assert out.exists()

    def test_exhaustive_scenario_reports_exact_rate(self, capsys):
        code = run_cli(["run", "--scenario", str(SCENARIO_DIR / "p2_outsider_exhaustive.json")])
        captured = capsys.readouterr().out
        assert code == 1  # rejections occurred: the forger was caught
        assert "1/13" in captured

    def test_records_format_emits_json(self, capsys):
        code = run_cli(
            ["run", "--scenario", str(SCENARIO_DIR / "p1_forger_exhaustive.json"), "--format", "records"]
        )
        assert code == 1
        line = capsys.readouterr().out.strip().splitlines()[-1]
        rec = json.loads(line)
        assert rec["accept_rate_exact"] == "1/13"

    def test_seed_override(self, tmp_path, capsys):
        scenario = {
            "protocol": "P1",
            "seed": 3,
            "group": {"p": 13, "t": 2, "n": 3},
            "roster": [
                {"role": "honest", "token_index": 1},
                {"role": "honest", "token_index": 2},
                {"role": "honest", "token_index": 3},
            ],
        }
        path = tmp_path / "sc.json"
        path.write_text(json.dumps(scenario))
        run_cli(["run", "--scenario", str(path), "--seed", "99"])
        assert "seed: 99" in capsys.readouterr().out

    def test_malformed_json_exit_2_with_line(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{\n "protocol": "P1",\n broken\n}\n')
        code = run_cli(["run", "--scenario", str(path)])
        assert code == 2
        assert "line 3" in capsys.readouterr().err

    def test_bad_mode_exit_2(self, tmp_path, capsys):
        path = tmp_path / "sc.json"
        path.write_text(json.dumps({"mode": "psychic"}))
        assert run_cli(["run", "--scenario", str(path)]) == 2

    def test_missing_file_exit_2(self, tmp_path):
        assert run_cli(["run", "--scenario", str(tmp_path / "nope.json")]) == 2


class TestVerifyClaims:
    def test_table_output_and_exit(self, capsys, monkeypatch):
        fake = [
            ClaimResult("criterion-1", "alpha", True, "ok", 0.01),
            ClaimResult("criterion-2", "beta", True, "ok", 0.02),
        ]
        monkeypatch.setattr(cli, "run_all_claims", lambda: fake)
        assert run_cli(["verify-claims"]) == 0
        captured = capsys.readouterr().out
        assert "PASS  criterion-1" in captured
        assert "2/2 claims passed" in captured

    def test_failure_exit_code(self, capsys, monkeypatch):
        fake = [ClaimResult("criterion-1", "alpha", False, "broken", 0.01)]
        monkeypatch.setattr(cli, "run_all_claims", lambda: fake)
        assert run_cli(["verify-claims"]) == 1
        assert "FAIL" in capsys.readouterr().out

    def test_records_format(self, capsys, monkeypatch):
        fake = [ClaimResult("criterion-1", "alpha", True, "ok", 0.01)]
        monkeypatch.setattr(cli, "run_all_claims", lambda: fake)
        run_cli(["verify-claims", "--format", "records"])
        first = capsys.readouterr().out.strip().splitlines()[0]
        assert json.loads(first)["passed"] is True


class TestShowTranscript:
    def test_round_trip_records(self, tmp_path, capsys):
        scenario = {
            "protocol": "P2",
            "seed": 4,
            "group": {"p": 13, "t": 2, "n": 3},
            "trials": 2,
            "roster": [
                {"role": "honest", "token_index": 1},
                {"role": "honest", "token_index": 2},
                {"role": "honest", "token_index": 3},
            ],
        }
        sc_path = tmp_path / "sc.json"
        sc_path.write_text(json.dumps(scenario))
        out = tmp_path / "t.jsonl"
        run_cli(["run", "--scenario", str(sc_path), "--out", str(out)])
        capsys.readouterr()
        assert run_cli(["show-transcript", str(out)]) == 0
        captured = capsys.readouterr().out
        assert "gas-transcript/1" in captured
        assert "stats" in captured

    def test_records_format_dumps_lines(self, tmp_path, capsys):
        scenario = {
            "protocol": "P1",
            "seed": 4,
            "group": {"p": 13, "t": 2, "n": 3},
            "roster": [
                {"role": "honest", "token_index": 1},
                {"role": "honest", "token_index": 2},
                {"role": "honest", "token_index": 3},
            ],
        }
        sc_path = tmp_path / "sc.json"
        sc_path.write_text(json.dumps(scenario))
        out = tmp_path / "t.jsonl"
        run_cli(["run", "--scenario", str(sc_path), "--out", str(out)])
        capsys.readouterr()
        run_cli(["show-transcript", str(out), "--format", "records"])
        lines = capsys.readouterr().out.strip().splitlines()
        assert json.loads(lines[0])["type"] == "header"

    def test_missing_file_exit_2(self, tmp_path):
        assert run_cli(["show-transcript", str(tmp_path / "nope")]) == 2


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        run_cli(["run", "--scenario", "x", "--bogus"])
    assert exc.value.code == 2


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        run_cli(["frobnicate"])
    assert exc.value.code == 2
