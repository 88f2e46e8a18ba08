"""CLI: subcommand behavior, JSON output shapes, exit codes."""

import csv
import io
import json
import subprocess
import sys

import pytest

from gridlock.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    # belt and braces: the flag is passed explicitly and the env var
    # keeps any code path that falls back to the default away from $HOME
    monkeypatch.setenv("GRIDLOCK_CACHE_DIR", str(d))
    return str(d)


class TestSearch:
    def test_packaged_result_is_served_from_cache(self, capsys, cache_dir):
        payload = run_json(
            capsys, "search", "--n", "3", "--mode", "independent",
            "--json", "--cache-dir", cache_dir,
        )
        assert payload["minimum"] == 4
        assert payload["distinct"] == 5
        assert payload["classes"] == 2
        assert payload["exhausted"] is True
        assert payload["cached"] is True
        assert payload["witnesses"]

    def test_text_output_includes_summary_and_board(self, capsys, cache_dir):
        code, out, _ = run_cli(
            capsys, "search", "--n", "3", "--cache-dir", cache_dir,
        )
        assert code == 0
        assert "minimum 4" in out
        assert "o" in out  # ascii witness rendering

    def test_recompute_bypasses_the_cache(self, capsys, cache_dir):
        payload = run_json(
            capsys, "search", "--n", "2", "--recompute", "--enumerate",
            "--json", "--cache-dir", cache_dir,
        )
        assert payload["cached"] is False
        assert payload["minimum"] == 4
        assert payload["distinct"] == 1

    def test_enumerate_ignores_first_witness_records(self, capsys, cache_dir):
        # seed n=1 with a non-enumerated record; --enumerate must recompute
        first = run_json(
            capsys, "search", "--n", "1", "--json", "--cache-dir", cache_dir,
        )
        assert first["cached"] is False
        second = run_json(
            capsys, "search", "--n", "1", "--enumerate", "--json",
            "--cache-dir", cache_dir,
        )
        assert second["cached"] is False  # the cached record was not enumerated
        third = run_json(
            capsys, "search", "--n", "1", "--enumerate", "--json",
            "--cache-dir", cache_dir,
        )
        assert third["cached"] is True  # now it is

    def test_exterior_margin_hits_its_own_cache_key(self, capsys, cache_dir):
        payload = run_json(
            capsys, "search", "--n", "2", "--mode", "independent",
            "--exterior", "1", "--json", "--cache-dir", cache_dir,
        )
        assert payload["margin"] == 1
        assert payload["minimum"] == 3
        assert payload["distinct"] == 4

    def test_unknown_mode_is_a_usage_error(self, capsys, cache_dir):
        with pytest.raises(SystemExit) as exc:
            main(["search", "--n", "3", "--mode", "nope"])
        assert exc.value.code == 2

    def test_version_flag(self, capsys):
        import gridlock

        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        out = capsys.readouterr().out
        assert out.strip() == f"gridlock {gridlock.__version__}"


class TestVerify:
    def test_grid_solution_round_trip(self, capsys, cache_dir, tmp_path):
        path = tmp_path / "sol.json"
        code, out, _ = run_cli(
            capsys, "construct", "--grid", "--n", "5", "--out", str(path),
        )
        assert code == 0
        assert f"wrote {path}" in out
        summary = run_json(capsys, "verify", str(path), "--json")
        assert summary == {
            "kind": "grid", "n": 5, "mode": "general",
            "size": 6, "margin": 0, "valid": True,
        }

    def test_torus_solution_round_trip(self, capsys, tmp_path):
        path = tmp_path / "torus.json"
        run_cli(capsys, "construct", "--torus-even", "--n", "6", "--out", str(path))
        summary = run_json(capsys, "verify", str(path), "--json")
        assert summary == {"kind": "torus", "n": 6, "size": 4, "valid": True}

    def test_tampered_file_fails_with_exit_one(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        run_cli(capsys, "construct", "--grid", "--n", "5", "--out", str(path))
        data = json.loads(path.read_text())
        data["points"] = data["points"][:-1]  # drop a point: no longer dominating
        path.write_text(json.dumps(data))
        code, _, err = run_cli(capsys, "verify", str(path))
        assert code == 1
        assert "error:" in err

    def test_missing_file_fails_cleanly(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "verify", str(tmp_path / "absent.json"))
        assert code == 1
        assert "error:" in err


class TestConstruct:
    def test_grid_json_payload(self, capsys):
        payload = run_json(capsys, "construct", "--grid", "--n", "8", "--json")
        assert payload["n"] == 8
        assert payload["mode"] == "general"
        assert len(payload["points"]) == 8

    def test_augment_respects_the_budget_flag(self, capsys, cache_dir):
        payload = run_json(
            capsys, "construct", "--augment", "--n", "9",
            "--budget", "5000", "--json", "--cache-dir", cache_dir,
        )
        assert payload["mode"] == "independent"
        assert len(payload["points"]) <= 18  # the greedy cap of 2n

    def test_torus_two_column_sizes(self, capsys):
        payload = run_json(capsys, "construct", "--torus-2p", "--n", "15", "--json")
        assert payload["kind"] == "torus"
        assert len(payload["points"]) == 6

    def test_torus_apex_blowup(self, capsys):
        payload = run_json(capsys, "construct", "--torus-apex", "--n", "25", "--json")
        assert len(payload["points"]) == 7

    def test_invalid_combination_exits_one(self, capsys):
        code, _, err = run_cli(
            capsys, "construct", "--torus-2p", "--n", "10", "--p", "3",
        )
        assert code == 1
        assert "error:" in err

    def test_text_output_for_torus(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "--torus-even", "--n", "4")
        assert code == 0
        assert "size 4 on the 4 x 4 torus" in out


class TestBounds:
    def test_report_payload(self, capsys):
        payload = run_json(capsys, "bounds", "--n", "8", "--json")
        assert payload["trivialLower"] == 5
        assert payload["phiLower"] == 3
        assert payload["constructionUpper"] == 8

    def test_text_line(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--n", "8")
        assert code == 0
        assert "counting lower 5" in out

    def test_janson_certificate(self, capsys):
        payload = run_json(
            capsys, "bounds", "--janson", "--n", "101", "--m", "60", "--json",
        )
        assert payload["failureBound"] < 0.01
        assert payload["certifiesExistence"] is True
        assert payload["mu"] > payload["delta"]

    def test_janson_requires_m(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bounds", "--janson", "--n", "101"])
        assert exc.value.code == 2

    def test_janson_rejects_composite(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "--janson", "--n", "100", "--m", "10")
        assert code == 1
        assert "prime" in err


class TestTorus:
    def test_mc_is_reproducible(self, capsys):
        a = run_json(
            capsys, "torus", "mc", "--n", "7", "--m", "12",
            "--trials", "25", "--seed", "5", "--json",
        )
        b = run_json(
            capsys, "torus", "mc", "--n", "7", "--m", "12",
            "--trials", "25", "--seed", "5", "--json",
        )
        assert a == b
        assert 0.0 <= a["dominationFrequency"] <= 1.0

    def test_search_enumerates_the_tiny_torus(self, capsys):
        payload = run_json(
            capsys, "torus", "search", "--n", "3", "--enumerate", "--json",
        )
        assert payload["exhausted"] is True
        assert payload["witnesses"]
        assert payload["minimum"] == len(payload["witnesses"][0]["points"])


class TestGame:
    def test_solve_centre_opening(self, capsys):
        payload = run_json(capsys, "game", "solve", "--n", "3", "--json")
        assert payload["winner"] == "first"
        assert payload["principalMove"] == [2, 2]

    def test_solve_second_player_boards(self, capsys):
        for n in (2, 4):
            payload = run_json(capsys, "game", "solve", "--n", str(n), "--json")
            assert payload["winner"] == "second"
            assert payload["principalMove"] is None

    def test_solve_unknown_within_budget(self, capsys):
        payload = run_json(
            capsys, "game", "solve", "--n", "5", "--budget", "10", "--json",
        )
        assert payload["winner"] == "unknown"

    def test_play_full_game_on_stdin(self, capsys, monkeypatch):
        feed = "1 1\n1 1\nbad\n1 2\n2 1\n2 2\n"
        monkeypatch.setattr(sys, "stdin", io.StringIO(feed))
        code, out, _ = run_cli(capsys, "game", "play", "--n", "2", "--engine", "none")
        assert code == 0
        assert "illegal move (occupied)" in out
        assert "enter two integers" in out
        assert "Second player wins after 4 moves" in out

    def test_play_against_the_engine(self, capsys, monkeypatch):
        # second-player engine on the 2x2 board: the human feeds two
        # moves, the engine replies to each, the engine makes the last move
        feed = "1 1\n1 2\n2 1\n2 2\n"  # extra lines are ignored once over
        monkeypatch.setattr(sys, "stdin", io.StringIO(feed))
        code, out, _ = run_cli(capsys, "game", "play", "--n", "2")
        assert code == 0
        assert out.count("engine plays") == 2
        assert "Second player wins" in out

    def test_play_aborts_on_eof(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(""))
        code, out, _ = run_cli(capsys, "game", "play", "--n", "3", "--engine", "none")
        assert code == 1
        assert "input closed" in out


class TestExport:
    def test_svg_from_the_cached_witness(self, capsys, cache_dir):
        code, out, _ = run_cli(
            capsys, "export", "--svg", "--n", "10", "--cache-dir", cache_dir,
        )
        assert code == 0
        assert out.count("<rect") == 100
        assert out.count("<circle") == 8

    def test_ascii_from_a_file(self, capsys, tmp_path):
        path = tmp_path / "sol.json"
        run_cli(capsys, "construct", "--grid", "--n", "4", "--out", str(path))
        code, out, _ = run_cli(capsys, "export", "--input", str(path))
        assert code == 0
        assert out.count("o") == 4

    def test_out_flag_writes_the_file(self, capsys, cache_dir, tmp_path):
        target = tmp_path / "board.svg"
        code, out, _ = run_cli(
            capsys, "export", "--svg", "--n", "6", "--out", str(target),
            "--cache-dir", cache_dir,
        )
        assert code == 0
        assert target.read_text().startswith("<svg")

    def test_uncached_board_yields_a_hint(self, capsys, cache_dir):
        code, _, err = run_cli(
            capsys, "export", "--n", "25", "--cache-dir", cache_dir,
        )
        assert code == 1
        assert "gridlock search --n 25" in err

    def test_requires_input_or_n(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["export", "--svg"])
        assert exc.value.code == 2


class TestReport:
    def test_writes_csv_and_figures(self, capsys, cache_dir, tmp_path):
        out_dir = tmp_path / "report"
        code, out, _ = run_cli(
            capsys, "report", "--out", str(out_dir), "--max-n", "6",
            "--cache-dir", cache_dir,
        )
        assert code == 0
        csv_path = out_dir / "bounds.csv"
        assert csv_path.exists()
        assert (out_dir / "bounds.png").exists()
        with csv_path.open() as fh:
            rows = list(csv.DictReader(fh))
        assert [r["n"] for r in rows] == ["2", "3", "4", "5", "6"]
        by_n = {r["n"]: r for r in rows}
        # exact columns come from the packaged enumerations
        assert by_n["5"]["exactGeneral"] == "6"
        assert by_n["5"]["exactIndependent"] == "6"
        assert by_n["7"] if "7" in by_n else True
        boards = sorted(p.name for p in out_dir.glob("board_n*_independent.png"))
        assert boards == [f"board_n{n}_independent.png" for n in range(2, 7)]


def test_console_script_wires_up():
    proc = subprocess.run(
        [sys.executable, "-m", "gridlock", "--help"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    for name in ("search", "verify", "construct", "bounds", "torus", "game"):
        assert name in proc.stdout
