import json
from fractions import Fraction

import pytest

from hcs import ExperimentConfig, dispatch, run_experiment
from hcs.cli import NOT_APPLICABLE_SATURATED, rows_to_csv


def strip_elapsed(csv_text: str) -> str:
    return "\n".join(line.rsplit(",", 1)[0] for line in csv_text.splitlines())


class TestDispatch:
    def test_unknown_flag_is_usage_error(self, capsys):
        assert dispatch(["extract", "--bogus"]) == 2
        capsys.readouterr()

    def test_missing_subcommand(self, capsys):
        assert dispatch([]) == 2
        capsys.readouterr()

    def test_verify_bounds_alt3(self, capsys):
        code = dispatch(["verify-bounds", "--alt", "3"])
        out = capsys.readouterr().out
        assert code == 0
        pass_rows = [l for l in out.splitlines() if l.endswith("PASS")]
        assert len(pass_rows) == 9
        assert "9/9 obligations passed" in out

    def test_verify_bounds_all_with_outputs(self, capsys, tmp_path):
        csv_path = tmp_path / "reports.csv"
        json_path = tmp_path / "reports.json"
        code = dispatch([
            "verify-bounds", "--alt", "all",
            "--csv", str(csv_path), "--json", str(json_path),
        ])
        capsys.readouterr()
        assert code == 0
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "obligation_id,params,lhs,rhs,margin,verdict"
        assert len(lines) == 25
        data = json.loads(json_path.read_text())
        assert all(entry["verdict"] == "PASS" for entry in data)

    def test_construct_extract_certify_round_trip(self, capsys, tmp_path):
        out = tmp_path / "g.json"
        dot = tmp_path / "g.dot"
        assert dispatch([
            "construct", "--k", "2", "--sigma-k", "2", "--level", "1",
            "--out", str(out), "--dot", str(dot),
        ]) == 0
        capsys.readouterr()
        payload = json.loads(out.read_text())
        assert payload["graph"]["n"] == 6
        assert len(payload["graph"]["edges"]) == 11
        assert payload["metadata"]["k"] == 2
        assert dot.read_text().startswith("graph G {")

        result_path = tmp_path / "res.json"
        assert dispatch([
            "extract", "--in", str(out), "--k", "2", "--sigma", "0.2",
            "--out", str(result_path),
        ]) == 0
        capsys.readouterr()
        result = json.loads(result_path.read_text())
        assert result["outcome"] == "FOUND"
        assert len(result["subgraph"]) == 4

        assert dispatch(["certify", "--in", str(out)]) == 0
        out_text = capsys.readouterr().out
        assert "no-large-connected-subgraph: PASS" in out_text

    def test_extract_with_alt(self, capsys, tmp_path):
        out = tmp_path / "g.json"
        dispatch(["construct", "--k", "2", "--sigma-k", "2", "--level", "2",
                  "--out", str(out)])
        capsys.readouterr()
        assert dispatch(["extract", "--in", str(out), "--k", "2", "--alt", "1"]) == 0
        result = json.loads(capsys.readouterr().out)
        assert result["outcome"] == "SEPARABLE"

    def test_certify_fails_on_tampered_instance(self, capsys, tmp_path):
        out = tmp_path / "g.json"
        dispatch(["construct", "--k", "2", "--sigma-k", "2", "--level", "1",
                  "--out", str(out)])
        capsys.readouterr()
        payload = json.loads(out.read_text())
        payload["graph"]["edges"] = payload["graph"]["edges"][:-1]  # drop an edge
        out.write_text(json.dumps(payload))
        assert dispatch(["certify", "--in", str(out)]) == 1
        capsys.readouterr()

    def test_missing_file_is_usage_error(self, capsys):
        assert dispatch(["extract", "--in", "/nonexistent.json", "--k", "2",
                         "--sigma", "0.2"]) == 2
        capsys.readouterr()

    def test_log_level_env(self, capsys, monkeypatch):
        monkeypatch.setenv("HCS_LOG", "quiet")
        assert dispatch(["verify-bounds", "--alt", "3"]) == 0
        capsys.readouterr()


class TestExperiment:
    def test_config_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(trials=0, k=2, n_range=(15, 50), alternative_id=3, seed=1)
        with pytest.raises(ValueError):
            ExperimentConfig(trials=1, k=2, n_range=(50, 15), alternative_id=3, seed=1)
        with pytest.raises(ValueError):
            ExperimentConfig(trials=1, k=0, n_range=(15, 50), alternative_id=3, seed=1)

    def test_golden_seeded_trial(self):
        cfg = ExperimentConfig(trials=1, k=2, n_range=(20, 20), alternative_id=3, seed=42)
        rows, ok = run_experiment(cfg)
        assert ok
        row = rows[0]
        assert (row.trial, row.n, row.e) == (1, 20, 53)
        assert row.d_bar == Fraction(53, 10)
        assert row.outcome == "FOUND"
        assert row.h_size == 18
        assert row.h_size >= 3  # required size floor(1.2*2)+1

    def test_csv_deterministic_up_to_timing(self):
        cfg = ExperimentConfig(trials=4, k=2, n_range=(15, 25), alternative_id=3, seed=7)
        first = strip_elapsed(rows_to_csv(run_experiment(cfg)[0]))
        second = strip_elapsed(rows_to_csv(run_experiment(cfg)[0]))
        assert first == second
        assert first.splitlines()[0] == "trial,n,e,d_bar,outcome,h_size"

    def test_saturation(self):
        cfg = ExperimentConfig(trials=2, k=2, n_range=(5, 5), alternative_id=3, seed=1)
        rows, ok = run_experiment(cfg)
        assert ok
        assert all(r.outcome == NOT_APPLICABLE_SATURATED for r in rows)
        assert all(r.h_size is None for r in rows)

    def test_cli_experiment(self, capsys, tmp_path):
        csv_path = tmp_path / "rows.csv"
        code = dispatch([
            "experiment", "--trials", "3", "--k", "2", "--alt", "3",
            "--seed", "11", "--csv", str(csv_path),
            "--n-min", "15", "--n-max", "20",
        ])
        out = capsys.readouterr().out
        assert code == 0
        assert "3 found, 0 saturated, 3 trials: OK" in out
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "trial,n,e,d_bar,outcome,h_size,elapsed_ms"
        assert len(lines) == 4
