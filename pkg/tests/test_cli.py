import json

import numpy as np
import pytest

import bivirus as bv
from bivirus import CASES, cli
from bivirus.model import State


def write_config(path, doc):
    path.write_text(json.dumps(doc, indent=1), encoding="utf-8")
    return str(path)


def case_config(name, **extra):
    cs = CASES[name]
    doc = {
        "version": 1,
        "system": {
            "B1": [[1.6, 1.0], [1.0, 1.6]],
            "B2": cs.B2.tolist(),
        },
    }
    doc.update(extra)
    return doc


class TestAnalyze:
    def test_case2_report(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", case_config("case2"))
        assert cli.main(["analyze", "--config", cfg]) == 0
        out = capsys.readouterr().out
        assert "R1 = 2.6000" in out
        assert "equilibria (4):" in out
        assert sum(ln.strip().startswith("coexistence ")
                   for ln in out.splitlines()) == 1
        assert "locally_stable" in out
        assert "degeneracy: none suspected" in out
        assert "inconclusive" in out

    def test_case1_degeneracy_flag(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", case_config("case1"))
        assert cli.main(["analyze", "--config", cfg]) == 0
        assert "LINE OF EQUILIBRIA SUSPECTED" in capsys.readouterr().out

    def test_reducible_system_exits_2(self, tmp_path, capsys):
        doc = case_config("case2")
        doc["system"]["B1"] = [[1.0, 0.0], [0.0, 1.0]]
        cfg = write_config(tmp_path / "c.json", doc)
        assert cli.main(["analyze", "--config", cfg]) == 2
        assert "irreducibility violated" in capsys.readouterr().err

    def test_malformed_json_line_anchored(self, tmp_path, capsys):
        p = tmp_path / "bad.json"
        p.write_text('{\n "version": 1,\n "system": }\n', encoding="utf-8")
        assert cli.main(["analyze", "--config", str(p)]) == 2
        err = capsys.readouterr().err
        assert f"{p}:3:" in err  # line-anchored message

    def test_missing_version(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", {"system": {}})
        assert cli.main(["analyze", "--config", cfg]) == 2

    def test_json_document(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", case_config("case3"))
        assert cli.main(["analyze", "--config", cfg, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["n"] == 2
        kinds = [e["kind"] for e in doc["equilibria"]]
        assert kinds == ["healthy", "boundary_virus1", "boundary_virus2",
                         "coexistence"]
        assert doc["boundary_stability"]["virus1"]["verdict"] == "unstable"
        assert doc["line_degeneracy_suspected"] is False

    def test_report_written_to_out_dir(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", case_config("case4"))
        out = tmp_path / "out"
        assert cli.main(["analyze", "--config", cfg, "--out", str(out)]) == 0
        assert (out / "analysis.txt").read_text() == capsys.readouterr().out


class TestSimulate:
    def test_csv_format(self, tmp_path, capsys):
        doc = case_config("case2", initial_conditions=[
            {"x1": [0.5, 0.5], "x2": [0.2, 0.2]}],
            t_end=50.0)
        cfg = write_config(tmp_path / "c.json", doc)
        out = tmp_path / "runs"
        assert cli.main(["simulate", "--config", cfg, "--out", str(out)]) == 0
        raw = (out / "run_000.csv").read_bytes()
        assert b"\r" not in raw
        text = raw.decode()
        lines = text.strip().split("\n")
        assert lines[0] == "t,x1_1,x1_2,x2_1,x2_2"
        assert len(lines) >= 50
        # 17-significant-digit round trip
        val = lines[1].split(",")[1]
        assert float(val) == 0.5

    def test_constant_rows_at_equilibrium(self, tmp_path):
        doc = case_config("case2", initial_conditions=[
            {"x1": [0.0, 0.0], "x2": [0.0, 0.0]}], t_end=30.0)
        cfg = write_config(tmp_path / "c.json", doc)
        out = tmp_path / "runs"
        assert cli.main(["simulate", "--config", cfg, "--out", str(out)]) == 0
        t, states, n = cli.parse_trajectory_csv(
            (out / "run_000.csv").read_text())
        assert np.abs(states).max() == 0.0
        summary = (out / "summary.csv").read_text().splitlines()
        assert summary[0] == "run,file,label"
        assert summary[1].endswith("healthy")

    def test_eight_demo_starts_reach_boundaries(self, tmp_path):
        doc = case_config("case2", initial_conditions=[
            {"x1": [a, a], "x2": [b, b]}
            for a, b in bv.cases.DEMO_START_INTENSITIES])
        cfg = write_config(tmp_path / "c.json", doc)
        out = tmp_path / "runs"
        assert cli.main(["simulate", "--config", cfg, "--out", str(out)]) == 0
        labels = [ln.split(",")[2] for ln in
                  (out / "summary.csv").read_text().splitlines()[1:]]
        assert set(labels) == {"boundary_virus1", "boundary_virus2"}
        # final rows sit on one of the two boundary equilibria
        sys2 = CASES["case2"].system()
        enum = bv.enumerate_equilibria(sys2)
        targets = [e.coordinates() for e in enum
                   if e.kind.startswith("boundary")]
        for i in range(8):
            _, states, _ = cli.parse_trajectory_csv(
                (out / f"run_{i:03d}.csv").read_text())
            d = min(np.max(np.abs(states[-1] - t)) for t in targets)
            assert d <= 1e-3

    def test_csv_round_trip_resimulation(self, tmp_path):
        doc = case_config("case2", initial_conditions=[
            {"x1": [0.5, 0.5], "x2": [0.2, 0.2]}])
        cfg = write_config(tmp_path / "c.json", doc)
        out = tmp_path / "runs"
        assert cli.main(["simulate", "--config", cfg, "--out", str(out)]) == 0
        t, states, n = cli.parse_trajectory_csv(
            (out / "run_000.csv").read_text())
        s_last = State(states[-1, :n], states[-1, n:])
        traj = bv.integrate(CASES["case2"].system(), s_last, 100.0)
        assert np.max(np.abs(traj.final_vector - states[-1])) <= 1e-6

    def test_infeasible_start_skipped(self, tmp_path, capsys):
        doc = case_config("case2", initial_conditions=[
            {"x1": [0.9, 0.9], "x2": [0.9, 0.9]},
            {"x1": [0.3, 0.3], "x2": [0.2, 0.2]}], t_end=30.0)
        cfg = write_config(tmp_path / "c.json", doc)
        out = tmp_path / "runs"
        assert cli.main(["simulate", "--config", cfg, "--out", str(out)]) == 0
        err = capsys.readouterr().err
        assert "skipped" in err
        assert not (out / "run_000.csv").exists()
        assert (out / "run_001.csv").exists()

    def test_all_skipped_exits_2(self, tmp_path):
        doc = case_config("case2", initial_conditions=[
            {"x1": [0.9, 0.9], "x2": [0.9, 0.9]}])
        cfg = write_config(tmp_path / "c.json", doc)
        assert cli.main(["simulate", "--config", cfg,
                         "--out", str(tmp_path / "r")]) == 2

    def test_deterministic_output(self, tmp_path):
        doc = case_config("case2", seed=3, initial_conditions=[
            {"x1": [0.4, 0.3], "x2": [0.2, 0.3]}], t_end=40.0)
        cfg = write_config(tmp_path / "c.json", doc)
        outs = []
        for d in ("a", "b"):
            out = tmp_path / d
            assert cli.main(["simulate", "--config", cfg,
                             "--out", str(out)]) == 0
            outs.append((out / "run_000.csv").read_bytes())
        assert outs[0] == outs[1]


class TestSandwichCmd:
    def test_case4_agree(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", case_config("case4"))
        assert cli.main(["sandwich", "--config", cfg]) == 0
        out = capsys.readouterr().out
        assert "AGREE" in out and "DISAGREE" not in out

    def test_case2_disagree_advisory(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", case_config("case2"))
        assert cli.main(["sandwich", "--config", cfg]) == 0
        out = capsys.readouterr().out
        assert "DISAGREE" in out
        assert "unstable equilibrium" in out
        assert "W extents" in out

    def test_inconclusive_exits_3(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", case_config("case2"))
        assert cli.main(["sandwich", "--config", cfg, "--t-end", "5"]) == 3
        assert "INCONCLUSIVE" in capsys.readouterr().out

    def test_json_output(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", case_config("case3"))
        assert cli.main(["sandwich", "--config", cfg, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["agree"] is True
        assert doc["conclusive"] is True


class TestCasesCmd:
    def test_all_cells_pass(self, capsys):
        assert cli.main(["cases"]) == 0
        out = capsys.readouterr().out
        assert "ALL CELLS PASS" in out
        assert "FAIL" not in out

    def test_json_document(self, capsys):
        assert cli.main(["cases", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["ok"] is True
        assert [c["case"] for c in doc["cases"]] == \
            ["case1", "case2", "case3", "case4"]


class TestConstructLineCmd:
    def test_build_verify_reload(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", {
            "version": 1, "B1": [[1.6, 1.0], [1.0, 1.6]], "mu": 1.0})
        out = tmp_path / "line"
        assert cli.main(["construct-line", "--config", cfg,
                         "--out", str(out)]) == 0
        text = capsys.readouterr().out
        assert "critical (bifurcation point)" in text
        doc = json.loads((out / "constructed_system.json").read_text())
        for r in doc["construction"]["alpha_residuals"].values():
            assert r <= 1e-10
        # the written config reloads and analyzes cleanly
        assert cli.main(["analyze", "--config",
                         str(out / "constructed_system.json")]) == 0
        out2 = capsys.readouterr().out
        assert "LINE OF EQUILIBRIA SUSPECTED" in out2

    @pytest.mark.parametrize("mu,phrase", [(0.9, "locally stable"),
                                           (1.1, "saddle")])
    def test_mu_verdicts(self, tmp_path, capsys, mu, phrase):
        cfg = write_config(tmp_path / "c.json", {
            "version": 1, "B1": [[1.6, 1.0], [1.0, 1.6]], "mu": mu})
        assert cli.main(["construct-line", "--config", cfg]) == 0
        assert f"(z, 0) endpoint verdict: {phrase}" in capsys.readouterr().out

    def test_subcritical_exits_2(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", {
            "version": 1, "B1": [[0.3, 0.1], [0.1, 0.3]]})
        assert cli.main(["construct-line", "--config", cfg]) == 2
        assert "subcritical" in capsys.readouterr().err


class TestDeterminism:
    def test_analyze_json_bit_identical(self, tmp_path, capsys):
        cfg = write_config(tmp_path / "c.json", case_config("case2"))
        cli.main(["analyze", "--config", cfg, "--json"])
        first = capsys.readouterr().out
        cli.main(["analyze", "--config", cfg, "--json"])
        second = capsys.readouterr().out
        assert first == second
