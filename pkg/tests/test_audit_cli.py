"""Audit rows/summary semantics and the command-line surface."""

import io
import json

import pytest

import domchrom as dc
from domchrom.cli import main


def run_cli(argv, stdin_text=None, monkeypatch=None, capsys=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


# -- audit machinery -----------------------------------------------------------------


def test_audit_cycles_all_agree():
    report = dc.audit_specs(dc.parse_family_range("cycle:4..12"))
    assert report.ok
    assert report.summary["instances"] == 9
    assert report.summary["agree"] == 9
    assert report.summary["disagree"] == 0


def test_audit_marks_circulant_errata_row():
    report = dc.audit_specs(dc.parse_family_range("circulant:6..16:1,3"))
    assert report.ok
    by_spec = {r.spec: r for r in report.rows}
    row6 = by_spec["circulant:6:1,3"]
    assert row6.errata and row6.status == "suspect"
    assert row6.predicted == 3 and row6.expected == 2 and row6.solver == 2
    assert row6.agree is True
    row11 = by_spec["circulant:11:1,3"]
    assert row11.errata and row11.solver == 3 and row11.agree is True


def test_audit_ladder_suspect_row_does_not_fail_run():
    report = dc.audit_specs(dc.parse_family_range("ladder:2..4"))
    assert report.ok
    row = {r.spec: r for r in report.rows}["ladder:4"]
    assert row.status == "suspect" and row.solver >= 3


def test_audit_skips_oversized_instances():
    report = dc.audit_specs(dc.parse_family_range("path:30"), solver_cap=18)
    row = report.rows[0]
    assert row.skip is not None and "cap" in row.skip
    assert row.solver is None and report.ok


def test_audit_skips_rows_without_rules():
    report = dc.audit_specs(dc.parse_family_range("tchain:1"))
    assert report.rows[0].skip is not None and report.ok


def test_audit_budget_skips_remaining_rows():
    report = dc.audit_specs(dc.parse_family_range("cycle:4..12"), budget_ms=0)
    assert all(r.skip == "budget exceeded" for r in report.rows)


def test_audit_oracle_cross_check_runs_on_small_instances():
    report = dc.audit_specs(dc.parse_family_range("cycle:4..12"), oracle_cap=10)
    oracles = {r.spec: r.oracle for r in report.rows}
    assert oracles["cycle:9"] == dc.dom_chromatic_oracle(dc.generate(dc.spec("cycle", 9)))
    assert oracles["cycle:12"] is None


def test_audit_fails_on_wrong_proved_row(monkeypatch):
    # sabotage one proved rule to confirm disagreement fails the run
    import domchrom.audit as audit_mod
    from domchrom.predictions import Prediction

    real = audit_mod.predict_dom_chromatic

    def broken(fs):
        p = real(fs)
        if str(fs) == "cycle:5":
            return Prediction("exact", "proved", p.rule, value=p.value + 1)
        return p

    monkeypatch.setattr(audit_mod, "predict_dom_chromatic", broken)
    report = dc.audit_specs(dc.parse_family_range("cycle:4..6"))
    assert not report.ok
    assert {r.spec: r.agree for r in report.rows}["cycle:5"] is False


def test_cli_audit_exit_one_on_wrong_proved_row(monkeypatch, capsys):
    import domchrom.audit as audit_mod
    from domchrom.predictions import Prediction

    real = audit_mod.predict_dom_chromatic

    def broken(fs):
        p = real(fs)
        if str(fs) == "cycle:5":
            return Prediction("exact", "proved", p.rule, value=p.value + 1)
        return p

    monkeypatch.setattr(audit_mod, "predict_dom_chromatic", broken)
    code = main(["audit", "--family", "cycle:4..6"])
    out, _ = capsys.readouterr()
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_report_dict_shape():
    report = dc.audit_specs(dc.parse_family_range("path:4..5"))
    payload = dc.report_to_dict(
        report, version="0.1.0", solver_cap=18, oracle_cap=10, budget_ms=None
    )
    assert payload["ok"] is True and payload["version"] == "0.1.0"
    assert [row["spec"] for row in payload["instances"]] == ["path:4", "path:5"]
    assert set(payload["summary"]) == {
        "instances", "agree", "disagree", "suspect", "suspect_confirmed",
        "errata", "skipped",
    }


# -- CLI ------------------------------------------------------------------------------


def test_cli_gen_writes_edge_list(capsys):
    code = main(["gen", "path:3"])
    out, _ = capsys.readouterr()
    assert code == 0
    assert out == "3 2\n0 1\n1 2\n"


def test_cli_gen_round_trip(capsys):
    code = main(["gen", "circulant:8:1,3"])
    out, _ = capsys.readouterr()
    assert code == 0
    assert dc.parse_edge_list(out) == dc.generate(dc.spec("circulant", 8, 1, 3))


def test_cli_solve_family_spec(capsys):
    code = main(["solve", "--domchrom", "path:7"])
    out, _ = capsys.readouterr()
    payload = json.loads(out)
    assert code == 0 and payload["k"] == 4
    assert sorted(v for cls in payload["classes"] for v in cls) == list(range(7))
    assert set(payload["dominators"]) <= {str(c) for c in range(1, 5)}


def test_cli_solve_deterministic_bytes(capsys):
    code1 = main(["solve", "path:6"])
    out1, _ = capsys.readouterr()
    code2 = main(["solve", "path:6"])
    out2, _ = capsys.readouterr()
    assert code1 == code2 == 0 and out1 == out2


def test_cli_solve_stdin_pipe(monkeypatch, capsys):
    code = main(["gen", "circulant:6:1,3"])
    edge_list, _ = capsys.readouterr()
    code, out, _ = run_cli(
        ["solve", "--domchrom", "-"], stdin_text=edge_list,
        monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 0 and json.loads(out)["k"] == 2


def test_cli_solve_invariants(capsys):
    for invariant, value in [("chi", 3), ("gamma", 2), ("gammat", 3)]:
        code = main(["solve", "--invariant", invariant, "cycle:5"])
        out, _ = capsys.readouterr()
        assert code == 0 and json.loads(out)["value"] == value


def test_cli_solve_dimacs_file(tmp_path, capsys):
    doc = tmp_path / "tri.col"
    doc.write_text("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    code = main(["solve", "--format", "dimacs", str(doc)])
    out, _ = capsys.readouterr()
    assert code == 0 and json.loads(out)["k"] == 3


def test_cli_solve_backend_flag(capsys):
    code = main(["solve", "--backend", "python", "path:5"])
    out, _ = capsys.readouterr()
    assert code == 0 and json.loads(out)["k"] == 3


def test_cli_unknown_family_is_usage_error(capsys):
    code = main(["solve", "gadget:9"])
    _, err = capsys.readouterr()
    assert code == 2 and "unknown family" in err


def test_cli_malformed_file_is_usage_error(tmp_path, capsys):
    doc = tmp_path / "bad.txt"
    doc.write_text("not an edge list\n")
    code = main(["solve", str(doc)])
    _, err = capsys.readouterr()
    assert code == 2 and "error" in err


def test_cli_budget_exceeded_is_usage_error(capsys):
    code = main(["perturb", "--mode", "vertex", "--budget", "0", "cycle:8"])
    _, err = capsys.readouterr()
    assert code == 2 and "budget" in err


def test_cli_audit_writes_report(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    code = main(["audit", "--family", "cycle:4..12", "--out", str(out_file)])
    capsys.readouterr()
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["ok"] and len(payload["instances"]) == 9


def test_cli_audit_errata_exit_zero(capsys):
    code = main(["audit", "--family", "circulant:6..8:1,3"])
    out, _ = capsys.readouterr()
    assert code == 0
    payload = json.loads(out)
    assert payload["instances"][0]["errata"] is True


def test_cli_audit_multiple_families(capsys):
    code = main(["audit", "--family", "path:4..6", "--family", "wheel:4..5"])
    out, _ = capsys.readouterr()
    payload = json.loads(out)
    assert [r["spec"] for r in payload["instances"]] == [
        "path:4", "path:5", "path:6", "wheel:4", "wheel:5",
    ]


def test_cli_perturb_vertex(capsys):
    code = main(["perturb", "--mode", "vertex", "path:7"])
    out, _ = capsys.readouterr()
    payload = json.loads(out)
    assert code == 0 and payload["found"] and payload["size"] == 2
    assert payload["mode"] == "vertex"


def test_cli_perturb_edge_no_witness(tmp_path, capsys):
    doc = tmp_path / "k2.txt"
    doc.write_text("2 1\n0 1\n")
    code = main(["perturb", "--mode", "edge", str(doc)])
    out, _ = capsys.readouterr()
    payload = json.loads(out)
    assert code == 0 and payload["found"] is False and payload["size"] is None


def test_cli_requires_subcommand(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_cli_version(capsys):
    assert main(["--version"]) == 0
    out, _ = capsys.readouterr()
    assert out.strip() == dc.__version__
