"""Tests for the check manifest, the runner, and the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from cubiclat import catalog, checks
from cubiclat.checks import CheckSpec, UnknownCheck, check_ids, run_checks
from cubiclat.cli import main
from cubiclat.core import lattice_to_json
from cubiclat.report import run_certificate

FAST = ["K.d9", "M.gram", "N.gram"]


def test_manifest_shape():
    ids = [spec.check_id for spec in checks.MANIFEST]
    assert len(ids) == 20
    assert ids == sorted(ids)
    assert len(set(ids)) == 20
    for spec in checks.MANIFEST:
        assert spec.summary
    assert set(checks.REGISTRY) == set(ids)
    assert list(check_ids()) == ids


def test_run_checks_subset():
    reports = run_checks(["N.gram", "K.d9"])
    assert [r.check_id for r in reports] == ["K.d9", "N.gram"]
    for r in reports:
        assert r.ok
        assert r.status == "pass"
        assert r.elapsed_ms >= 0


def test_run_checks_unknown_id():
    with pytest.raises(UnknownCheck) as exc:
        run_checks(["N.gram", "bogus"])
    assert exc.value.name == "bogus"
    assert "N.gram" in exc.value.valid


def test_run_checks_thread_count_does_not_change_results():
    serial = run_checks(FAST, threads=1)
    parallel = run_checks(FAST, threads=3)
    assert [(r.check_id, r.ok) for r in serial] == \
        [(r.check_id, r.ok) for r in parallel]


def test_cli_checks_list():
    result = CliRunner().invoke(main, ["checks", "list"])
    assert result.exit_code == 0
    for check_id in check_ids():
        assert check_id in result.output


def test_cli_checks_run_single():
    result = CliRunner().invoke(main, ["checks", "run", "--name", "N.gram"])
    assert result.exit_code == 0
    assert "pass" in result.output
    assert "1 checks: 1 passed, 0 failed" in result.output


def test_cli_checks_run_json_sorted():
    result = CliRunner().invoke(
        main, ["checks", "run", "--name", "N.gram", "--name", "M.gram",
               "--json"])
    assert result.exit_code == 0
    lines = [json.loads(line) for line in result.output.splitlines()]
    assert [r["check_id"] for r in lines] == ["M.gram", "N.gram"]
    assert all(r["status"] == "pass" for r in lines)


def test_cli_checks_run_selector_usage_errors():
    runner = CliRunner()
    neither = runner.invoke(main, ["checks", "run"])
    assert neither.exit_code == 2
    assert "--all or --name" in neither.output
    both = runner.invoke(main, ["checks", "run", "--all", "--name", "N.gram"])
    assert both.exit_code == 2


def test_cli_checks_run_unknown_id():
    result = CliRunner().invoke(main, ["checks", "run", "--name", "bogus"])
    assert result.exit_code == 2
    assert "unknown check id 'bogus'" in result.output


def test_cli_checks_run_reports_failure(monkeypatch):
    spec = CheckSpec(
        "tmp.fail", "always fails",
        lambda: run_certificate("tmp.fail", "always fails",
                                lambda: (False, {"reason": "test"})))
    monkeypatch.setitem(checks.REGISTRY, "tmp.fail", spec)
    result = CliRunner().invoke(main, ["checks", "run", "--name", "tmp.fail"])
    assert result.exit_code == 1
    assert "fail" in result.output
    assert "details" in result.output


def test_cli_lat_show_catalog_entry():
    result = CliRunner().invoke(main, ["lat", "show", "M", "--invariants"])
    assert result.exit_code == 0
    assert "rank 10" in result.output
    assert "det 3072" in result.output
    assert "signature (10, 0)" in result.output
    assert "even" in result.output


def test_cli_lat_show_roots():
    result = CliRunner().invoke(main, ["lat", "show", "E8(2)", "--roots", "4"])
    assert result.exit_code == 0
    assert "vectors of norm 4: 240" in result.output


def test_cli_lat_show_planes():
    result = CliRunner().invoke(main, ["lat", "show", "N", "--planes"])
    assert result.exit_code == 0
    assert "plane classes: 19" in result.output


def test_cli_lat_show_vectors():
    result = CliRunner().invoke(main, ["lat", "show", "A2", "--vectors", "2"])
    assert result.exit_code == 0
    assert "norm 2 (6):" in result.output


def test_cli_lat_show_disc():
    trivial = CliRunner().invoke(main, ["lat", "show", "U", "--disc"])
    assert trivial.exit_code == 0
    assert "trivial" in trivial.output
    d4 = CliRunner().invoke(main, ["lat", "show", "D4", "--disc"])
    assert d4.exit_code == 0
    assert "[2, 2]" in d4.output


def test_cli_lat_show_vectors_rejects_indefinite():
    result = CliRunner().invoke(main, ["lat", "show", "U", "--vectors", "2"])
    assert result.exit_code == 2
    assert "positive definite" in result.output


def test_cli_lat_show_file_target(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(lattice_to_json(catalog.standard("A2")))
    result = CliRunner().invoke(main, ["lat", "show", str(path), "--invariants"])
    assert result.exit_code == 0
    assert "rank 2" in result.output
    assert "det 3" in result.output


def test_cli_lat_show_file_parse_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"gram": [[3, ]]}')
    result = CliRunner().invoke(main, ["lat", "show", str(path)])
    assert result.exit_code == 2
    assert "parse error at line 1" in result.output


def test_cli_lat_show_file_bad_gram(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"gram": [[0, 1], [2, 0]], "labels": ["a", "b"]}')
    result = CliRunner().invoke(main, ["lat", "show", str(path)])
    assert result.exit_code == 2
    assert "not symmetric" in result.output


def test_cli_lat_show_unknown_target():
    result = CliRunner().invoke(main, ["lat", "show", "Zorro"])
    assert result.exit_code == 2
    assert "catalog names" in result.output


def test_cli_hassett_sweep():
    result = CliRunner().invoke(main, ["hassett", "sweep", "--dmax", "30"])
    assert result.exit_code == 0
    assert "admissible discriminants <= 30: 8" in result.output
    assert "labeled and verified: 8" in result.output


def test_cli_hassett_sweep_json():
    result = CliRunner().invoke(
        main, ["hassett", "sweep", "--dmax", "20", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["check_id"] == "hassett.sweep"
    assert payload["status"] == "pass"


def test_cli_delpezzo_verify():
    result = CliRunner().invoke(main, ["delpezzo", "verify"])
    assert result.exit_code == 0
    assert "lines: 27  sixers: 72  double sixes: 36" in result.output
