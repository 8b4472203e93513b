import json

import pytest
from click.testing import CliRunner

from padictower.cli import Client, main
from padictower.tables import build_table, emit_table
from padictower.tower import TowerRing

RAMIFICATION_3_2 = """\
kind,index,value
breakpoint,0/1,0/1
breakpoint,1/1,2/1
breakpoint,2/1,8/1
breakpoint,3/1,26/1
different,1,6/1
different,2,18/1
tower-different,-,45/1
"""

GROWTH_5 = """\
n,valuation
01,-1/1
02,-5/4
03,-9/5
04,-229/100
"""


# ---------------------------------------------------------------------------
# tables


def test_ramification_table_golden():
    assert emit_table("ramification", {"p": 3, "n": 2}) == RAMIFICATION_3_2


def test_growth_table_golden():
    assert emit_table("valuation-growth",
                      {"p": 5, "n_max": 4}) == GROWTH_5


def test_omega_table_json_golden():
    doc = json.loads(emit_table("omega", {"p": 5, "n": 2}, fmt="json"))
    assert doc["schema"] == 1
    assert doc["columns"] == ["sign", "order_exponent", "factors",
                              "valuation"]
    assert ["-", "2", "gamma-1;cyclo(p^1)", "1/4"] in doc["rows"]
    assert ["+", "2", "cyclo(p^2)", "inf"] in doc["rows"]


def test_table_bytes_are_stable():
    a = emit_table("omega", {"p": 7, "n": 3}, fmt="json")
    b = emit_table("omega", {"p": 7, "n": 3}, fmt="json")
    assert a == b


def test_table_rejects_unknown_kind_and_format():
    with pytest.raises(ValueError):
        build_table("no-such-table")
    with pytest.raises(ValueError):
        emit_table("omega", fmt="yaml")


# ---------------------------------------------------------------------------
# service endpoints (in-process)


@pytest.fixture(scope="module")
def http():
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from padictower.service import create_app
    return TestClient(create_app())


def test_health(http):
    body = http.get("/health").json()
    assert body["status"] == "ok" and body["version"]


def test_resolvent_default_alpha(http):
    resp = http.post("/resolvent/compute", json={
        "p": 3, "n": 1, "char": {"tame": 0, "wild": 1}})
    body = resp.json()
    assert resp.status_code == 200
    assert body["meets_bound"] and body["equality"]
    assert body["valuation"] == "1/1" and body["bound"] == "1/1"
    assert body["alpha_valuation"] == "1/3"


def test_resolvent_unmatched_tame_component_vanishes(http):
    # the full-group sum against an unmatched tame index is zero to
    # working precision: still above the bound, but not an equality
    body = http.post("/resolvent/compute", json={
        "p": 3, "n": 1, "char": {"tame": 1, "wild": 1}}).json()
    assert body["meets_bound"] and not body["equality"]
    assert body["valuation"].startswith(">=")


def test_resolvent_explicit_alpha_and_mismatch(http):
    ring = TowerRing.get(3, 1, 1)
    elt = json.loads(ring.psi_uniformizer(1).to_json())
    ok = http.post("/resolvent/compute", json={
        "p": 3, "n": 1, "alpha": elt, "char": {"tame": 2, "wild": 2},
        "group": "gamma"})
    assert ok.status_code == 200
    bad = http.post("/resolvent/compute", json={
        "p": 5, "n": 1, "alpha": elt, "char": {"tame": 1, "wild": 1}})
    assert bad.status_code == 400
    assert "do not match" in bad.json()["detail"]


def test_formula_delta_endpoint(http):
    body = http.post("/formula/eval", json={
        "which": "delta", "p": 5, "n": 2}).json()
    assert body["value"] == "-5/4"
    assert body["identity_checks"] == {"omega_identity": True}


def test_formula_lvalue_vanishing(http):
    body = http.post("/formula/eval", json={
        "which": "lvalue", "p": 5, "n": 2, "W": 1}).json()
    assert body["value"] is None and body["vanishing"] is True
    assert "central zero" in body["explanation"]


def test_formula_lvalue_with_invariants(http):
    body = http.post("/formula/eval", json={
        "which": "lvalue", "p": 5, "n": 2, "W": -1,
        "lambda": 2, "mu": 1}).json()
    assert body["value"] == "-3/20"
    assert all(body["identity_checks"].values())


def test_formula_bad_input(http):
    resp = http.post("/formula/eval", json={"which": "bound", "p": 3})
    assert resp.status_code == 400


def test_table_endpoint(http):
    body = http.post("/table/emit", json={
        "kind": "ramification", "params": {"p": 3, "n": 2}}).json()
    assert body["content"] == RAMIFICATION_3_2


def test_suite_endpoint_small(http):
    body = http.post("/suite/run", json={
        "suite": "formula-consistency", "ps": [3], "fs": [1], "n_max": 1,
        "bound_samples": 5, "uniformizer_samples": 3,
        "trace_one_trials": 2, "tame_tries": 16}).json()
    assert body["exit_code"] == 0
    assert len(body["canonical_sha256"]) == 64
    assert body["report"]["summary"]["fail"] == 0
    assert "timing" in body["report"]


def test_suite_endpoint_unknown_name(http):
    resp = http.post("/suite/run", json={"suite": "nope"})
    assert resp.status_code == 400


# ---------------------------------------------------------------------------
# CLI (thin client, in-process by default)


@pytest.fixture()
def runner():
    return CliRunner()


def test_cli_suite_list(runner):
    res = runner.invoke(main, ["suite", "list"])
    assert res.exit_code == 0
    names = res.output.split()
    assert "resolvent-bound" in names and "gauss-lambda" in names
    assert names == sorted(names)


def test_cli_formula_eval_delta(runner):
    res = runner.invoke(main, ["formula", "eval", "--which", "delta",
                               "--p", "5", "--n", "2"])
    assert res.exit_code == 0
    assert json.loads(res.output)["value"] == "-5/4"


def test_cli_formula_eval_vanishing_exits_zero(runner):
    res = runner.invoke(main, ["formula", "eval", "--which", "lvalue",
                               "--p", "5", "--n", "2", "--w", "1"])
    assert res.exit_code == 0
    assert json.loads(res.output)["vanishing"] is True


def test_cli_resolvent_compute(runner):
    res = runner.invoke(main, ["resolvent", "compute", "--p", "3",
                               "--n", "1", "--char", "0,1"])
    assert res.exit_code == 0
    assert json.loads(res.output)["equality"] is True


def test_cli_resolvent_alpha_from_file(runner, tmp_path):
    path = tmp_path / "alpha.json"
    path.write_text(TowerRing.get(3, 1, 1).psi_uniformizer(1).to_json())
    res = runner.invoke(main, ["resolvent", "compute", "--p", "3",
                               "--n", "1", "--alpha", f"@{path}",
                               "--char", "2,1", "--group", "gamma"])
    assert res.exit_code == 0
    assert json.loads(res.output)["meets_bound"] is True


def test_cli_bad_char_spec_is_usage_error(runner):
    res = runner.invoke(main, ["resolvent", "compute", "--p", "3",
                               "--n", "1", "--char", "x"])
    assert res.exit_code == 2


def test_cli_unknown_config_key(runner, tmp_path):
    cfg = tmp_path / "cfg"
    cfg.write_text("volume=11\n")
    res = runner.invoke(main, ["--config", str(cfg), "suite", "list"])
    assert res.exit_code == 2
    assert "unknown key" in res.stderr


def test_cli_config_seed_and_output_dir(runner, tmp_path, monkeypatch):
    monkeypatch.delenv("PADICTOWER_OUTPUT_DIR", raising=False)
    cfg = tmp_path / "cfg"
    cfg.write_text(f"seed=9\noutput_dir={tmp_path}\n")
    res = runner.invoke(main, [
        "--config", str(cfg), "suite", "run", "formula-consistency",
        "--p", "3", "--n-max", "1", "--out", "rep.json"])
    assert res.exit_code == 0
    body = json.loads((tmp_path / "rep.json").read_text())
    assert body["report"]["seed"] == 9
    assert body["exit_code"] == 0


def test_cli_table_emit_to_stdout(runner):
    res = runner.invoke(main, ["table", "emit", "--kind", "ramification",
                               "--p", "3", "--n", "2"])
    assert res.exit_code == 0
    assert res.output == RAMIFICATION_3_2


def test_cli_table_emit_env_output_dir(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("PADICTOWER_OUTPUT_DIR", str(tmp_path))
    res = runner.invoke(main, ["table", "emit", "--kind",
                               "valuation-growth", "--p", "5",
                               "--n-max", "4", "--out", "growth.csv"])
    assert res.exit_code == 0
    assert (tmp_path / "growth.csv").read_text() == GROWTH_5


def test_cli_suite_run_requires_names(runner):
    res = runner.invoke(main, ["suite", "run"])
    assert res.exit_code == 2
    res = runner.invoke(main, ["suite", "run", "nope"])
    assert res.exit_code == 2


def test_cli_suite_run_multi_writes_directory(runner, tmp_path, monkeypatch):
    monkeypatch.delenv("PADICTOWER_OUTPUT_DIR", raising=False)
    res = runner.invoke(main, [
        "suite", "run", "formula-consistency", "lagrange",
        "--p", "3", "--n-max", "1", "--out", str(tmp_path / "reports")])
    assert res.exit_code == 0
    names = {p.name for p in (tmp_path / "reports").iterdir()}
    assert names == {"formula-consistency.json", "lagrange.json"}
    assert "sha256=" in res.stderr


class _Stub:
    def __init__(self, status_code, body):
        self.status_code = status_code
        self._body = body
        self.text = json.dumps(body)

    def json(self):
        return self._body


def test_client_maps_precision_conflict_to_exit_3(monkeypatch):
    client = Client(None)
    monkeypatch.setattr(
        client, "_client",
        type("T", (), {"post": lambda self, path, json: _Stub(
            409, {"detail": "precision exhausted"})})())
    with pytest.raises(SystemExit) as exc:
        client.post("/resolvent/compute", {})
    assert exc.value.code == 3


def test_client_maps_client_error_to_exit_2(monkeypatch):
    client = Client(None)
    monkeypatch.setattr(
        client, "_client",
        type("T", (), {"post": lambda self, path, json: _Stub(
            400, {"detail": "bad input"})})())
    with pytest.raises(SystemExit) as exc:
        client.post("/formula/eval", {})
    assert exc.value.code == 2
