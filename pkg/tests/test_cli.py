import json

import pytest

from interpforge import cli
from interpforge import logic as L
from interpforge import theories as T


def run_cli(capsys, argv):
    code = cli.main(argv)
    return code, capsys.readouterr()


def test_theories_list(capsys):
    code, cap = run_cli(capsys, ["theories", "list"])
    assert code == cli.EXIT_OK
    names = cap.out.split()
    assert names == T.theory_names()
    assert "Q" in names and "TCeps" in names


def test_theories_show(capsys):
    code, cap = run_cli(capsys, ["theories", "show", "Q"])
    assert code == cli.EXIT_OK
    data = json.loads(cap.out)
    assert data["name"] == "Q"
    assert len(data["axioms"]) == 7
    assert data["signature"]["functions"] == {"S": 1, "plus": 2, "times": 2}


def test_schema_instantiation(capsys):
    code, cap = run_cli(capsys, ["schema", "ID", "ID4", "01"])
    assert code == cli.EXIT_OK
    want = T.instantiate_schema(T.get_theory("ID"), "ID4", "01")
    assert cap.out.strip() == L.to_sexpr(want)
    code, cap = run_cli(capsys, ["schema", "WD", "WD1", "01,1"])
    assert code == cli.EXIT_OK
    want = T.instantiate_schema(T.get_theory("WD"), "WD1", ("01", "1"))
    assert cap.out.strip() == L.to_sexpr(want)


def test_schema_bad_param(capsys):
    code, cap = run_cli(capsys, ["schema", "IQ", "IQ3", "xyz"])
    assert code == cli.EXIT_USAGE
    assert "error" in cap.err


def test_translate(capsys):
    code, cap = run_cli(capsys,
                        ["translate", "iq_in_iqstar", "(leq zero zero)"])
    assert code == cli.EXIT_OK
    assert "plus" in cap.out and "leq" not in cap.out


def test_obligations_listing(capsys):
    code, cap = run_cli(capsys, ["obligations", "iq_in_iqstar"])
    assert code == cli.EXIT_OK
    labels = cap.out.splitlines()
    assert labels[0] == "DomainNonempty"
    code, cap = run_cli(capsys, ["obligations", "iq_in_iqstar", "--json"])
    data = json.loads(cap.out)
    assert data[0]["label"] == "DomainNonempty"
    assert all(set(rec) == {"label", "sentence"} for rec in data)


def test_obligations_alpha_override(capsys):
    code, cap = run_cli(capsys,
                        ["obligations", "id_in_idstar", "--alpha", "1"])
    assert code == cli.EXIT_OK
    schema_labels = [l for l in cap.out.splitlines()
                     if l.startswith("SchemaInstanceTranslation")]
    assert schema_labels == ["SchemaInstanceTranslation:ID4:0",
                             "SchemaInstanceTranslation:ID4:1"]


def test_verify_ok(capsys):
    code, cap = run_cli(capsys, ["verify", "iq_in_iqstar", "--json"])
    assert code == cli.EXIT_OK
    data = json.loads(cap.out)
    assert set(data) == {"interpretation", "bounds", "obligations", "summary"}
    assert data["summary"]["fails"] == 0
    assert data["summary"]["budget_exceeded"] == 0
    assert data["summary"]["holds"] == data["summary"]["total"]
    labels = [rec["label"] for rec in data["obligations"]]
    assert labels == sorted(labels)
    for rec in data["obligations"]:
        assert rec["verdict"] == "holds"
        assert isinstance(rec["elapsed_ms"], int)


def test_verify_budget_exceeded(capsys):
    code, cap = run_cli(capsys,
                        ["verify", "iq_in_iqstar", "--budget", "50"])
    assert code == cli.EXIT_BUDGET
    assert "budget-exceeded" in cap.out


def test_verify_failure_exit_code(capsys, monkeypatch):
    report = {"interpretation": "iq_in_iqstar",
              "bounds": {"range": "nats_upto:3", "schema": {}, "budget": None},
              "obligations": [
                  {"label": "AxiomTranslation:IQ1",
                   "sentence": "(= zero zero)", "verdict": "fails",
                   "elapsed_ms": 1, "counterexample": {"x#1": 2}}],
              "summary": {"total": 1, "holds": 0, "fails": 1,
                          "budget_exceeded": 0}}
    monkeypatch.setattr(cli, "run_verification", lambda *a, **k: report)
    code, cap = run_cli(capsys, ["verify", "iq_in_iqstar"])
    assert code == cli.EXIT_FAIL
    assert "fails" in cap.out and '"x#1": 2' in cap.out


def test_verify_text_and_json_deterministic():
    report = cli.run_verification("iq_in_iqstar", {"nat": 5})
    assert cli.render_report(report, "json") == \
        cli.render_report(report, "json")
    assert cli.render_report(report, "text") == \
        cli.render_report(report, "text")
    assert json.loads(cli.render_report(report, "json")) == report
    assert report["bounds"]["range"] == "nats_upto:5"


def test_verify_rejects_bad_bounds():
    with pytest.raises(cli.CliError):
        cli.run_verification("iq_in_iqstar", {"nat": 0})


def test_config_file_defaults(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"nat": 6, "budget": 10 ** 8}))
    code, cap = run_cli(capsys, ["--config", str(cfg), "verify",
                                 "iq_in_iqstar", "--json"])
    assert code == cli.EXIT_OK
    data = json.loads(cap.out)
    assert data["bounds"]["range"] == "nats_upto:6"
    assert data["bounds"]["budget"] == 10 ** 8


def test_config_env_and_flag_precedence(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"nat": 6}))
    monkeypatch.setenv("INTERPFORGE_CONFIG", str(cfg))
    code, cap = run_cli(capsys, ["verify", "iq_in_iqstar", "--json",
                                 "--nat", "4"])
    assert code == cli.EXIT_OK
    assert json.loads(cap.out)["bounds"]["range"] == "nats_upto:4"


def test_encode_decode_round_trip(capsys):
    code, cap = run_cli(capsys, ["encode", "0110"])
    assert code == cli.EXIT_OK
    literal = cap.out.strip()
    code, cap = run_cli(capsys, ["decode", literal])
    assert code == cli.EXIT_OK
    assert cap.out.strip() == "0110"


def test_eval(capsys):
    code, cap = run_cli(capsys, ["eval", "Naturals", "nats_upto:5",
                                 "(all x (leq x x))"])
    assert code == cli.EXIT_OK
    assert cap.out.strip() == "true"
    code, cap = run_cli(capsys, ["eval", "BitStrings", "strings_upto:2",
                                 "(all x (= x (o x x)))"])
    assert cap.out.strip() == "false"


def test_pipeline_output(capsys):
    code, cap = run_cli(capsys, ["pipeline", "iqstar_in_iqpp",
                                 "iqpp_in_iqp"])
    assert code == cli.EXIT_OK
    data = json.loads(cap.out)
    assert data["dimension"] == 1
    assert data["source"] == T.get_theory("IQ*").signature.name


def test_pipeline_mismatch(capsys):
    code, cap = run_cli(capsys, ["pipeline", "id_in_idstar",
                                 "iq_in_iqstar"])
    assert code == cli.EXIT_USAGE
    assert "error" in cap.err


def test_unknown_interpretation(capsys):
    code, cap = run_cli(capsys, ["verify", "nope"])
    assert code == cli.EXIT_USAGE
    assert "error" in cap.err


def test_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == cli.EXIT_USAGE
