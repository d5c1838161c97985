import json

import pytest

from semiring_lab.claims import PROVEN, REGISTRY, claim, single
from semiring_lab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_validate(capsys, tmp_path):
    assert run(capsys, "validate", "zmod(4)") == (0, "valid\torder=4\tring=True\tV={0,1,2,3}\n")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"add": [[0, 1], [1, 1]], "mul": [[0, 0], [0, 0]]}))
    code, out = run(capsys, "validate", str(bad))
    assert code == 1 and out.startswith("invalid\taxiom=mul_identity")


def test_ideals_closure_topology(capsys, tmp_path):
    code, out = run(capsys, "ideals", "trunc(2)", "--classify", "--dot", str(tmp_path / "t.dot"),
                    "--plot", str(tmp_path / "t.png"))
    assert code == 0 and out.splitlines()[2].split("\t")[:5] == ["{0,2}", "1", "0", "0", "1"]
    assert (tmp_path / "t.dot").read_text().startswith("digraph")
    assert (tmp_path / "t.png").stat().st_size > 0
    assert run(capsys, "closure", "trunc(2)", "--ideal", "0,2") == (0, "{0,2}\n")
    assert run(capsys, "closure", "zmod(4)", "--ideal", "0,1")[0] == 1
    code, out = run(capsys, "topology", "zmod(4)")
    assert code == 0 and "T0\t1" in out and "points\t3" in out
    assert run(capsys, "topology", "bool2", "--dot")[1].count("->") == 1


def test_enumerate(capsys, tmp_path):
    code, out = run(capsys, "enumerate", "--order", "3", "--out", str(tmp_path / "c.jsonl"))
    assert code == 0 and out == "order\t3\tclasses\t6\n"
    assert len((tmp_path / "c.jsonl").read_text().splitlines()) == 6


def test_audit_outputs_and_replay(capsys, tmp_path):
    out_json, md, csv_ = tmp_path / "a.json", tmp_path / "a.md", tmp_path / "a.csv"
    code, out = run(capsys, "audit", "--order", "3", "--fixtures", "--json", str(out_json), "--md", str(md),
                    "--csv", str(csv_), "--figures", str(tmp_path / "figs"), "--max-figures", "2")
    assert code == 0 and out.startswith("claim\tstatus")
    report = json.loads(out_json.read_text())
    assert report["complete"] and md.read_text().startswith("# Audit summary")
    assert csv_.read_text().startswith("claim,status")
    pngs = sorted(p.name for p in (tmp_path / "figs").iterdir())
    assert "verdicts.png" in pngs and len(pngs) == 3
    code, out = run(capsys, "replay", str(out_json))
    assert code == 0 and "MISMATCH" not in out and out.count("MATCH") == len(report["counterexamples"])
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(report["counterexamples"][0]))
    assert run(capsys, "replay", str(cert))[0] == 0


def test_usage_errors(capsys):
    assert run(capsys, "audit")[0] == 1
    assert run(capsys, "audit", "--order", "2", "--props", "nope")[0] == 1
    with pytest.raises(SystemExit) as err:
        main(["bogus"])
    assert err.value.code == 1
    assert run(capsys, "validate", "no_such_fixture")[0] == 1


def test_proven_failure_exit_code(capsys, tmp_path):
    @claim("zz.cli_false", "always refuted", status=PROVEN, instances=single, module="kernel")
    def _never(S, w):
        return False

    try:
        code, _ = run(capsys, "audit", "--order", "2", "--props", "zz.*", "--json", str(tmp_path / "r.json"))
    finally:
        REGISTRY.pop("zz.cli_false")
    assert code == 2
    assert json.loads((tmp_path / "r.json").read_text())["complete"] is False
