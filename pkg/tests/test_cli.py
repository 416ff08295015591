import io
import json

import pytest

from hilbring import algebra, structure_constants
from hilbring.cli import main
from hilbring.reference import RELATION_TABLE


def run(argv, tmp_path=None):
    out = io.StringIO()
    prefix = ["--cache-dir", str(tmp_path)] if tmp_path is not None else ["--no-cache"]
    status = main(prefix + argv, out=out)
    return status, out.getvalue()


def test_theta_example():
    assert run(["theta", "[0,1]", "[1]", "[1]"]) == (0, "3\n")


def test_theta_explain_is_json():
    status, text = run(["theta", "[1,1]", "[1]", "[0,1]", "--explain"])
    doc = json.loads(text)
    assert status == 0 and doc["schema_version"] == 1
    assert doc["derivation"]["value"] == doc["value"]


def test_multiply_json():
    status, text = run(["multiply", "[1]", "[1]", "--d", "4"])
    assert status == 0
    assert json.loads(text)["product"] == [["[0,1]", "3"], ["[2]", "2"]]


def test_multiply_support_error(capsys):
    status, _ = run(["multiply", "[0,0,1]", "[1]", "--d", "3"])
    assert status == 2
    assert "support" in capsys.readouterr().err


def test_bad_cycle_type_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        run(["theta", "0,1", "[1]", "[1]"])
    assert exc.value.code == 2


def test_relation_table_tsv():
    status, text = run(["relation-table", "--max-d", "6"])
    assert status == 0
    lines = text.strip().split("\n")
    assert lines[0].split("\t")[0] == "d"
    for line in lines[1:]:
        cells = [int(c) for c in line.split("\t")]
        d = cells[0]
        assert tuple(cells[1:12]) == RELATION_TABLE[d]
        assert cells[-1] == sum(RELATION_TABLE[d])


def test_relation_table_long_run_guard():
    assert run(["relation-table", "--max-d", "12"])[0] == 2


def _forget():
    structure_constants.clear_cache()
    algebra._mono_cache.clear()


def test_json_independent_of_jobs_and_cache(tmp_path):
    _forget()
    cold = run(["relation-table", "--max-d", "7", "--json"], tmp_path)[1]
    _forget()
    warm = run(["relation-table", "--max-d", "7", "--json"], tmp_path)[1]
    parallel = run(["--jobs", "2", "relation-table", "--max-d", "7", "--json"])[1]
    assert cold == warm == parallel
    assert json.loads(cold)["rows"][6]["total"] == 7


def test_presentation_outputs():
    status, text = run(["presentation", "--d", "4", "--json"])
    doc = json.loads(text)
    assert status == 0
    assert set(doc) == {"schema_version", "d", "m", "generators", "relations", "counts", "total"}
    assert doc["counts"] == {"3": 1, "4": 2}
    status, text = run(["presentation", "--d", "4", "--latex"])
    assert "\\begin{array}" in text
    status, text = run(["presentation", "--d", "4"])
    assert "x^3 - 4*x*y" in text


def test_verify_d4_passes():
    status, text = run(["verify", "--d", "4"])
    assert status == 0 and text.strip().endswith("PASS")


def test_verify_d8_reports_bad_entries():
    status, text = run(["verify", "--d", "8", "--json"])
    doc = json.loads(text)
    assert status == 1 and not doc["passed"]
    assert [a["ok"] for a in doc["ambiguous"]] == [True, False]


def test_verify_computed_and_oracle():
    status, text = run(["verify", "--d", "6", "--source", "computed", "--oracle-support", "5"])
    assert status == 0, text


def test_verify_oracle_cap():
    with pytest.raises(SystemExit):
        run(["--oracle-cap", "4", "verify", "--d", "4", "--oracle-support", "5"])


def test_verify_unknown_reference_d():
    assert run(["verify", "--d", "11"])[0] == 2


def test_identities():
    status, text = run(["identities", "--suite", "pascal"])
    doc = json.loads(text)
    assert status == 0 and doc["passed"] and doc["suite"] == "pascal"


def test_env_var_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("HILBRING_CACHE_DIR", str(tmp_path))
    assert main(["theta", "[0,1]", "[1]", "[1]"], out=io.StringIO()) == 0
    assert (tmp_path / "theta-v1.json").exists()
