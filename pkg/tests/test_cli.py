"""End-to-end command-line behavior: output shapes, exit codes, determinism."""

import json

import pytest

from nilcoh.catalog import iwasawa_spec, kodaira_spec, nakamura_ce_spec, torus_spec
from nilcoh.cli import main
from nilcoh.dsl import format_structure_file, parse_structure_file


@pytest.fixture
def files(tmp_path):
    paths = {}
    for spec in (iwasawa_spec(), kodaira_spec(), torus_spec(1), torus_spec(2), nakamura_ce_spec()):
        p = tmp_path / (spec.name + ".alg")
        p.write_text(format_structure_file(spec), encoding="ascii")
        paths[spec.name] = str(p)
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra bad dim 2\nd a2 = (1)*a1^~a2\n", encoding="ascii")
    paths["bad"] = str(bad)
    syntax = tmp_path / "syntax.alg"
    syntax.write_text("algebra broken dim 2\nd a2 = 1*a1\n", encoding="ascii")
    paths["syntax"] = str(syntax)
    return paths


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_valid(files, capsys):
    code, out, _ = run(capsys, ["validate", files["iwasawa"]])
    assert code == 0
    payload = json.loads(out)
    assert payload["name"] == "iwasawa"
    assert payload["n"] == 3
    assert payload["valid"]["jacobi_ok"] is True
    assert payload["nilpotent_J"] is True
    assert payload["filtration"] == [4, 6]


def test_validate_invalid_exits_one(files, capsys):
    code, out, _ = run(capsys, ["validate", files["bad"]])
    assert code == 1
    payload = json.loads(out)
    assert payload["valid"]["jacobi_ok"] is False
    assert payload["valid"]["failures"][0]["generator"] == 2
    assert payload["filtration"] == []


def test_validate_syntax_error_exits_two(files, capsys):
    code, out, err = run(capsys, ["validate", files["syntax"]])
    assert code == 2
    assert "line 2" in err


def test_missing_file_exits_two(capsys):
    code, _, err = run(capsys, ["validate", "/no/such/file.alg"])
    assert code == 2
    assert "cannot read" in err


def test_table_json(files, capsys):
    code, out, _ = run(capsys, ["table", files["iwasawa"], "--theory", "bc"])
    assert code == 0
    payload = json.loads(out)
    assert payload["hodge"]["bc"][0][1] == 2
    assert payload["validity"] == "nilpotent_J"

    code, out, _ = run(capsys, ["table", files["kodaira"], "--theory", "aeppli"])
    assert json.loads(out)["hodge"]["aeppli"][0][1] == 2

    code, out, _ = run(capsys, ["table", files["iwasawa"], "--theory", "derham"])
    assert json.loads(out)["hodge"]["derham"] == [1, 4, 8, 10, 8, 4, 1]


def test_table_pretty(files, capsys):
    code, out, _ = run(capsys, ["table", files["iwasawa"], "--theory", "bc", "--pretty"])
    assert code == 0
    assert "p\\q" in out and "bott_chern" in out


def test_table_unknown_theory_exits_two(files, capsys):
    code, _, err = run(capsys, ["table", files["iwasawa"], "--theory", "wat"])
    assert code == 2
    assert "unknown theory" in err


def test_table_ce_only_validity(files, capsys):
    code, out, _ = run(capsys, ["table", files["nakamura_ce"], "--theory", "bc"])
    assert code == 0
    assert json.loads(out)["validity"] == "ce_only"


def test_metric_check_pass_and_fail(files, capsys):
    code, out, _ = run(capsys, ["metric", files["kodaira"], "--check", "skt"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verdicts"]["metric"]["holds"] is True
    assert payload["verdicts"]["metric"]["positive"] is True

    code, out, _ = run(capsys, ["metric", files["iwasawa"], "--check", "astheno"])
    assert code == 1
    payload = json.loads(out)
    w = payload["verdicts"]["metric"]["witness"]
    assert w[0]["monomial"] == "a1^a2^~a1^~a2"
    assert w[0]["coeff"] == {"re": "0", "im": "-1"}


def test_metric_diag_and_hmatrix(files, capsys, tmp_path):
    code, out, _ = run(
        capsys, ["metric", files["iwasawa"], "--diag", "1,2,1", "--check", "gauduchon"]
    )
    assert code == 0

    hpath = tmp_path / "H.json"
    hpath.write_text(
        json.dumps(
            {
                "H": [
                    [{"re": "2", "im": "0"}, {"re": "0", "im": "1"}],
                    [{"re": "0", "im": "-1"}, {"re": "1", "im": "0"}],
                ]
            }
        ),
        encoding="ascii",
    )
    code, out, _ = run(
        capsys, ["metric", files["kodaira"], "--hmatrix", str(hpath), "--check", "skt"]
    )
    assert code == 0
    assert json.loads(out)["verdicts"]["metric"]["positive"] is True


def test_metric_bad_diag_exits_two(files, capsys):
    code, _, err = run(
        capsys, ["metric", files["iwasawa"], "--diag", "1,2i,1", "--check", "skt"]
    )
    assert code == 2


def test_metric_pluriclosed_alias(files, capsys):
    code, out, _ = run(
        capsys, ["metric", files["iwasawa"], "--check", "pluriclosed:1"]
    )
    assert code == 0


def test_obstruct_iwasawa(files, capsys):
    code, out, _ = run(capsys, ["obstruct", files["iwasawa"], "--diag", "1,1,1"])
    assert code == 1
    v = json.loads(out)["verdicts"]
    assert v["h01_bc"] == 2 and v["h01_a"] == 3 and v["gap"] == 1
    assert v["jost_yau"]["status"] == "fail"
    assert v["jost_yau"]["witness"][0]["monomial"] == "a3"
    assert v["astheno_excluded"] is True
    assert v["gauduchon"] is True
    assert v["metric_positive"] is True


def test_obstruct_without_metric(files, capsys):
    code, out, _ = run(capsys, ["obstruct", files["torus2"]])
    assert code == 0
    v = json.loads(out)["verdicts"]
    assert v["gap"] == 0 and v["astheno_excluded"] is False
    assert "gauduchon" not in v and "l_rank" not in v


def test_product_round_trip(files, capsys, tmp_path):
    out_path = tmp_path / "prod.alg"
    code, _, _ = run(
        capsys,
        ["product", files["kodaira"], files["torus1"], "-o", str(out_path)],
    )
    assert code == 0
    spec = parse_structure_file(out_path.read_text(encoding="ascii"))
    assert spec.n == 3
    assert spec.name == "kodaira_x_torus1"

    # stdout mode emits the same text
    code, out, _ = run(capsys, ["product", files["kodaira"], files["torus1"]])
    assert out == out_path.read_text(encoding="ascii")


def test_catalog_list_and_show(capsys):
    code, out, _ = run(capsys, ["catalog", "list"])
    assert code == 0
    keys = json.loads(out)["keys"]
    assert "iwasawa" in keys

    code, out, _ = run(capsys, ["catalog", "show", "kodaira"])
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 2
    assert payload["structure"][0] == "algebra kodaira dim 2"
    assert any(fx["name"] == "skt_identity" for fx in payload["fixtures"])


def test_catalog_show_unknown_exits_two(capsys):
    code, _, err = run(capsys, ["catalog", "show", "nope"])
    assert code == 2
    assert "iwasawa" in err  # the message lists what exists


def test_catalog_suite_subset(capsys):
    code, out, _ = run(capsys, ["catalog", "suite", "kodaira", "torus(1)"])
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert [e["key"] for e in payload["entries"]] == ["kodaira", "torus(1)"]


def test_byte_determinism(files, capsys):
    outs = set()
    for _ in range(2):
        _, out, _ = run(capsys, ["obstruct", files["iwasawa"], "--diag", "1,1,1"])
        outs.add(out)
    assert len(outs) == 1
    outs = set()
    for _ in range(2):
        _, out, _ = run(capsys, ["table", files["iwasawa"], "--theory", "bc"])
        outs.add(out)
    assert len(outs) == 1


def test_json_flag_is_accepted(files, capsys):
    code, out, _ = run(capsys, ["table", files["iwasawa"], "--theory", "bc", "--json"])
    assert code == 0
    json.loads(out)
