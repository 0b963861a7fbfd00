import io
import json

import pytest
from pydantic import ValidationError

from src.cli import CommandHandler, build_parser
from src.cli.command_handler import EXIT_MISMATCH
from src.cli.schemas import (
    IdealModel,
    InvariantsModel,
    OneDimVerdictModel,
    ReplicationModel,
    SweepReportModel,
    VerdictReportModel,
)
from src.core.field import FieldSpec
from src.core.invsys import Functional, build_inverse_system
from src.core.polyring import PolyRing, parse_monomial_key

ALPHA = json.dumps({
    "n": 2,
    "field": "Q",
    "degree": 3,
    "values": {"[3,0]": "1", "[2,1]": "1", "[1,2]": "0", "[0,3]": "0"},
})


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = CommandHandler(stdout=out, stderr=err).run(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_replicate_json():
    code, out, err = run_cli("replicate", "ex34")
    assert code == 0
    data = json.loads(out)
    assert data["matched"] is True
    assert data["report"]["quotient"]["hilbert"] == [1, 2, 2, 1]
    assert err == ""


def test_replicate_table():
    code, out, _ = run_cli("replicate", "ex34", "--format", "table")
    assert code == 0
    assert "1,2,2,1" in out
    assert "invariant quotient Gorenstein: NO" in out
    assert "all stated values matched" in out


def test_replicate_forced_mismatch():
    code, out, _ = run_cli("replicate", "ex35", "--force-trivial-character")
    assert code == EXIT_MISMATCH
    assert json.loads(out)["mismatches"][0]["quantity"] == "functional_equivariant"


def test_check_group_output_is_exact():
    code, out, _ = run_cli("check-group", "--input", '{"zoo": "cyclic3", "field": {"Fp": 7}}')
    assert code == 0
    assert json.loads(out) == {"exists": True, "witness_prime": 3, "r": 3}


def test_check_group_with_generators():
    spec = '{"field": "Q", "generators": [[[0, -1], [1, -1]]]}'
    code, out, _ = run_cli("check-group", "-i", spec)
    assert code == 0
    assert json.loads(out) == {"exists": False, "witness_prime": None, "r": 3}


def test_check_group_table():
    code, out, _ = run_cli("check-group", "-i", '{"zoo": "s3_perm"}', "-f", "table")
    assert code == 0
    assert "6" in out


def test_verify_trivial_group():
    spec = '{"generators": [[[1, 0], [0, 1]]], "degree": 2}'
    code, out, err = run_cli("verify", "--input", spec)
    assert code == 1
    assert out == ""
    assert json.loads(err.strip()) == {"error": "trivial_group", "message": "group must be non-trivial"}


def test_verify_instance():
    spec = json.dumps({"zoo": "cyclic3", "field": "Q", "degree": 3})
    code, out, _ = run_cli("verify", "--input", spec, "--seed", "9")
    assert code == 0
    report = json.loads(out)
    assert report["hypothesis_holds"] is True
    assert report["invariant_quotient"]["gorenstein"] is True
    assert report["invariant_quotient"]["a_invariant"] == report["quotient"]["a_invariant"] == 3


def test_verify_with_character_json():
    spec = json.dumps({
        "zoo": "pm_identity",
        "degree": 3,
        "values": {"[3,0]": 1, "[2,1]": 1},
        "character": {"generator_values": [-1]},
    })
    code, out, _ = run_cli("verify", "-i", spec)
    assert code == 0
    report = json.loads(out)
    assert report["functional_equivariant"] is True
    assert report["invariant_quotient"]["dims"] == [1, 0, 2, 0]
    assert report["theorem_satisfied"] is True


def test_verify_report_table():
    spec = json.dumps({"zoo": "cyclic3", "degree": 2})
    code, out, _ = run_cli("verify", "-i", spec, "-f", "table")
    assert code == 0
    assert "invariant quotient Gorenstein" in out


@pytest.mark.parametrize("argv", [
    ["replicate", "ex34", "--bogus"],
    [],
    ["replicate", "ex77"],
    ["sweep", "--count", "-3"],
])
def test_usage_errors(argv):
    code, _, _ = run_cli(*argv)
    assert code == 2


def test_malformed_json():
    code, out, err = run_cli("construct", "--input", "{not json")
    assert code == 1
    assert out == ""
    assert json.loads(err.strip())["error"] == "invalid_spec"


def test_missing_input():
    code, _, err = run_cli("construct")
    assert code == 1
    assert json.loads(err.strip())["error"] == "invalid_spec"


def test_missing_input_file(tmp_path):
    code, _, err = run_cli("construct", "--input", str(tmp_path / "absent.json"))
    assert code == 1
    assert json.loads(err.strip())["error"] == "invalid_spec"


def test_group_needs_exactly_one_source():
    spec = '{"zoo": "cyclic3", "generators": [[[0, -1], [1, -1]]]}'
    code, _, err = run_cli("check-group", "-i", spec)
    assert code == 1
    payload = json.loads(err.strip())
    assert payload["error"] == "invalid_spec"
    assert "exactly one" in payload["message"]


def test_unknown_keys_rejected():
    code, _, err = run_cli("check-group", "-i", '{"zoo": "cyclic3", "order": 3}')
    assert code == 1
    assert json.loads(err.strip())["error"] == "invalid_spec"


def test_construct_dims():
    code, out, _ = run_cli("construct", "--input", ALPHA)
    assert code == 0
    data = json.loads(out)
    assert [p["dim"] for p in data["pieces"]] == [0, 0, 1, 3]
    assert data["pieces"][2]["basis"] == [{"[0,2]": 1}]


def test_construct_table():
    code, out, _ = run_cli("construct", "--input", ALPHA, "--format", "table")
    assert code == 0
    assert "Y^2" in out


def test_construct_zero_functional():
    spec = json.dumps({"n": 2, "degree": 2, "values": {"[2,0]": 0}})
    code, _, err = run_cli("construct", "-i", spec)
    assert code == 1
    assert json.loads(err.strip())["error"] == "zero_functional"


def _alpha_document(**extra):
    document = {
        "field": "Q",
        "degree": 3,
        "values": {"[3,0]": "1", "[2,1]": "1", "[1,2]": "0", "[0,3]": "0"},
    }
    document.update(extra)
    return json.dumps(document)


def test_construct_accepts_character():
    spec = _alpha_document(n=2, character={"generator_values": ["-1"]})
    code, out, err = run_cli("construct", "-i", spec)
    assert code == 0, err
    data = json.loads(out)
    assert [p["dim"] for p in data["pieces"]] == [0, 0, 1, 3]
    assert data["character"] == {"generator_values": [-1]}
    assert "equivariant" not in data


def test_construct_infers_n_from_keys():
    code, out, _ = run_cli("construct", "-i", _alpha_document(character=["-1"]))
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 2
    assert [p["dim"] for p in data["pieces"]] == [0, 0, 1, 3]


def test_construct_with_group_checks_equivariance():
    spec = _alpha_document(zoo="pm_identity", character={"generator_values": ["-1"]})
    code, out, _ = run_cli("construct", "-i", spec)
    assert code == 0
    data = json.loads(out)
    assert data["equivariant"] is True
    assert data["g_invariant"] is True
    assert data["character"] == {"generator_values": [-1]}


def test_construct_with_group_and_wrong_character():
    # -I は三次の単項式に -1 で作用するので、自明指標では同変にならない
    code, out, _ = run_cli("construct", "-i", _alpha_document(zoo="pm_identity", character=["1"]))
    assert code == 0
    data = json.loads(out)
    assert data["equivariant"] is False
    assert data["g_invariant"] is True


def test_construct_with_group_defaults_to_trivial_character():
    spec = json.dumps({"zoo": "cyclic3", "degree": 2, "values": {"[2,0]": 1, "[1,1]": 1, "[0,2]": 1}})
    code, out, _ = run_cli("construct", "-i", spec)
    assert code == 0
    data = json.loads(out)
    assert data["character"] == {"generator_values": [1]}
    assert data["equivariant"] is False


@pytest.mark.parametrize("extra", [
    {"character": ["0"]},
    {"zoo": "pm_identity", "character": ["0"]},
    {"zoo": "pm_identity", "character": ["2"]},
])
def test_construct_rejects_bad_character(extra):
    code, out, err = run_cli("construct", "-i", _alpha_document(**extra))
    assert code == 1
    assert out == ""
    assert json.loads(err.strip())["error"] == "invalid_character"


def test_construct_cannot_infer_n():
    spec = json.dumps({"degree": 2, "values": {"[2,0]": 1, "[1,1,0]": 1}})
    code, _, err = run_cli("construct", "-i", spec)
    assert code == 1
    assert json.loads(err.strip())["error"] == "invalid_spec"


def test_construct_n_must_match_group():
    code, _, err = run_cli("construct", "-i", _alpha_document(n=3, zoo="pm_identity"))
    assert code == 1
    assert json.loads(err.strip())["error"] == "invalid_spec"


def test_invariants():
    code, out, _ = run_cli("invariants", "-i", '{"zoo": "pm_identity"}', "--max-degree", "3")
    assert code == 0
    data = json.loads(out)
    assert data["group_order"] == 2
    assert [d["dim"] for d in data["degrees"]] == [1, 0, 3, 0]


def test_invariants_cyclic3():
    code, out, _ = run_cli("invariants", "-i", '{"zoo": "cyclic3", "max_degree": 4}')
    assert code == 0
    degrees = json.loads(out)["degrees"]
    assert [d["dim"] for d in degrees] == [1, 0, 1, 2, 1]
    assert degrees[2]["basis"] == [{"[2,0]": 1, "[1,1]": 1, "[0,2]": 1}]


def test_invariants_table():
    code, out, _ = run_cli("invariants", "-i", '{"zoo": "cyclic3"}', "--max-degree", "2", "-f", "table")
    assert code == 0
    assert "X^2 + X*Y + Y^2" in out


def test_unrealizable_group():
    code, _, err = run_cli("check-group", "-i", '{"zoo": "cyclic3", "field": {"Fp": 3}}')
    assert code == 1
    assert json.loads(err.strip())["error"] == "characteristic_divides_order"


SWEEP = json.dumps({"groups": ["cyclic3", "pm_identity"], "fields": ["Q", {"Fp": 5}], "degrees": [2, 3], "count": 3})


def test_sweep_is_byte_stable():
    first = run_cli("sweep", "-i", SWEEP, "--seed", "4", "--workers", "1")
    second = run_cli("sweep", "-i", SWEEP, "--seed", "4", "--workers", "3")
    assert first[0] == second[0] == 0
    assert first[1] == second[1]
    report = json.loads(first[1])
    assert report["config"]["seed"] == 4
    assert report["counterexamples"] == 0


def test_sweep_count_override():
    code, out, _ = run_cli("sweep", "-i", SWEEP, "--count", "1")
    assert code == 0
    assert json.loads(out)["instances_total"] == 8


def test_sweep_table():
    code, out, _ = run_cli("sweep", "-i", SWEEP, "--count", "1", "-f", "table")
    assert code == 0
    assert "wall time" in out


def test_output_file(tmp_path):
    target = tmp_path / "ex35.json"
    code, out, _ = run_cli("replicate", "ex35", "--output", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["example"] == "ex35"


def test_input_file(tmp_path):
    source = tmp_path / "alpha.json"
    source.write_text(ALPHA, encoding="utf-8")
    code, out, _ = run_cli("construct", "-i", str(source))
    assert code == 0
    assert json.loads(out)["top"] == 3


def test_config_file_controls_output(tmp_path):
    config = tmp_path / "config.yml"
    config.write_text("output:\n  indent: 4\n  format: table\n", encoding="utf-8")
    code, out, _ = run_cli("check-group", "-i", '{"zoo": "cyclic3"}', "--config", str(config), "-f", "json")
    assert code == 0
    assert '\n    "exists": false' in out
    code, out, _ = run_cli("replicate", "ex35", "--config", str(config))
    assert code == 0
    assert "invariant quotient Gorenstein: YES" in out


def test_parser_lists_subcommands():
    parser = build_parser()
    args = parser.parse_args(["sweep", "--count", "2", "--progress"])
    assert args.command == "sweep" and args.count == 2 and args.progress


def test_version(capsys):
    code, _, _ = run_cli("--version")
    assert code == 0
    assert "gorinv 1.0.0" in capsys.readouterr().out


# --- 出力 JSON をスキーマで読み戻す ---

def test_construct_output_reads_back_as_the_same_ideal(ring2):
    code, out, _ = run_cli("construct", "-i", ALPHA)
    assert code == 0
    rebuilt = IdealModel.model_validate(json.loads(out)).to_ideal()
    functional = Functional.from_values(ring2, 3, json.loads(ALPHA)["values"])
    original = build_inverse_system(functional)
    assert rebuilt.ring == original.ring and rebuilt.top == original.top
    for mine, theirs in zip(rebuilt.pieces, original.pieces):
        assert mine.is_subspace_of(theirs) and theirs.is_subspace_of(mine)


def test_construct_output_with_group_reads_back():
    code, out, _ = run_cli("construct", "-i", _alpha_document(zoo="pm_identity", character=["-1"]))
    assert code == 0
    model = IdealModel.model_validate(json.loads(out))
    assert model.equivariant is True
    assert model.character.generator_values == [-1]
    assert model.to_ideal().dims() == [0, 0, 1, 3]


@pytest.mark.parametrize("spec", [
    '{"zoo": "cyclic3", "field": {"Fp": 7}}',
    '{"zoo": "s3_perm"}',
    '{"field": "Q", "generators": [[[0, -1], [1, -1]]]}',
])
def test_check_group_output_reads_back(spec):
    code, out, _ = run_cli("check-group", "-i", spec)
    assert code == 0
    verdict = OneDimVerdictModel.model_validate(json.loads(out))
    assert verdict.exists == (verdict.witness_prime is not None)


def test_invariants_output_reads_back():
    code, out, _ = run_cli("invariants", "-i", '{"zoo": "cyclic3", "max_degree": 3}')
    assert code == 0
    model = InvariantsModel.model_validate(json.loads(out))
    assert model.group_order == 3
    ring = PolyRing(FieldSpec.rationals(), model.n)
    for entry in model.degrees:
        assert all(sum(parse_monomial_key(key)) == entry.degree for b in entry.basis for key in b)
        assert [ring.from_json(b).degree for b in entry.basis] == [entry.degree] * entry.dim


def test_verify_functional_feeds_construct():
    spec = json.dumps({
        "zoo": "pm_identity",
        "degree": 3,
        "values": {"[3,0]": 1, "[2,1]": 1},
        "character": {"generator_values": [-1]},
    })
    code, out, _ = run_cli("verify", "-i", spec)
    assert code == 0
    report = VerdictReportModel.model_validate(json.loads(out))
    document = report.functional.model_dump(exclude_none=True)
    document["zoo"] = "pm_identity"
    code, out, _ = run_cli("construct", "-i", json.dumps(document))
    assert code == 0
    data = json.loads(out)
    assert data["equivariant"] is report.functional_equivariant is True
    hilbert = report.quotient.hilbert
    assert [p["dim"] for p in data["pieces"]] == [d + 1 - h for d, h in enumerate(hilbert)]


@pytest.mark.parametrize("example", ["ex34", "ex35"])
def test_replicate_output_reads_back(example):
    code, out, _ = run_cli("replicate", example)
    assert code == 0
    model = ReplicationModel.model_validate(json.loads(out))
    assert model.matched
    ideal = model.ideal.to_ideal()
    assert [d + 1 - dim for d, dim in enumerate(ideal.dims())] == model.report.quotient.hilbert


def test_sweep_config_reproduces_the_report():
    code, out, _ = run_cli("sweep", "-i", SWEEP, "--seed", "4", "--count", "2", "--workers", "1")
    assert code == 0
    report = SweepReportModel.model_validate(json.loads(out))
    config = report.config.model_dump()
    code, again, _ = run_cli("sweep", "-i", json.dumps(config), "--workers", "2")
    assert code == 0
    assert again == out


def test_response_models_reject_inconsistent_output():
    with pytest.raises(ValidationError):
        IdealModel.model_validate({
            "n": 2, "field": "Q", "top": 1,
            "pieces": [{"degree": 0, "dim": 0, "basis": []}, {"degree": 1, "dim": 2, "basis": [{"[1,0]": 1}]}],
        })
    with pytest.raises(ValidationError):
        OneDimVerdictModel.model_validate({"exists": True, "witness_prime": None, "r": 2})


# --- 設定と出力ファイル ---

def test_config_that_is_not_a_mapping(tmp_path):
    config = tmp_path / "config.yml"
    config.write_text("- output\n- sweep\n", encoding="utf-8")
    code, out, err = run_cli("check-group", "-i", '{"zoo": "cyclic3"}', "--config", str(config))
    assert code == 1
    assert out == ""
    assert json.loads(err.strip())["error"] == "invalid_config"


def test_config_section_that_is_not_a_mapping(tmp_path):
    config = tmp_path / "config.yml"
    config.write_text("output: table\n", encoding="utf-8")
    code, _, err = run_cli("replicate", "ex34", "--config", str(config))
    assert code == 1
    assert json.loads(err.strip())["error"] == "invalid_config"


def test_table_output_file(tmp_path):
    target = tmp_path / "reports" / "ex34.txt"
    code, out, _ = run_cli("replicate", "ex34", "-f", "table", "--output", str(target))
    assert code == 0
    assert out == ""
    assert "all stated values matched" in target.read_text(encoding="utf-8")
