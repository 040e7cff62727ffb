import json

import pytest

from crlie import (
    InputError, algebra_document, catalog, dump_document, parse_document,
    parse_text,
)
from crlie.cli import main


def so3_doc():
    return catalog.get("so3_cr").document


# -- parser diagnostics ------------------------------------------------------

def test_malformed_rational_reported_with_location():
    doc = {"algebra": {"dim": 2, "brackets": [
        {"x": 1, "y": 2, "result": ["1/0", "0"]}]}}
    with pytest.raises(InputError) as exc:
        parse_document(doc)
    assert any("algebra.brackets[0]" in d for d in exc.value.diagnostics)


def test_explicit_antisymmetry_conflict_names_indices():
    doc = {"algebra": {"dim": 3, "brackets": [
        {"x": 1, "y": 2, "result": ["0", "0", "1"]},
        {"x": 2, "y": 1, "result": ["0", "0", "1"]}]}}
    with pytest.raises(InputError) as exc:
        parse_document(doc)
    assert any("antisymmetry violated at (1,2,3)" in d
               for d in exc.value.diagnostics)


def test_index_out_of_range():
    doc = {"algebra": {"dim": 2, "brackets": [
        {"x": 1, "y": 3, "result": ["0", "0"]}]}}
    with pytest.raises(InputError) as exc:
        parse_document(doc)
    assert any("out of range" in d for d in exc.value.diagnostics)


def test_jacobi_violation_rejected():
    # [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=0: the cyclic sum over (1,2,3) is e3
    doc = {"algebra": {"dim": 3, "brackets": [
        {"x": 1, "y": 2, "result": ["0", "0", "1"]},
        {"x": 1, "y": 3, "result": ["1", "0", "0"]}]}}
    with pytest.raises(InputError) as exc:
        parse_document(doc)
    assert any("jacobi" in d.lower() for d in exc.value.diagnostics)


def test_not_json():
    with pytest.raises(InputError) as exc:
        parse_text("{not json")
    assert any("not valid JSON" in d for d in exc.value.diagnostics)


def test_metric_without_cr_block():
    doc = {"algebra": {"dim": 2, "brackets": []}, "metric": [["1", "0"], ["0", "1"]]}
    with pytest.raises(InputError) as exc:
        parse_document(doc)
    assert any(d.startswith("metric: requires") for d in exc.value.diagnostics)


def test_multiple_diagnostics_collected():
    doc = {"algebra": {"dim": 2, "brackets": [
        {"x": 1, "y": 3, "result": ["0", "0"]},
        {"x": 2, "y": 2, "result": ["0", "0"]}]}}
    with pytest.raises(InputError) as exc:
        parse_document(doc)
    assert len(exc.value.diagnostics) == 2


def test_algebra_document_builder_round_trip():
    from crlie import so3
    doc = {"algebra": algebra_document(so3())}
    assert parse_document(doc).algebra == so3()
    assert parse_text(dump_document(doc)).document == doc


# -- CLI ---------------------------------------------------------------------

def write(tmp_path, doc, name="in.json"):
    p = tmp_path / name
    p.write_text(dump_document(doc))
    return str(p)


def test_check_pass_exit_zero(tmp_path, capsys):
    assert main(["check", write(tmp_path, so3_doc())]) == 0
    out = capsys.readouterr().out
    assert "[PASS] cr.condition2" in out
    assert "FAIL" not in out
    assert out.strip().endswith("overall: pass")


def test_check_failure_exit_one_with_witness(tmp_path, capsys):
    path = write(tmp_path, catalog.get("so3_bad_metric").document)
    assert main(["check", path, "--format", "structured"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "fail"
    failed = [r for r in payload["checks"] if r["status"] == "fail"]
    assert failed and failed[0]["check_id"] == "kahler.omega_antisymmetric"
    assert failed[0]["witnesses"][0]["x"] == "e1"


def test_check_input_error_exit_two(tmp_path, capsys):
    missing = str(tmp_path / "nope.json")
    assert main(["check", missing]) == 2
    assert "error:" in capsys.readouterr().err


def test_check_stdin(tmp_path, capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(dump_document(so3_doc())))
    assert main(["check", "-"]) == 0


def test_structured_reports_byte_identical(tmp_path, capsys):
    path = write(tmp_path, catalog.get("sl2").document)
    main(["check", path, "--format", "structured"])
    first = capsys.readouterr().out
    main(["check", path, "--format", "structured"])
    assert capsys.readouterr().out == first


def test_exit_code_matrix_over_catalog(tmp_path, capsys):
    for entry_id in catalog.ids():
        entry = catalog.get(entry_id)
        expected = 0 if all(v == "pass" for v in entry.expected.values()) else 1
        assert main(["check", write(tmp_path, entry.document)]) == expected
        capsys.readouterr()


def test_construct_left_symmetric(tmp_path, capsys):
    path = write(tmp_path, catalog.get("aff_aff").document)
    assert main(["construct", "left-symmetric", path]) == 0
    out = capsys.readouterr().out
    assert "left-symmetric product on H:" in out
    assert "induced bracket" in out


def test_construct_requires_metric(tmp_path, capsys):
    doc = {"algebra": {"dim": 2, "brackets": []}}
    assert main(["construct", "left-symmetric", write(tmp_path, doc)]) == 2


def test_schouten_command(tmp_path, capsys):
    path = write(tmp_path, catalog.get("sl2").document)
    assert main(["schouten", path]) == 0
    out = capsys.readouterr().out
    assert "[Lambda, Lambda]" in out and "pass" in out


def test_schouten_failure_exit_one(tmp_path, capsys):
    path = write(tmp_path, catalog.get("so3_r_mixed").document)
    assert main(["schouten", path]) == 1


def test_catalog_list_and_dump(capsys):
    assert main(["catalog", "list"]) == 0
    listed = capsys.readouterr().out
    for entry_id in catalog.ids():
        assert entry_id in listed
    assert main(["catalog", "dump", "so3_cr"]) == 0
    dumped = capsys.readouterr().out
    assert parse_text(dumped).document == so3_doc()


def test_catalog_unknown_id_exit_two(capsys):
    assert main(["catalog", "dump", "missing"]) == 2
    assert "unknown catalog entry" in capsys.readouterr().err


def test_dump_then_check_pipeline(tmp_path, capsys):
    main(["catalog", "dump", "heisenberg"])
    text = capsys.readouterr().out
    p = tmp_path / "h.json"
    p.write_text(text)
    assert main(["check", str(p)]) == 0
