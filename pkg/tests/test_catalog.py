import pytest

from crlie import catalog, dump_document, parse_document, parse_text, run_checks


@pytest.mark.parametrize("entry_id", catalog.ids())
def test_entry_matches_expected_verdicts(entry_id):
    entry = catalog.get(entry_id)
    rep = run_checks(parse_document(entry.document))
    actual = {r.check_id: "pass" if r.passed else "fail" for r in rep.results}
    assert actual == entry.expected


@pytest.mark.parametrize("entry_id", catalog.ids())
def test_dump_parse_round_trip(entry_id):
    entry = catalog.get(entry_id)
    text = dump_document(entry.document)
    reparsed = parse_text(text)
    assert reparsed.document == entry.document


def test_list_entries_cover_all_ids():
    listed = [entry_id for entry_id, _ in catalog.list_entries()]
    assert listed == catalog.ids()
    assert len(listed) == len(set(listed))


def test_unknown_entry_raises():
    with pytest.raises(catalog.UnknownEntryError):
        catalog.get("no_such_entry")


def test_negative_fixtures_present():
    failing = [e for e in catalog.ids()
               if "fail" in catalog.get(e).expected.values()]
    assert set(failing) == {"so3_bad_metric", "affxaff_bad_j",
                            "so3_r_mixed", "r4_ext_bad_alpha"}
