"""
Check registry, catalog handling and the verification harness.
"""

import json

import pytest

from src.algebra.ring import zn_ring
from src.checks.catalog import CatalogEntry, Subject, build_subjects, default_catalog, load_catalog
from src.checks.harness import run_catalog, select_checks, verify
from src.checks.registry import STATUSES, check_ids, run_check
from src.spectra.spectrum import spec_fp
from src.utils.errors import ParseError, SubjectKindMismatchError, UnknownCheckError

SMALL_CATALOG = [
    CatalogEntry("Z4", {"kind": "regular", "ring": {"kind": "Zn", "n": 4}}),
    CatalogEntry("Z6", {"kind": "regular", "ring": {"kind": "Zn", "n": 6}}),
    CatalogEntry("ring Z6", {"kind": "Zn", "n": 6}),
]


# single checks

def test_fully_prime_is_prime_on_z6(z6):
    result = run_check("lemma_fp_to_p", Subject.of_module(z6))
    assert result.status == "pass"
    assert result.subject["name"] == z6.name


def test_hollow_iff_ultraconnected_on_z4(z4):
    assert run_check("prop_ultra", Subject.of_module(z4)).status == "pass"


def test_discrete_spectrum_on_z6(z6):
    result = run_check("thm_fp_discrete", Subject.of_module(z6))
    assert result.status == "pass"
    assert result.details == {"spec_is_max": True, "discrete": True, "T2": True, "T1": True}


def test_degenerate_names_hypothesis(z2xz2):
    result = run_check("prop_ultra", Subject.of_module(z2xz2))
    assert result.status == "degenerate"
    assert result.hypothesis == "S-PCD"


def test_ring_check():
    assert run_check("ring_star_is_product", Subject.of_ring(zn_ring(6))).status == "pass"


def test_unknown_check(z6):
    with pytest.raises(UnknownCheckError):
        run_check("lemma_nonexistent", Subject.of_module(z6))
    with pytest.raises(UnknownCheckError):
        select_checks(["prop_ultra", "lemma_nonexistent"])


def test_subject_kind_mismatch(z6):
    with pytest.raises(SubjectKindMismatchError):
        run_check("prop_ultra", Subject.of_ring(zn_ring(6)))
    with pytest.raises(SubjectKindMismatchError):
        run_check("ring_star_is_product", Subject.of_module(z6))


def test_registry_has_both_kinds():
    assert "lemma_fp_to_p" in check_ids("module")
    assert "ring_star_is_product" in check_ids("ring")
    assert select_checks(["thm_fp_discrete", "prop_ultra"]) == [
        c for c in check_ids() if c in ("thm_fp_discrete", "prop_ultra")]


def test_edited_spectrum_is_caught(z6):
    spectrum = spec_fp(z6).without(2)
    result = run_check("rem_duo_coatomic", Subject.of_module(z6, spectrum=spectrum))
    assert result.status == "fail"
    assert result.witness == {"maximal_fi_not_fully_prime": [2]}
    assert run_check("rem_duo_coatomic", Subject.of_module(z6)).status == "pass"


# catalog

def test_oversized_entry_is_skipped():
    entries = [CatalogEntry("Z100", {"kind": "regular", "ring": {"kind": "Zn", "n": 100}})] + SMALL_CATALOG
    subjects, skipped = build_subjects(entries, quotients=False)
    assert [s.name for s in subjects] == ["Z4", "Z6", "ring Z6"]
    assert [s.name for s in skipped] == ["Z100"]
    assert skipped[0].error_type == "SizeCapError"


def test_quotients_follow_their_module():
    subjects, _ = build_subjects(SMALL_CATALOG[1:2])
    assert subjects[0].name == "Z6"
    assert len(subjects) == 3
    assert all("quotient" in s.tags for s in subjects[1:])


def test_load_catalog(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps({"entries": [{"name": "Z5", "spec": {"kind": "Zn", "n": 5}, "tags": ["field"]}]}))
    entries = load_catalog(str(path))
    assert entries[0].name == "Z5"
    assert entries[0].kind == "ring"
    assert entries[0].tags == ["field"]


def test_load_bad_catalog(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text("[{\"name\": \"x\"}]")
    with pytest.raises(ParseError) as excinfo:
        load_catalog(str(path))
    assert excinfo.value.pointer == "/entries/0"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_catalog(str(path))


def test_default_catalog_contents():
    names = [e.name for e in default_catalog()]
    assert "Z30" in names and "ring UT2(Z2)" in names
    assert len(names) == len(set(names))


# harness and report

def test_report_on_small_catalog():
    report = verify(SMALL_CATALOG, quotients=False)
    assert report.ok
    assert not report.skipped
    totals = report.status_counts()
    assert list(totals) == list(STATUSES)
    assert sum(totals.values()) == len(report.results)
    summary = report.summary()
    assert set(summary["lemma_fp_to_p"]) == set(STATUSES)
    assert summary["lemma_fp_to_p"]["pass"] == 2


def test_report_digest_is_deterministic():
    first = verify(SMALL_CATALOG, quotients=False, check_filter=["lemma_fp_to_p", "thm_fp_discrete"])
    second = verify(SMALL_CATALOG, quotients=False, check_filter=["lemma_fp_to_p", "thm_fp_discrete"],
                    workers=2)
    assert first.digest() == second.digest()
    assert [r.check_id for r in first.results] == [r.check_id for r in second.results]


def test_report_json_shape(tmp_path):
    report = verify(SMALL_CATALOG[:1], quotients=False, check_filter=["prop_ultra"])
    doc = json.loads(report.to_json())
    assert set(doc) == {"timestamp", "results", "skipped", "summary", "totals", "digest"}
    assert doc["results"][0]["check_id"] == "prop_ultra"
    assert doc["results"][0]["status"] == "pass"

    target = tmp_path / "out" / "report.json"
    report.save(str(target))
    assert json.loads(target.read_text(encoding="utf-8"))["digest"] == doc["digest"]


def test_failures_in_text_report(z6):
    subject = Subject.of_module(z6, spectrum=spec_fp(z6).without(2))
    report = run_catalog([subject], check_filter=["rem_duo_coatomic"])
    assert not report.ok
    text = report.to_text()
    assert "FAIL rem_duo_coatomic on" in text
    assert "fail: 1" in text


def test_default_catalog_full_run():
    report = verify()
    assert not report.skipped
    assert report.ok, [r.to_dict() for r in report.fails]

    never_passed = {c for c, counts in report.summary().items() if counts["pass"] == 0}
    assert never_passed == {"lemma_conn_chain", "prop_ring_compact"}

    fp_pairs = sum(r.details["pairs"] for r in report.results
                   if r.check_id == "lemma_fp_properties" and r.status == "pass")
    assert fp_pairs >= 200

    closures = [r for r in report.results if r.check_id == "lemma_fp_closure" and r.status == "pass"]
    assert closures
    for r in closures:
        assert r.details["exhaustive"]
        n = r.details["subsets"]
        assert n & (n - 1) == 0
