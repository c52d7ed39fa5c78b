"""Unit tests for the clause engines and report machinery."""

import json

import pytest

from excdeg.catalog import FAMILIES, load_catalog
from excdeg.degree_algebra import PrimePower
from excdeg.verifier import (FAIL, OUT_OF_SCOPE, PASS, VACUOUS, Clause,
                             Sample, VerificationReport, all_clauses,
                             clauses_for, global_clauses, nagell_search,
                             reports_to_json, verify_clause, verify_family,
                             verify_table2)


def test_registry_covers_expected_categories():
    for fam in FAMILIES:
        cats = {c.category for c in clauses_for(fam)}
        assert {"conditional-equality", "coprime-classification",
                "ppart-bound", "minimum-degree", "isolation",
                "no-consecutive", "torus-quotient",
                "inequality-claim"} <= cats
    assert {c.category for c in global_clauses()} == \
        {"alternating-prime-power", "diophantine", "sporadic-coprime"}
    assert len(all_clauses()) == sum(len(clauses_for(f)) for f in FAMILIES) + 3


def test_clause_ids_unique():
    ids = [c.id for c in all_clauses()]
    assert len(ids) == len(set(ids))


def test_report_verdict_aggregation():
    q = PrimePower(2, 1)
    mk = lambda *vs: VerificationReport("c", "s", None,
                                        tuple(Sample(q, v) for v in vs))
    assert mk(PASS, PASS).verdict == PASS
    assert mk(PASS, VACUOUS).verdict == PASS
    assert mk(VACUOUS, VACUOUS).verdict == VACUOUS
    assert mk(PASS, FAIL, VACUOUS).verdict == FAIL


def test_conditional_equality_detects_wrong_expectation():
    good = next(c for c in clauses_for("F4") if c.id == "F4.i")
    q = PrimePower(5, 1)
    assert verify_clause(good, q).verdict == PASS
    bad = Clause("F4.i", "conditional-equality", "F4.i", "F4",
                 {**good.payload, "expected": ("q^9 Phi4^2 Phi8 Phi12",)})
    sample = verify_clause(bad, q)
    assert sample.verdict == FAIL
    assert sample.witnesses  # names the degree that slipped through


def test_nonexistence_claim_fails_when_something_is_coprime():
    # E6.ii claims nothing survives coprimality to ppds of indices 9 and 8;
    # dropping index 8 from the hypothesis must break the claim
    weak = Clause("E6.ii-weak", "conditional-equality", "E6.ii", "E6",
                  {"indices": (9,), "expected": (), "include_p": False,
                   "escape": ()})
    assert verify_clause(weak, PrimePower(5, 1)).verdict == FAIL


def test_divisibility_gating_is_vacuous_off_characteristic():
    clause = next(c for c in clauses_for("F4")
                  if c.id == "arith.F4.div-2^5-3-5-41")
    assert verify_clause(clause, PrimePower(2, 2)).verdict == VACUOUS
    assert verify_clause(clause, PrimePower(3, 2)).verdict == PASS


def test_coprime_classification_p3_vs_other():
    clause = next(c for c in clauses_for("F4") if c.id == "F4.viii")
    s3 = verify_clause(clause, PrimePower(3, 1))
    assert s3.verdict == PASS
    assert s3.witnesses  # records the lone coprime pair
    s5 = verify_clause(clause, PrimePower(5, 1))
    assert s5.verdict == PASS and not s5.witnesses


def test_nagell_search():
    assert nagell_search(10_000, 10, prime_power_only=True) == []
    assert (18, 7, 3) in nagell_search(100, 10, prime_power_only=False)
    with pytest.raises(ValueError):
        nagell_search(1, 10, True)


def test_table2():
    report = verify_table2()
    assert report.verdict == PASS
    assert report.family is None


def test_verify_family_rejects_low_qmax():
    with pytest.raises(ValueError):
        verify_family("F4", 2)


def test_verify_family_filter_and_jobs_determinism():
    solo = verify_family("E6", 13, clause_filter="E6.iii")
    assert [r.clause for r in solo] == ["E6.iii"]
    a = reports_to_json(verify_family("E6", 13))
    b = reports_to_json(verify_family("E6", 13, jobs=4))
    assert a == b


def test_report_json_schema():
    reports = verify_family("F4", 5)
    data = json.loads(reports_to_json(reports))
    for rep in data:
        assert set(rep) == {"clause", "source", "family", "samples", "scope_note"}
        for s in rep["samples"]:
            assert set(s) == {"q", "verdict", "witnesses"}
            assert set(s["q"]) == {"p", "f"}


def test_out_of_scope_claims_are_not_registered():
    ids = {c.id for c in all_clauses()}
    for claim in OUT_OF_SCOPE:
        assert claim not in ids


def test_version_extra_sc_ad():
    clause = next(c for c in clauses_for("E6") if c.id == "E6.x")
    assert verify_clause(clause, PrimePower(2, 2)).verdict == PASS  # 3 | q-1
    assert verify_clause(clause, PrimePower(2, 1)).verdict == VACUOUS
