import pytest

from packpaint.claims import REGISTRY, claim_ids, run_claims
from packpaint.errors import UnknownClaimId


def test_registry_covers_every_criterion():
    assert {e.record.criterion for e in REGISTRY} >= set(range(1, 14))
    assert len(set(claim_ids())) == len(claim_ids())


def test_petersen_filter():
    report = run_claims("petersen-*")
    assert len(report.records) == 4 and report.passed
    assert [r.claim_id for r in report.records] == sorted(r.claim_id for r in report.records)


def test_discharge_filter():
    report = run_claims("discharge-enum")
    assert len(report.records) == 1 and report.passed


def test_unknown_filter():
    with pytest.raises(UnknownClaimId):
        run_claims("no-such-claim")


def test_records_are_filled_and_expected_unchanged():
    report = run_claims("f*", workers=2)
    for r in report.records:
        assert r.observed is not None and r.runtime is not None
        original = next(e.record for e in REGISTRY if e.record.claim_id == r.claim_id)
        assert original.expected == r.expected and original.observed is None
    assert '"passed": true' in report.to_json()
