import re

import pytest

from composites import claims
from composites.claims import (
    CITATIONS,
    ClaimOptions,
    render_record,
    run_claim,
    run_suite,
    tested_property_report,
)
from composites.errors import HypothesisMismatch
from composites.verdicts import ClaimId, Outcome, Tested

RECORD = re.compile(r'^CLAIM (\S+) asserted=(\S+|conditional\(.*\)) tested=(PASS|FAIL|UNTESTED) cite=".*" witness=\{.*\}$')


@pytest.fixture(scope="module")
def proper_suite(proper_ring):
    return run_suite(proper_ring)


@pytest.fixture(scope="module")
def identity_suite(identity_ring):
    return run_suite(identity_ring)


class TestSuites:
    def test_proper_pair_contradicts_on_dedekind_family(self, proper_suite):
        assert set(proper_suite.contradictions) == {
            ClaimId.P13,
            ClaimId.T_DEDEKIND,
            ClaimId.P14a,
            ClaimId.P14c,
        }

    def test_proper_pair_covers_the_expected_claims(self, proper_suite):
        ran = {v.claim_id for v in proper_suite.verdicts}
        for claim_id in (ClaimId.P1a, ClaimId.P3, ClaimId.P5, ClaimId.P7, ClaimId.P10, ClaimId.P12b,
                         ClaimId.P13, ClaimId.T_DEDEKIND, ClaimId.P14a, ClaimId.P14b, ClaimId.P14c,
                         ClaimId.P14d, ClaimId.P01, ClaimId.SEQ_EXACT):
            assert claim_id in ran
        assert ClaimId.P11 in proper_suite.skipped
        assert ClaimId.P12a in proper_suite.skipped

    def test_identity_pair_has_no_contradictions(self, identity_suite):
        assert identity_suite.contradictions == []
        assert identity_suite.summary["contradict"] == 0

    def test_ordering_follows_claim_ids(self, proper_suite):
        order = list(ClaimId)
        ids = [v.claim_id for v in proper_suite.verdicts]
        assert ids == sorted(ids, key=order.index)

    def test_rerun_is_byte_identical(self, identity_ring, identity_suite):
        assert run_suite(identity_ring).records() == identity_suite.records()

    def test_records_format(self, proper_suite):
        lines = proper_suite.records()
        assert all(RECORD.match(line) for line in lines[:-1])
        assert lines[-1] == "SUMMARY agree={agree} contradict={contradict} untested={untested}".format(
            **proper_suite.summary
        )

    def test_frame(self, proper_suite):
        frame = proper_suite.to_frame()
        assert len(frame) == len(proper_suite.verdicts)
        assert set(frame["outcome"]) <= {o.value for o in Outcome}

    def test_every_verdict_carries_its_citation(self, proper_suite):
        for v in proper_suite.verdicts:
            assert v.citation


class TestClaims:
    def test_hfd_on_proper_pair(self, proper_ring):
        verdict = run_claim(proper_ring, "P10")
        assert verdict.asserted.value is True
        assert verdict.tested is Tested.PASS

    def test_dedekind_witnesses(self, proper_ring):
        verdict = run_claim(proper_ring, ClaimId.T_DEDEKIND)
        assert verdict.asserted.value is True
        assert verdict.tested is Tested.FAIL
        assert verdict.citation == CITATIONS[ClaimId.T_DEDEKIND]
        assert verdict.witness["integral_element"] == "w"
        assert verdict.witness["M_invertible"] is False

    def test_integral_closure_witness(self, proper_ring):
        verdict = run_claim(proper_ring, ClaimId.P13)
        assert verdict.outcome is Outcome.CONTRADICT
        assert verdict.witness["minimal_polynomial"] == "X^2 + X + 1"

    def test_z_in_q_is_not_atomic(self, z_ring):
        verdict = run_claim(z_ring, ClaimId.P1a)
        assert verdict.asserted.value is False
        assert verdict.tested is Tested.FAIL
        assert verdict.outcome is Outcome.AGREE
        assert verdict.witness["certified"]

    def test_z_in_q_accp_chain(self, z_ring):
        verdict = run_claim(z_ring, ClaimId.P1b)
        assert verdict.witness["chain_length"] == 21
        assert verdict.outcome is Outcome.AGREE

    def test_residue_cover(self, z_ring):
        verdict = run_claim(z_ring, ClaimId.P12a)
        assert verdict.tested is Tested.PASS
        assert verdict.witness["cover"] == "Z + X*Q[X]"

    def test_almost_bezout(self, inseparable_ring):
        verdict = run_claim(inseparable_ring, ClaimId.P11, ClaimOptions(bezout_samples=20))
        assert verdict.tested is Tested.PASS

    def test_almost_bezout_hypothesis(self, proper_ring):
        with pytest.raises(HypothesisMismatch):
            run_claim(proper_ring, ClaimId.P11)

    def test_pair_instances_are_accepted(self, proper_pair):
        verdict = run_claim(proper_pair, ClaimId.P07)
        assert verdict.tested is Tested.PASS

    @pytest.mark.parametrize("claim_id", [ClaimId.P6, ClaimId.P8, ClaimId.T9])
    def test_assertion_only_claims(self, z_ring, claim_id):
        verdict = run_claim(z_ring, claim_id)
        assert verdict.tested is Tested.UNTESTED

    def test_atomic_by_factoring_every_nonunit(self, proper_ring):
        verdict = run_claim(proper_ring, ClaimId.P1a)
        assert verdict.tested is Tested.PASS
        assert verdict.witness["checked"] > 0

    def test_atomic_fails_when_factors_are_not_atoms(self, proper_ring, monkeypatch):
        monkeypatch.setattr(claims, "is_irreducible_in_composite", lambda ring, e: False)
        verdict = run_claim(proper_ring, ClaimId.P1a)
        assert verdict.tested is Tested.FAIL
        assert "element" in verdict.witness

    def test_ffd_bounds_divisor_counts(self, proper_ring):
        verdict = run_claim(proper_ring, ClaimId.P7)
        assert verdict.tested is Tested.PASS
        # 3 + 2 classes for X^2; degree 3 over GF(2) in GF(4) allows at most 2*64 - 1
        assert verdict.witness["divisors_of_x2"] == 5
        assert verdict.witness["max_divisors"] <= 127

    def test_ffd_fails_on_unbounded_divisor_counts(self, proper_ring, monkeypatch):
        real = claims.nonassociate_divisors
        x2 = proper_ring.x() ** 2

        def inflated(ring, e):
            return real(ring, e) if e == x2 else list(range(10_000))

        monkeypatch.setattr(claims, "nonassociate_divisors", inflated)
        verdict = run_claim(proper_ring, ClaimId.P7)
        assert verdict.tested is Tested.FAIL
        assert verdict.witness["over_bound"]

    def test_record_rendering(self, z_ring):
        line = render_record(run_claim(z_ring, ClaimId.P1b))
        assert line.startswith("CLAIM P1b asserted=false tested=FAIL cite=")
        assert RECORD.match(line)


class TestPropertyReport:
    def test_tested_verdicts_are_filled_in(self, proper_ring):
        report = tested_property_report(proper_ring)
        assert report["hfd"].tested is Tested.PASS
        assert report["integrally_closed"].tested is Tested.FAIL
        assert report["dedekind"].tested is Tested.FAIL
