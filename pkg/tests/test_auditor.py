import json
from math import gcd

from oracles import from_text, o_decimate, o_is_hadamard, o_reverse, o_shift

from hadalab import auditor, numth, seqcore
from hadalab._kernels import reversal_audit
from hadalab.seqcore import BinarySeq


def golden():
    from importlib import resources

    with resources.files("hadalab").joinpath("data/audit_golden.json").open() as fh:
        return json.load(fh)


def test_algebra_audit_passes():
    reports = auditor.audit_algebra(n_max=8, samples=500)
    assert len(reports) == 1
    assert reports[0].status == "PASS"
    assert reports[0].witnesses == []


def test_algebra_audit_catches_broken_ops():
    # mutate one operation; the audit must FAIL with witnesses
    class BrokenOps:
        shift = staticmethod(seqcore.shift)
        decimate = staticmethod(seqcore.decimate)
        autocorr_vector = staticmethod(seqcore.autocorr_vector)

        @staticmethod
        def reverse(y):
            return seqcore.shift(seqcore.reverse(y), 1)

    reports = auditor.audit_algebra(n_max=5, samples=50, ops=BrokenOps)
    assert reports[0].status == "FAIL"
    assert reports[0].witnesses


def test_sring_audits_pass():
    for r in auditor.audit_sring(n_max=12):
        assert r.status == "PASS", (r.claim_id, r.witnesses)


def test_reversal_membership_statuses():
    reports = auditor._audit_reversal_membership(n_list=range(1, 11))
    by_n = {r.params["n"]: r for r in reports}
    for n in (1, 2, 3, 4, 6):
        assert by_n[n].status == "VACUOUS"
    for n in (5, 7, 8, 9, 10):
        assert by_n[n].status == "FAIL"
        assert by_n[n].witnesses


def test_reversal_membership_counts():
    # frozen counts from the exhaustive scan
    want = {5: (24, 16), 7: (120, 96), 8: (224, 128), 9: (248, 168),
            10: (168, 136), 11: (368, 320), 12: (1964, 1196),
            13: (1424, 1296), 14: (1080, 920)}
    from math import gcd

    for n, (hyp, viol) in want.items():
        xs = [x for x in range(2, n - 1) if gcd(x, n) == 1]
        got = reversal_audit(n, xs, 0)
        assert (got[0], got[1]) == (hyp, viol)


def test_reversal_witnesses_really_violate():
    reports = auditor._audit_reversal_membership(n_list=(8, 10))
    for r in reports:
        for w in r.witnesses:
            y = from_text(w["seq"])
            x = w["x"]
            n = len(y)
            rev_rots = {o_shift(o_reverse(y), k) for k in range(n)}
            assert o_decimate(y, x) in rev_rots       # hypothesis holds
            assert o_decimate(y, n - x) != y          # conclusion fails


def test_fixed_not_hadamard_witnesses():
    reports = auditor._audit_fixed_not_hadamard(n_list=(4, 8))
    by_n = {r.params["n"]: r for r in reports}
    assert by_n[8].status == "PASS"
    r4 = by_n[4]
    assert r4.status == "FAIL"
    texts = sorted(w["seq"] for w in r4.witnesses)
    assert texts == sorted(["-+++", "--+-", "++-+", "+---"])
    for t in texts:
        y = from_text(t)
        assert o_is_hadamard(y)
        # fixed by every decimation
        assert o_decimate(y, 3) == y


def test_orbit_2_and_remark():
    assert auditor._audit_orbit_2(n_max=8).status == "PASS"
    reports = auditor._audit_remark_2level()
    by_case = {(r.params["family"], r.params["arg"]): r.status for r in reports}
    assert by_case[("legendre", 7)] == "PASS"
    assert by_case[("legendre", 11)] == "PASS"
    assert by_case[("mseq", 4)] == "PASS"
    assert by_case[("mseq", 5)] == "FAIL"


def test_restricted_search_audit():
    reports = auditor._audit_no_hadamard_invariant(n_list=(16, 36))
    by_n = {r.params["n"]: r for r in reports}
    assert by_n[16].params["multipliers"] == [7, 9, 15]
    assert by_n[36].params["multipliers"] == [13, 17, 19, 25, 35]
    assert all(r.status == "PASS" for r in reports)
    # only units whose multiplicative order is prime are swept
    for n, r in by_n.items():
        want = [x for x in range(2, n) if gcd(x, n) == 1
                and numth.is_prime(numth.mult_order(x, n))]
        assert r.params["multipliers"] == want


def test_mu_and_lattice_audits():
    assert auditor._audit_mu(limit=512).status == "PASS"
    assert auditor._audit_lattice_figures().status == "PASS"


def test_run_all_complete_and_deterministic():
    reps1 = auditor.run_all(workers=1)
    assert auditor.completeness_gap(reps1) == ()
    reps2 = auditor.run_all(workers=2)
    a = json.dumps([r.to_record() for r in reps1], sort_keys=True)
    b = json.dumps([r.to_record() for r in reps2], sort_keys=True)
    assert a == b


def test_golden_agreement():
    reports = auditor.run_all()
    deviations, missing = auditor.compare_golden(reports, golden())
    assert deviations == []
    assert missing == []


def test_golden_detects_deviation():
    reports = auditor.run_all(suites=("hadamard",))
    g = golden()
    key = auditor.golden_key(
        next(r for r in reports if r.claim_id == "mu-sunze"))
    g["claims"][key]["status"] = "FAIL"
    deviations, _ = auditor.compare_golden(reports, g)
    assert len(deviations) == 1
    assert deviations[0][0] == key
    assert deviations[0][3] is True  # required claim


def test_witness_cap():
    reports = auditor._audit_reversal_membership(n_list=(12,), cap=3)
    assert len(reports[0].witnesses) == 3
