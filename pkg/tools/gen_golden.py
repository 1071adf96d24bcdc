"""Regenerate the golden audit-status file and the lattice golden files.

The golden statuses are not copied from documentation.  This tool runs the
full audit, then re-derives every claim's verdict on an overlapping subdomain
with the independent tuple/numpy oracles in tests/oracles.py (plus a spectral
check for the restricted Hadamard searches).  Any disagreement aborts the
write.  Run from the repository root:

    python3 tools/gen_golden.py
"""

import json
import os
import sys
from math import gcd, isqrt

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

import oracles as O  # noqa: E402

from hadalab import auditor, families, search, sring  # noqa: E402

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")

# claims whose golden deviation must flip the audit exit code; the remaining
# registered claims are extensions and deviations only warn
REQUIRED = {
    "eq-commutations",
    "lemma-decimation-code",
    "thm-inclusion",
    "prop-2n+1-size",
    "lemma-cn-translate",
    "lemma-structure-preserved",
    "thm-reversal-membership",
    "thm-orbit-2",
    "remark-2level",
    "mu-sunze",
}


def check(name, ok):
    print("  cross-check %-34s %s" % (name, "ok" if ok else "DISAGREES"))
    if not ok:
        raise SystemExit("oracle disagreement on %s; golden not written" % name)


def seq_tuple(s):
    return O.from_text(s.text())


# ------------------------------------------------------------ cross-checks

def xcheck_commutations():
    for n in range(1, 9):
        units = O.o_units(n)
        for y in O.all_seqs(n):
            for r in units:
                ok = O.o_decimate(O.o_reverse(y), r) == O.o_reverse(
                    O.o_decimate(O.o_shift(y, r - 1), r))
                ok = ok and O.o_reverse(O.o_shift(y, 1)) == O.o_shift(
                    O.o_reverse(y), n - 1)
                pv, pd = O.o_autocorr(y), O.o_autocorr(O.o_decimate(y, r))
                ok = ok and all(pd[k] == pv[(k * r) % n] for k in range(n))
                for i in range(n):
                    ok = ok and O.o_shift(O.o_decimate(y, r), i) == O.o_decimate(
                        O.o_shift(y, (i * r) % n), r)
                if not ok:
                    return False
    return True


def o_codeword(n, coset):
    x = tuple(-1 if t == 0 else 1 for t in range(n))
    w = tuple(1 for _ in range(n))
    for e in coset:
        w = O.o_product(w, O.o_shift(x, e))
    return w


def xcheck_decimation_code():
    for n in range(1, 13):
        units = O.o_units(n)
        for a in units:
            cosets = O.o_cosets(n, a)
            rep_of = {}
            for cs in cosets:
                for e in cs:
                    rep_of[e] = cs[0]
            words = {cs[0]: o_codeword(n, cs) for cs in cosets}
            for r in units:
                rinv = pow(r, -1, n)
                for s, w in words.items():
                    if O.o_decimate(w, r) != words[rep_of[(s * rinv) % n]]:
                        return False
    return True


def xcheck_inclusion():
    for n in range(1, 17):
        units = O.o_units(n)
        groups = {a: O.o_cyclic_subgroup(a, n) for a in units}
        for a in units:
            for b in units:
                if groups[b] <= groups[a] and not O.o_includes(n, a, b):
                    return False
    return True


def xcheck_prop_size():
    for n in range(1, 6):
        members = set(O.o_family_members(4 * n, 2 * n + 1))
        if len(members) != 1 << (3 * n):
            return False
        if len(O.o_cosets(4 * n, 2 * n + 1)) != 3 * n:
            return False
    return True


def xcheck_cn_translate():
    for n in range(2, 13, 2):
        for a in O.o_units(n):
            cosets = O.o_cosets(n, a)
            rep_of = {}
            for cs in cosets:
                for e in cs:
                    rep_of[e] = cs[0]
            words = {cs[0]: o_codeword(n, cs) for cs in cosets}
            for s, w in words.items():
                if O.o_shift(w, n // 2) != words[rep_of[(s + n // 2) % n]]:
                    return False
    return True


def xcheck_structure_preserved():
    # exhaustive at length 12: oracle-built members, oracle decimation,
    # package classifier as the measured statistic
    from hadalab.seqcore import BinarySeq

    n4 = 12
    units = O.o_units(n4)
    for x in units:
        p = O.o_mult_order(x, n4)
        if p not in (1, 2) and not (p % 2 and O.o_is_prime(p)):
            continue
        for y in O.o_family_members(n4, x):
            mask = sum(1 << t for t, v in enumerate(y) if v == -1)
            base = sring.classify_subwords(BinarySeq(n4, mask), x).counts
            for q in units:
                z = O.o_decimate(y, q)
                zmask = sum(1 << t for t, v in enumerate(z) if v == -1)
                got = sring.classify_subwords(BinarySeq(n4, zmask), x).counts
                if got != base:
                    return False
    return True


def o_reversal_audit(n):
    units = [x for x in range(2, n - 1) if gcd(x, n) == 1]
    hyp = viol = 0
    for y in O.all_seqs(n):
        rev_rots = {O.o_shift(O.o_reverse(y), k) for k in range(n)}
        for x in units:
            if O.o_decimate(y, x) in rev_rots:
                hyp += 1
                if O.o_decimate(y, n - x) != y:
                    viol += 1
    return hyp, viol


def xcheck_reversal(reports):
    got = {r.params["n"]: r for r in reports
           if r.claim_id == "thm-reversal-membership"}
    for n in range(1, 11):
        hyp, viol = o_reversal_audit(n)
        status = "VACUOUS" if hyp == 0 else ("FAIL" if viol else "PASS")
        if got[n].status != status:
            return False
    return True


def xcheck_fixed_not_hadamard(reports):
    got = {r.params["n"]: r for r in reports
           if r.claim_id == "thm-fixed-not-hadamard"}
    for n in (4, 8, 12):
        units = O.o_units(n)
        orbits = []
        seen = set()
        for s in range(n):
            if s not in seen:
                orb = {(u * s) % n for u in units}
                seen |= orb
                orbits.append(orb)
        found = []
        for pick in range(1 << len(orbits)):
            sup = set()
            for j, orb in enumerate(orbits):
                if (pick >> j) & 1:
                    sup |= orb
            y = tuple(-1 if t in sup else 1 for t in range(n))
            if O.o_is_hadamard(y):
                found.append(O.to_text(y))
        status = "FAIL" if found else "PASS"
        if got[n].status != status:
            return False
        if n == 4 and sorted(found) != sorted(w["seq"] for w in got[4].witnesses):
            return False
    return True


def xcheck_orbit2():
    for n in range(1, 9):
        for text in O.o_hadamard_classes(n):
            y = O.from_text(text)
            orbit = {O.o_canonical(O.o_decimate(y, a)) for a in O.o_units(n)}
            want = {O.o_canonical(y), O.o_canonical(O.o_reverse(y))}
            if orbit != want:
                return False
    return True


def xcheck_remark_2level(reports):
    got = {(r.params["family"], r.params["arg"]): r.status
           for r in reports if r.claim_id == "remark-2level"}
    for kind, arg in (("legendre", 7), ("legendre", 11), ("mseq", 4), ("mseq", 5)):
        if kind == "legendre":
            y = O.o_legendre(arg)
        else:
            y = seq_tuple(families.mseq(arg).seq)
        n = len(y)
        # definitional two-level check
        ac = O.o_autocorr(y)
        if ac[0] != n or len(set(ac[1:])) != 1:
            return False
        orbit = {O.o_canonical(O.o_decimate(y, a)) for a in O.o_units(n)}
        status = "PASS" if len(orbit) <= 2 else "FAIL"
        if got[(kind, arg)] != status:
            return False
    return True


def _fft_family_empty(n, cosets):
    # spectral route: a sequence is circulant Hadamard iff its power spectrum
    # is flat; scan the whole family built from oracle cosets, in chunks to
    # keep memory flat
    rank = len(cosets)
    total = 1 << rank
    step = 1 << min(rank, 18)
    for base in range(0, total, step):
        g = np.arange(base, base + step, dtype=np.int64)
        rows = np.ones((g.size, n), dtype=np.float64)
        for j, cs in enumerate(cosets):
            sel = ((g >> j) & 1).astype(bool)
            for t in cs:
                rows[sel, t] = -1.0
        spec = np.abs(np.fft.fft(rows, axis=1)) ** 2
        if bool(np.any(np.all(np.abs(spec - n) < 1e-6, axis=1))):
            return False
    return True


def _flat_scan_empty(n, cosets):
    # counter-enumeration route over oracle cosets, independent of the
    # difference-set DFS the search itself uses; a length-n = m^2 circulant
    # Hadamard sequence has row sum +-m, so its -1 count lies in
    # {(n-m)/2, (n+m)/2} and other weights need no autocorrelation check
    from hadalab import _kernels as K

    cmasks = [sum(1 << t for t in cs) for cs in cosets]
    m = isqrt(n)
    targets = sorted({(n - m) // 2, (n + m) // 2})
    hits, _ = K.invariant_scan(n, cmasks, 0, 1 << len(cosets), targets)
    return not hits


def xcheck_no_hadamard_invariant(reports):
    pairs = []
    for r in reports:
        if r.claim_id != "thm-no-hadamard-invariant":
            continue
        if r.status != auditor.PASS:
            return False
        pairs.extend((r.params["n"], x) for x in r.params["multipliers"])
    if not pairs:
        return False
    for n, x in pairs:
        cosets = O.o_cosets(n, x)
        if len(cosets) <= 20:
            ok = _fft_family_empty(n, cosets)
        else:
            ok = isqrt(n) ** 2 == n and _flat_scan_empty(n, cosets)
        if not ok:
            return False
    return True


def xcheck_mu():
    from hadalab import numth

    for N in range(4, 2049, 4):
        if O.o_mu(N) != numth.mu_count(N)[1]:
            return False
    return True


def xcheck_lattices():
    for n in auditor.REFERENCE_LATTICES:
        nodes, edges = O.o_lattice(n)
        ref = auditor.REFERENCE_LATTICES[n]
        if [(lab, order) for lab, order, _ in nodes] != [tuple(x) for x in ref["nodes"]]:
            return False
        if edges != [tuple(e) for e in ref["edges"]]:
            return False
        g = sring.lattice(n)
        if [(lab, order, els) for lab, order, els in g.nodes] != nodes:
            return False
        if list(g.edges) != edges:
            return False
    return True


def main():
    print("running full audit ...")
    reports = auditor.run_all()
    gap = auditor.completeness_gap(reports)
    if gap:
        raise SystemExit("audit incomplete, missing claims: %s" % (gap,))

    print("validating against independent oracles ...")
    check("eq-commutations", xcheck_commutations())
    check("lemma-decimation-code", xcheck_decimation_code())
    check("thm-inclusion", xcheck_inclusion())
    check("prop-2n+1-size", xcheck_prop_size())
    check("lemma-cn-translate", xcheck_cn_translate())
    check("lemma-structure-preserved", xcheck_structure_preserved())
    check("thm-reversal-membership", xcheck_reversal(reports))
    check("thm-fixed-not-hadamard", xcheck_fixed_not_hadamard(reports))
    check("thm-orbit-2", xcheck_orbit2())
    check("remark-2level", xcheck_remark_2level(reports))
    check("thm-no-hadamard-invariant", xcheck_no_hadamard_invariant(reports))
    check("mu-sunze", xcheck_mu())
    check("lattice-figures", xcheck_lattices())

    claims = {}
    for r in reports:
        claims[auditor.golden_key(r)] = {
            "status": r.status,
            "required": r.claim_id in REQUIRED,
        }
    golden = {"version": 1, "claims": claims}
    path = os.path.join(ROOT, "src", "hadalab", "data", "audit_golden.json")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        json.dump(golden, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print("wrote %s (%d claims)" % (path, len(claims)))

    for n in (24, 36, 60):
        g = sring.lattice(n)
        rec = {
            "n": n,
            "nodes": [[lab, order, list(els)] for lab, order, els in g.nodes],
            "edges": [list(e) for e in g.edges],
        }
        lpath = os.path.join(ROOT, "tests", "golden", "lattice_%d.json" % n)
        os.makedirs(os.path.dirname(lpath), exist_ok=True)
        with open(lpath, "w") as fh:
            json.dump(rec, fh, indent=1, sort_keys=True)
            fh.write("\n")
        print("wrote %s" % lpath)


if __name__ == "__main__":
    main()
