"""Brute-force audits of the documented claims about this algebra.

Each claim has a registered runner that re-derives the claim's content from
definitions (never from the claim itself) and reports PASS, FAIL or VACUOUS.
FAIL reports carry reproducible witnesses.  Expected statuses live in a golden
file produced by independent oracle runs; deviations from golden are what the
CLI turns into a nonzero exit code.
"""

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from . import families, numth, search, seqcore, sring
from . import _kernels as kernels
from .seqcore import BinarySeq

__all__ = [
    "AuditReport",
    "CLAIM_IDS",
    "audit_algebra",
    "audit_sring",
    "audit_hadamard_claims",
    "run_all",
    "load_golden",
    "compare_golden",
    "REFERENCE_LATTICES",
]

PASS, FAIL, VACUOUS = "PASS", "FAIL", "VACUOUS"

WITNESS_CAP = 5

# registered claim ids; the completeness check requires every one to appear
# in a full audit run
CLAIM_IDS = (
    "eq-commutations",
    "lemma-decimation-code",
    "thm-inclusion",
    "prop-2n+1-size",
    "lemma-cn-translate",
    "lemma-structure-preserved",
    "thm-reversal-membership",
    "thm-fixed-not-hadamard",
    "thm-orbit-2",
    "remark-2level",
    "thm-no-hadamard-invariant",
    "mu-sunze",
    "lattice-figures",
)

# reference subgroup tables for the documented lattices: modulus -> (nodes as
# (label, order), edges as (child, parent))
REFERENCE_LATTICES = {
    24: {
        "nodes": [(1, 1), (5, 2), (7, 2), (11, 2), (13, 2), (17, 2), (19, 2), (23, 2)],
        "edges": [(5, 1), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1)],
    },
    36: {
        "nodes": [(1, 1), (5, 6), (7, 6), (11, 6), (13, 3), (17, 2), (19, 2), (35, 2)],
        "edges": [
            (5, 13), (5, 17), (7, 13), (7, 19), (11, 13), (11, 35),
            (13, 1), (17, 1), (19, 1), (35, 1),
        ],
    },
    60: {
        "nodes": [
            (1, 1), (7, 4), (11, 2), (13, 4), (17, 4), (19, 2), (23, 4),
            (29, 2), (31, 2), (41, 2), (49, 2), (59, 2),
        ],
        "edges": [
            (7, 49), (11, 1), (13, 49), (17, 49), (19, 1), (23, 49),
            (29, 1), (31, 1), (41, 1), (49, 1), (59, 1),
        ],
    },
    196: {
        "nodes": [
            (1, 1), (3, 42), (5, 42), (9, 21), (11, 42), (13, 14), (15, 14),
            (19, 6), (27, 14), (29, 7), (67, 6), (97, 2), (99, 2), (117, 6),
            (165, 3), (195, 2),
        ],
        "edges": [
            (3, 9), (3, 19), (3, 27), (5, 9), (5, 13), (5, 117), (9, 29),
            (9, 165), (11, 9), (11, 15), (11, 67), (13, 29), (13, 97),
            (15, 29), (15, 99), (19, 165), (19, 195), (27, 29), (27, 195),
            (29, 1), (67, 99), (67, 165), (97, 1), (99, 1), (117, 97),
            (117, 165), (165, 1), (195, 1),
        ],
    },
    668: {
        "nodes": [
            (1, 1), (3, 166), (5, 166), (9, 83), (15, 166),
            (333, 2), (335, 2), (667, 2),
        ],
        "edges": [
            (3, 9), (3, 335), (5, 9), (5, 333), (9, 1), (15, 9), (15, 667),
            (333, 1), (335, 1), (667, 1),
        ],
    },
}


@dataclass
class AuditReport:
    claim_id: str
    params: dict
    status: str
    witnesses: list = field(default_factory=list)
    notes: str = ""

    def params_key(self):
        return json.dumps(self.params, sort_keys=True)

    def to_record(self):
        return {
            "claim_id": self.claim_id,
            "params": self.params,
            "status": self.status,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }


def _seq_wit(seq, **extra):
    d = {"seq": seq.text()}
    d.update(extra)
    return d


# ---------------------------------------------------------------- algebra

def _check_commutations(y, r, i, ops):
    """Return list of (identity-name) failures for one case."""
    bad = []
    n = y.n
    # decimate(reverse) = reverse(decimate(shift^{r-1}))
    lhs = ops.decimate(ops.reverse(y), r)
    rhs = ops.reverse(ops.decimate(ops.shift(y, r - 1), r))
    if lhs != rhs:
        bad.append("decimate-reverse")
    # reverse(shift) = shift^{n-1}(reverse)
    if ops.reverse(ops.shift(y, 1)) != ops.shift(ops.reverse(y), n - 1):
        bad.append("reverse-shift")
    # shift^i(decimate) = decimate(shift^{i*r})
    if ops.shift(ops.decimate(y, r), i) != ops.decimate(ops.shift(y, (i * r) % n), r):
        bad.append("shift-decimate")
    # autocorrelation re-indexing under decimation
    pv = ops.autocorr_vector(y)
    pd = ops.autocorr_vector(ops.decimate(y, r))
    if any(pd[k] != pv[(k * r) % n] for k in range(n)):
        bad.append("autocorr-reindex")
    return bad


def audit_algebra(n_max=12, samples=10000, seed=20240601, sample_n_max=64, ops=seqcore):
    """Exhaustive check of the shift/reverse/decimate commutation identities
    and the autocorrelation re-indexing law for n <= n_max, plus seeded random
    cases up to sample_n_max."""
    wits = []
    checked = 0
    for n in range(1, n_max + 1):
        us = [a for a in range(n) if gcd(a, n) == 1]
        for mask in range(1 << n):
            y = BinarySeq(n, mask)
            for r in us:
                for i in range(n):
                    bad = _check_commutations(y, r, i, ops)
                    checked += 1
                    if bad and len(wits) < WITNESS_CAP:
                        wits.append(_seq_wit(y, r=r, i=i, identities=bad))
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(2, sample_n_max)
        y = BinarySeq(n, rng.getrandbits(n))
        us = [a for a in range(n) if gcd(a, n) == 1]
        r = rng.choice(us)
        i = rng.randrange(n)
        bad = _check_commutations(y, r, i, ops)
        checked += 1
        if bad and len(wits) < WITNESS_CAP:
            wits.append(_seq_wit(y, r=r, i=i, identities=bad))
    status = FAIL if wits else PASS
    return [
        AuditReport(
            claim_id="eq-commutations",
            params={"n_max": n_max, "samples": samples, "seed": seed,
                    "sample_n_max": sample_n_max},
            status=status,
            witnesses=wits,
            notes="identities: decimate-reverse, reverse-shift, shift-decimate, "
                  "autocorr-reindex; %d cases" % checked,
        )
    ]


# ---------------------------------------------------------------- s-ring

def _audit_decimation_code(n_max):
    wits = []
    checked = 0
    for n in range(1, n_max + 1):
        us = [a for a in range(n) if gcd(a, n) == 1]
        for a in us:
            fam = sring.invariant_family(n, a)
            words = sring.code(fam)
            part = fam.partition
            for r in us:
                rinv = pow(r, -1, n)
                for s, w in words.items():
                    got = seqcore.decimate(w, r)
                    want = words[part.rep_of((s * rinv) % n)]
                    checked += 1
                    if got != want and len(wits) < WITNESS_CAP:
                        wits.append({"n": n, "a": a, "r": r, "s": s})
    return AuditReport(
        claim_id="lemma-decimation-code",
        params={"n_max": n_max},
        status=FAIL if wits else PASS,
        witnesses=wits,
        notes="decimation by r maps the codeword of s to the codeword of "
              "s*r^-1; %d cases" % checked,
    )


def _cyclic_subgroup(a, n):
    out = set()
    x = 1 % n
    while True:
        out.add(x)
        x = (x * a) % n
        if x in out:
            return frozenset(out)


def _audit_inclusion(n_max):
    wits = []
    checked = 0
    vacuous = 0
    for n in range(1, n_max + 1):
        us = [a for a in range(n) if gcd(a, n) == 1]
        groups = {a: _cyclic_subgroup(a, n) for a in us}
        for a in us:
            for b in us:
                if groups[b] <= groups[a]:
                    checked += 1
                    if not sring.includes(n, a, b) and len(wits) < WITNESS_CAP:
                        wits.append({"n": n, "a": a, "b": b})
                else:
                    vacuous += 1
    return AuditReport(
        claim_id="thm-inclusion",
        params={"n_max": n_max},
        status=FAIL if wits else PASS,
        witnesses=wits,
        notes="subgroup containment <b> <= <a> forces family inclusion; "
              "%d hypothesis pairs, %d outside hypothesis (not asserted)"
              % (checked, vacuous),
    )


def _audit_prop_size(n_top=6):
    wits = []
    details = []
    for n in range(1, n_top + 1):
        n4 = 4 * n
        fam = sring.invariant_family(n4, 2 * n + 1)
        members = set()
        for m in sring.enumerate_family(fam):
            members.add(m.mask)
        want = 1 << (3 * n)
        details.append("4n=%d rank=%d size=%d" % (n4, fam.rank, len(members)))
        if fam.rank != 3 * n or len(members) != want:
            wits.append({"n4": n4, "rank": fam.rank, "size": len(members),
                         "expected": want})
    return AuditReport(
        claim_id="prop-2n+1-size",
        params={"n_top": n_top},
        status=FAIL if wits else PASS,
        witnesses=wits[:WITNESS_CAP],
        notes="family of the half-period multiplier 2n+1 mod 4n has rank 3n "
              "and 2^(3n) distinct members; the size is 2^(#cosets), so a "
              "count of the form 2^(r+1) reads r as the number of nonzero "
              "cosets with the zero coset adding the extra factor; "
              + "; ".join(details),
    )


def _audit_cn_translate(n_max):
    wits = []
    checked = 0
    for n in range(2, n_max + 1, 2):
        us = [a for a in range(n) if gcd(a, n) == 1]
        for a in us:
            fam = sring.invariant_family(n, a)
            for s in fam.partition.reps():
                checked += 1
                try:
                    sring.c2n_translate(fam, s)
                except Exception:
                    if len(wits) < WITNESS_CAP:
                        wits.append({"n": n, "a": a, "s": s})
    return AuditReport(
        claim_id="lemma-cn-translate",
        params={"n_max": n_max},
        status=FAIL if wits else PASS,
        witnesses=wits,
        notes="half-period shift maps the codeword of s to the codeword of "
              "s + n/2; %d cases" % checked,
    )


def _audit_structure_preserved(lengths=(12, 20, 24, 28), per_family=32, seed=20240601):
    wits = []
    checked = 0
    rng = random.Random(seed)
    for n4 in lengths:
        us = [a for a in range(n4) if gcd(a, n4) == 1]
        for x in us:
            p = numth.mult_order(x, n4)
            if p != 1 and p != 2 and not (p % 2 == 1 and numth.is_prime(p)):
                continue
            fam = sring.invariant_family(n4, x)
            idxs = set(range(min(per_family, fam.size)))
            while len(idxs) < min(2 * per_family, fam.size):
                idxs.add(rng.randrange(fam.size))
            words = sring.code(fam)
            masks = [words[rep].mask for rep in fam.partition.reps()]
            for g in sorted(idxs):
                mm = 0
                for j in range(fam.rank):
                    if (g >> j) & 1:
                        mm ^= masks[j]
                y = BinarySeq(n4, mm)
                base = sring.classify_subwords(y, x)
                for q in us:
                    got = sring.classify_subwords(seqcore.decimate(y, q), x)
                    checked += 1
                    if got.counts != base.counts and len(wits) < WITNESS_CAP:
                        wits.append(_seq_wit(y, x=x, q=q, before=base.counts,
                                             after=got.counts))
    return AuditReport(
        claim_id="lemma-structure-preserved",
        params={"lengths": list(lengths), "per_family": per_family, "seed": seed},
        status=FAIL if wits else PASS,
        witnesses=wits,
        notes="decimations keep the per-tag coset counts of members; "
              "%d cases" % checked,
    )


def audit_sring(n_max=24):
    return [
        _audit_decimation_code(min(n_max, 24)),
        _audit_inclusion(max(n_max, 40)),
        _audit_prop_size(6),
        _audit_cn_translate(min(n_max, 24)),
        _audit_structure_preserved(),
    ]


# ---------------------------------------------------------------- hadamard

def _audit_reversal_membership(n_list=tuple(range(1, 15)), cap=WITNESS_CAP):
    reports = []
    for n in n_list:
        xs = [x for x in range(2, n - 1) if gcd(x, n) == 1]
        hyp, viol, wits = kernels.reversal_audit(n, xs, cap)
        if hyp == 0:
            status = VACUOUS
        else:
            status = FAIL if viol else PASS
        reports.append(
            AuditReport(
                claim_id="thm-reversal-membership",
                params={"n": n},
                status=status,
                witnesses=[
                    _seq_wit(BinarySeq(n, m), x=x) for (m, x) in wits
                ],
                notes="decimation-reaches-reversal forces fixation by n-x; "
                      "%d hypothesis cases, %d violations" % (hyp, viol),
            )
        )
    return reports


def _star_orbit_masks(n):
    us = [a for a in range(n) if gcd(a, n) == 1]
    seen = set()
    masks = []
    for s in range(n):
        if s in seen:
            continue
        orb = {(u * s) % n for u in us}
        seen |= orb
        m = 0
        for e in orb:
            m |= 1 << e
        masks.append(m)
    return masks


def _audit_fixed_not_hadamard(n_list=(4, 8, 12, 16, 20, 24)):
    reports = []
    for n in n_list:
        orbs = _star_orbit_masks(n)
        wits = []
        for pick in range(1 << len(orbs)):
            m = 0
            for j in range(len(orbs)):
                if (pick >> j) & 1:
                    m |= orbs[j]
            y = BinarySeq(n, m)
            if seqcore.is_circulant_hadamard(y) and len(wits) < WITNESS_CAP:
                wits.append(_seq_wit(y))
        reports.append(
            AuditReport(
                claim_id="thm-fixed-not-hadamard",
                params={"n": n},
                status=FAIL if wits else PASS,
                witnesses=wits,
                notes="members fixed by every decimation (support a union of "
                      "unit-group orbits) should never be circulant Hadamard; "
                      "%d members scanned" % (1 << len(orbs)),
            )
        )
    return reports


def _audit_orbit_2(n_max=16):
    wits = []
    cases = 0
    for n in range(1, n_max + 1):
        try:
            res = search.hadamard_full(n)
        except Exception:
            continue
        for c in res.hits:
            rep = c.rep
            r = search.orbit_under_decimation(rep)
            rev = seqcore.canonical_rotation(seqcore.reverse(rep))
            want = {r.seed, rev}
            cases += 1
            if set(r.orbit) != want and len(wits) < WITNESS_CAP:
                wits.append(_seq_wit(rep, orbit=[o.rep.text() for o in r.orbit]))
    return AuditReport(
        claim_id="thm-orbit-2",
        params={"n_max": n_max},
        status=(FAIL if wits else (PASS if cases else VACUOUS)),
        witnesses=wits,
        notes="decimation orbit of a circulant Hadamard class equals "
              "{class, reversal class}; %d classes checked" % cases,
    )


def _audit_remark_2level():
    reports = []
    cases = [
        ("legendre", 7), ("legendre", 11), ("mseq", 4), ("mseq", 5),
    ]
    for kind, arg in cases:
        tl = families.legendre(arg) if kind == "legendre" else families.mseq(arg)
        rep = search.orbit_under_decimation(tl.seq)
        size = rep.orbit_size()
        ok = size <= 2
        reports.append(
            AuditReport(
                claim_id="remark-2level",
                params={"family": kind, "arg": arg},
                status=PASS if ok else FAIL,
                witnesses=[] if ok else [
                    {"orbit_size": size,
                     "orbit": [o.rep.text() for o in rep.orbit]}
                ],
                notes="two-level sequence of length %d has decimation orbit "
                      "size %d (claim: at most 2)" % (tl.n, size),
            )
        )
    return reports


def _prime_order_units(n):
    return [x for x in range(2, n)
            if gcd(x, n) == 1 and numth.is_prime(numth.mult_order(x, n))]


def _audit_no_hadamard_invariant(n_list=(8, 12, 16, 20, 24, 36)):
    """Searches restricted to I_n(x) for every prime-order multiplier x must
    come back empty at these lengths."""
    reports = []
    for n in n_list:
        xs = _prime_order_units(n)
        wits = []
        details = []
        for x in xs:
            res = search.hadamard_in_invariant(n, x)
            details.append("x=%d rank %d: %d hits"
                           % (x, res.derived["rank"], len(res.hits)))
            if res.hits and len(wits) < WITNESS_CAP:
                wits.append({"n": n, "x": x,
                             "hits": [c.rep.text() for c in res.hits]})
        reports.append(
            AuditReport(
                claim_id="thm-no-hadamard-invariant",
                params={"n": n, "multipliers": xs},
                status=FAIL if wits else PASS,
                witnesses=wits,
                notes="restricted searches over prime-order multipliers; "
                      + "; ".join(details),
            )
        )
    return reports


def _audit_mu(limit=4096):
    wits = []
    checked = 0
    for N in range(4, limit + 1, 4):
        e, f = numth.mu_count(N)
        checked += 1
        if e != f and len(wits) < WITNESS_CAP:
            wits.append({"N": N, "enumerated": e, "formula": f})
    return AuditReport(
        claim_id="mu-sunze",
        params={"limit": limit},
        status=FAIL if wits else PASS,
        witnesses=wits,
        notes="square roots of 1 mod N: enumeration equals the 2-adic/odd-"
              "prime product formula; %d moduli" % checked,
    )


def _audit_lattice_figures(moduli=(24, 36, 60, 196, 668)):
    wits = []
    details = []
    for n in moduli:
        g = sring.lattice(n)
        got_nodes = [[lab, order] for lab, order, _ in g.nodes]
        got_edges = [list(e) for e in g.edges]
        ref = REFERENCE_LATTICES[n]
        ok = (got_nodes == [list(x) for x in ref["nodes"]]
              and got_edges == [list(e) for e in ref["edges"]])
        details.append("%d: %s" % (n, "match" if ok else "MISMATCH"))
        if not ok and len(wits) < WITNESS_CAP:
            wits.append({"n": n, "computed_nodes": got_nodes,
                         "computed_edges": got_edges})
    return AuditReport(
        claim_id="lattice-figures",
        params={"moduli": list(moduli)},
        status=FAIL if wits else PASS,
        witnesses=wits,
        notes="computed subgroup lattices against the reference tables; "
              + "; ".join(details),
    )


def audit_hadamard_claims(n_list=tuple(range(1, 15)),
                          search_n_list=(8, 12, 16, 20, 24, 36)):
    reports = []
    reports.extend(_audit_reversal_membership(n_list))
    reports.extend(_audit_fixed_not_hadamard())
    reports.append(_audit_orbit_2())
    reports.extend(_audit_remark_2level())
    reports.extend(_audit_no_hadamard_invariant(search_n_list))
    reports.append(_audit_mu())
    reports.append(_audit_lattice_figures())
    return reports


# ---------------------------------------------------------------- driver

_SUITES = {
    "algebra": lambda: audit_algebra(),
    "sring": lambda: audit_sring(),
    "hadamard": lambda: audit_hadamard_claims(),
}


def _run_suite(name):
    return [r.to_record() for r in _SUITES[name]()]


def run_all(workers=1, suites=("algebra", "sring", "hadamard")):
    """Run every registered claim audit; reports sorted by claim and params."""
    if workers <= 1 or len(suites) <= 1:
        recs = [rec for s in suites for rec in _run_suite(s)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            recs = [rec for chunk in ex.map(_run_suite, suites) for rec in chunk]
    reports = [
        AuditReport(
            claim_id=r["claim_id"], params=r["params"], status=r["status"],
            witnesses=r["witnesses"], notes=r["notes"],
        )
        for r in recs
    ]
    reports.sort(key=lambda r: (r.claim_id, r.params_key()))
    return reports


def completeness_gap(reports):
    """Claim ids that never showed up; must be empty for a full run."""
    seen = {r.claim_id for r in reports}
    return tuple(c for c in CLAIM_IDS if c not in seen)


def load_golden(path):
    with open(path) as fh:
        return json.load(fh)


def golden_key(report):
    return "%s|%s" % (report.claim_id, report.params_key())


def compare_golden(reports, golden):
    """Return (deviations, missing) versus a golden status map.  A deviation
    is (key, got_status, want_status, required)."""
    claims = golden.get("claims", {})
    deviations = []
    seen = set()
    for r in reports:
        key = golden_key(r)
        seen.add(key)
        if key in claims:
            want = claims[key]
            if r.status != want["status"]:
                deviations.append(
                    (key, r.status, want["status"], bool(want.get("required", True)))
                )
    missing = [k for k in claims if k not in seen]
    return deviations, missing
