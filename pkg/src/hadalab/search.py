"""Exhaustive and restricted searches: circulant Hadamard sequences, Barker
sequences, and decimation orbits.

Work is split over a partition set that depends only on the problem (never on
the worker count); partitions are merged in a fixed order, so results --
including node counts -- are byte-identical for any number of workers.
"""

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import numth, seqcore, sring
from . import _kernels as kernels
from .errors import RankTooLarge, TooLarge
from .seqcore import BinarySeq, CyclicClass

__all__ = [
    "SearchResult",
    "OrbitReport",
    "hadamard_full",
    "hadamard_in_invariant",
    "barker",
    "orbit_under_decimation",
    "ResultCache",
    "DEFAULT_BOUNDS",
    "HARD_BOUNDS",
]

CACHE_VERSION = 1

DEFAULT_BOUNDS = {"hadamard_full": 32, "barker": 28, "invariant_rank": 30}
HARD_BOUNDS = {"hadamard_full": 48, "barker": 32, "invariant_rank": 34}


@dataclass
class SearchResult:
    kind: str
    n: int
    params: dict  # input parameters
    hits: list  # CyclicClass (hadamard kinds) or BinarySeq (barker)
    nodes_explored: int
    derived: dict = field(default_factory=dict)
    elapsed: float = 0.0  # wall time; never serialized

    def hit_texts(self):
        out = []
        for h in self.hits:
            out.append(h.rep.text() if isinstance(h, CyclicClass) else h.text())
        return out

    def cache_record(self):
        return {
            "kind": self.kind,
            "n": self.n,
            "params": {
                "input": self.params,
                "derived": dict(self.derived, nodes_explored=self.nodes_explored),
            },
            "hits": self.hit_texts(),
            "version": CACHE_VERSION,
        }

    def to_json(self):
        return json.dumps(self.cache_record(), sort_keys=True)

    @classmethod
    def from_cache_record(cls, rec):
        derived = dict(rec["params"]["derived"])
        nodes = derived.pop("nodes_explored")
        hits = []
        for text in rec["hits"]:
            seq = BinarySeq.from_text(text)
            hits.append(seq if rec["kind"] == "barker" else CyclicClass(seq))
        return cls(
            kind=rec["kind"],
            n=rec["n"],
            params=rec["params"]["input"],
            hits=hits,
            nodes_explored=nodes,
            derived=derived,
        )


def _verify_hadamard(seq):
    """Independent re-check by direct summation (no popcount shortcut)."""
    e = seq.entries
    n = seq.n
    for k in range(1, n):
        if sum(e[i] * e[(i + k) % n] for i in range(n)) != 0:
            raise AssertionError("emitted hit fails the Hadamard predicate")


def _verify_barker(seq):
    e = seq.entries
    n = seq.n
    for k in range(1, n):
        if abs(sum(e[i] * e[i + k] for i in range(n - k))) > 1:
            raise AssertionError("emitted hit fails the Barker predicate")


def _run_spec(spec):
    op = spec[0]
    if op == "hadamard":
        _, n, s, g0, cnt = spec
        return kernels.hadamard_scan(n, s, g0, cnt)
    if op == "invariant_flat":
        _, n, cmasks, start, stop, targets = spec
        return kernels.invariant_scan(n, cmasks, start, stop, targets)
    if op == "invariant_diff":
        _, n, cmasks, target, lam, prefix = spec
        return kernels.difference_scan(n, cmasks, target, lam, prefix)
    if op == "barker":
        _, n, prefix = spec
        return kernels.barker_branch(n, prefix)
    raise ValueError("unknown spec %r" % (op,))


def _run_all(specs, workers):
    if workers <= 1 or len(specs) <= 1:
        return [_run_spec(s) for s in specs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_run_spec, specs))


def _combo_count(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _combo_unrank(k, idx):
    """The idx-th smallest integer with popcount k (colex unranking)."""
    mask = 0
    for j in range(k, 0, -1):
        b = j - 1
        while _combo_count(b + 1, j) <= idx:
            b += 1
        mask |= 1 << b
        idx -= _combo_count(b, j)
    return mask


def _perfect_root(n):
    r = int(round(n**0.5))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c == n:
            return c
    return 0


def hadamard_full(n, workers=1, collapse_negation=False, bound=None):
    """Scan all length-n sequences for the circulant Hadamard property.

    Row-sum identity: the P_Y(k) sum to (sum y_i)^2, so a hit forces n to be a
    perfect square and the support size to be (n -+ sqrt(n))/2; non-square (or
    odd > 1) lengths short-circuit to empty.  Candidates are enumerated with
    the -1 at position 0 fixed; hits are deduplicated into cyclic classes and
    the raw sequence count is recovered from class orbit sizes.
    """
    bound = DEFAULT_BOUNDS["hadamard_full"] if bound is None else bound
    bound = min(bound, HARD_BOUNDS["hadamard_full"])
    if n > bound:
        raise TooLarge("n=%d exceeds hadamard_full bound %d" % (n, bound))
    t0 = time.perf_counter()
    params = {"collapse_negation": bool(collapse_negation)}

    if n == 1:
        hits = [CyclicClass(BinarySeq(1, 0)), CyclicClass(BinarySeq(1, 1))]
        if collapse_negation:
            hits = hits[:1]
        return SearchResult(
            kind="hadamard_full", n=1, params=params, hits=hits, nodes_explored=2,
            derived={"raw_count": 2, "note": "trivial length"},
            elapsed=time.perf_counter() - t0,
        )

    root = _perfect_root(n)
    if root == 0 or n % 2 == 1:
        return SearchResult(
            kind="hadamard_full", n=n, params=params, hits=[], nodes_explored=0,
            derived={"raw_count": 0, "note": "row-sum identity: length must be an even perfect square"},
            elapsed=time.perf_counter() - t0,
        )

    sizes = sorted({(n - root) // 2, (n + root) // 2})
    specs = []
    for s in sizes:
        count = _combo_count(n - 1, s - 1)
        parts = 8 if count > (1 << 16) else 1
        bounds = [i * count // parts for i in range(parts)] + [count]
        for i in range(parts):
            lo, hi = bounds[i], bounds[i + 1]
            if hi > lo:
                specs.append(("hadamard", n, s, _combo_unrank(s - 1, lo), hi - lo))
    results = _run_all(specs, workers)

    raw_masks = []
    nodes = 0
    for hits, scanned in results:
        raw_masks.extend(hits)
        nodes += scanned
    classes = []
    seen = set()
    for m in raw_masks:
        c = seqcore.canonical_rotation(BinarySeq(n, m))
        if c not in seen:
            seen.add(c)
            classes.append(c)
    raw_count = sum(c.orbit_size() for c in classes)
    if collapse_negation:
        kept = []
        drop = set()
        full = (1 << n) - 1
        for c in sorted(classes):
            if c in drop:
                continue
            neg = seqcore.canonical_rotation(BinarySeq(n, c.rep.mask ^ full))
            drop.add(neg)
            kept.append(c)
        classes = kept
    classes = sorted(classes)
    for c in classes:
        _verify_hadamard(c.rep)
    return SearchResult(
        kind="hadamard_full", n=n, params=params, hits=classes,
        nodes_explored=nodes, derived={"raw_count": raw_count},
        elapsed=time.perf_counter() - t0,
    )


def hadamard_in_invariant(n, a, workers=1, rank_bound=None):
    """Search the invariant family I_n(a) for circulant Hadamard members.

    For even perfect-square lengths the support must be a difference set with
    every nonzero difference count equal to size - n/4, searched by DFS over
    cosets with monotone difference pruning (the weight filter is the size
    target).  Other lengths get the full 2^rank member scan.
    """
    rank_bound = DEFAULT_BOUNDS["invariant_rank"] if rank_bound is None else rank_bound
    rank_bound = min(rank_bound, HARD_BOUNDS["invariant_rank"])
    t0 = time.perf_counter()
    fam = sring.invariant_family(n, a)
    rank = fam.rank
    if rank > rank_bound:
        raise RankTooLarge("rank %d exceeds bound %d" % (rank, rank_bound))
    cmasks = [BinarySeq.from_support(n, cs).mask for cs in fam.partition.cosets]
    params = {"a": a}
    root = _perfect_root(n)

    specs = []
    mode = "difference-dfs" if (root and n % 2 == 0 and n >= 4) else "member-scan"
    if mode == "difference-dfs":
        tdepth = 6 if rank >= 18 else 0
        prefixes = [
            tuple((p >> j) & 1 for j in range(tdepth)) for p in range(1 << tdepth)
        ]
        for s in sorted({(n - root) // 2, (n + root) // 2}):
            lam = s - n // 4
            for pref in prefixes:
                specs.append(("invariant_diff", n, cmasks, s, lam, pref))
    else:
        total = 1 << rank
        parts = 8 if rank >= 18 else 1
        bounds = [i * total // parts for i in range(parts)] + [total]
        for i in range(parts):
            if bounds[i + 1] > bounds[i]:
                specs.append(
                    ("invariant_flat", n, cmasks, bounds[i], bounds[i + 1], None)
                )
    results = _run_all(specs, workers)

    member_masks = []
    nodes = 0
    for hits, cnt in results:
        member_masks.extend(hits)
        nodes += cnt
    classes = []
    seen = set()
    for m in member_masks:
        c = seqcore.canonical_rotation(BinarySeq(n, m))
        if c not in seen:
            seen.add(c)
            classes.append(c)
    classes = sorted(classes)
    for c in classes:
        _verify_hadamard(c.rep)
    return SearchResult(
        kind="hadamard_invariant", n=n, params=params, hits=classes,
        nodes_explored=nodes,
        derived={"rank": rank, "mode": mode, "raw_members": len(member_masks)},
        elapsed=time.perf_counter() - t0,
    )


def barker(n, workers=1, expand_symmetries=False, bound=None):
    """Exhaustive Barker search (every aperiodic |C(k)| <= 1) with the first
    entry fixed to +1, by two-ended branch and bound with exact checks of the
    shifts completed so far."""
    bound = DEFAULT_BOUNDS["barker"] if bound is None else bound
    bound = min(bound, HARD_BOUNDS["barker"])
    if n > bound:
        raise TooLarge("n=%d exceeds barker bound %d" % (n, bound))
    t0 = time.perf_counter()
    params = {"expand_symmetries": bool(expand_symmetries)}
    tdepth = 6 if n >= 14 else 0
    tdepth = min(tdepth, max(n - 1, 0))
    prefixes = [
        tuple((p >> j) & 1 for j in range(tdepth)) for p in range(1 << tdepth)
    ]
    specs = [("barker", n, pref) for pref in prefixes]
    results = _run_all(specs, workers)
    masks = []
    nodes = 0
    for hits, cnt in results:
        masks.extend(hits)
        nodes += cnt
    seqs = sorted(BinarySeq(n, m) for m in set(masks))
    if expand_symmetries:
        full = (1 << n) - 1
        expanded = set(seqs)
        for s in seqs:
            expanded.add(BinarySeq(n, s.mask ^ full))
            r = seqcore.reverse(s)
            expanded.add(r)
            expanded.add(BinarySeq(n, r.mask ^ full))
        seqs = sorted(expanded)
    for s in seqs:
        _verify_barker(s)
    return SearchResult(
        kind="barker", n=n, params=params, hits=list(seqs), nodes_explored=nodes,
        derived={}, elapsed=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class OrbitReport:
    seed: CyclicClass
    orbit: tuple  # CyclicClass, sorted
    stabilizer: tuple  # units a fixing the class
    reversal_hit: bool  # reversal class lies in the orbit

    @property
    def n(self):
        return self.seed.n

    def orbit_size(self):
        return len(self.orbit)


def orbit_under_decimation(seq):
    """Orbit of the cyclic class of seq under all decimations, the stabilizer
    of the class, and whether the reversal class is reached."""
    n = seq.n
    info = numth.unit_group(n)
    seed = seqcore.canonical_rotation(seq)
    orbit = {}
    stab = []
    for a in info.units:
        c = seqcore.canonical_rotation(seqcore.decimate(seq, a))
        orbit[c] = True
        if c == seed:
            stab.append(a)
    rev = seqcore.canonical_rotation(seqcore.reverse(seq))
    return OrbitReport(
        seed=seed,
        orbit=tuple(sorted(orbit)),
        stabilizer=tuple(stab),
        reversal_hit=rev in orbit,
    )


class ResultCache:
    """Append-only JSONL cache of search results, keyed by kind, n and a hash
    of the input parameters; the latest matching record wins."""

    def __init__(self, directory):
        self.directory = directory
        self.path = os.path.join(directory, "results.jsonl")

    @staticmethod
    def params_hash(kind, n, input_params):
        blob = json.dumps(
            {"kind": kind, "n": n, "input": input_params}, sort_keys=True
        )
        return hashlib.sha1(blob.encode()).hexdigest()

    def lookup(self, kind, n, input_params):
        if not os.path.exists(self.path):
            return None
        want = self.params_hash(kind, n, input_params)
        found = None
        with open(self.path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                if rec.get("version") != CACHE_VERSION:
                    continue
                key = self.params_hash(
                    rec["kind"], rec["n"], rec["params"]["input"]
                )
                if key == want:
                    found = rec
        return SearchResult.from_cache_record(found) if found else None

    def store(self, result):
        os.makedirs(self.directory, exist_ok=True)
        with open(self.path, "a") as fh:
            fh.write(result.to_json() + "\n")
