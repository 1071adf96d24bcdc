"""Invariant families I_n(a), their generating codes, inclusion lattice and
the subword classification of members.

I_n(a) is the set of sequences fixed by the decimation d_a; equivalently the
sequences whose -1 support is a union of cyclotomic cosets of a mod n.  It is
a group of size 2^rank under the componentwise product, rank being the number
of cosets.
"""

from dataclasses import dataclass, field
from math import gcd

from . import numth, seqcore
from .errors import (
    BadOrder,
    LengthMismatch,
    NotAUnit,
    NotInvariant,
    RankTooLarge,
    TooLarge,
)
from .seqcore import BinarySeq

__all__ = [
    "InvariantFamily",
    "LatticeGraph",
    "SubwordClassification",
    "invariant_family",
    "code",
    "member",
    "enumerate_family",
    "includes",
    "lattice",
    "classify_subwords",
    "c2n_translate",
]

ENUMERATE_RANK_BOUND = 30
LATTICE_N_BOUND = 10**4


@dataclass(frozen=True)
class InvariantFamily:
    n: int
    a: int
    partition: numth.CosetPartition

    @property
    def rank(self):
        return self.partition.rank

    @property
    def size(self):
        return 1 << self.rank


def invariant_family(n, a):
    if gcd(a, n) != 1:
        raise NotAUnit("%d is not a unit mod %d" % (a, n))
    return InvariantFamily(n=n, a=a % n, partition=numth.cyclotomic_cosets(a, n))


def _seed_x(n):
    """X: the single -1 sitting at position 0."""
    return BinarySeq(n, 1)


def code(fam):
    """Generating codewords, one per coset, keyed by the coset's smallest rep.

    The codeword for rep s is the product over the coset {s, s*a, ...} of the
    shifts C^(s*a^j) X, where X has its single -1 at position 0; the coset {0}
    contributes X itself.  Since C^i X has support {(n-i) mod n}, the codeword
    for s has support equal to the negated coset -C_s.
    """
    n = fam.n
    x = _seed_x(n)
    words = {}
    for cs in fam.partition.cosets:
        w = BinarySeq(n, 0)
        for e in cs:
            w = seqcore.product(w, seqcore.shift(x, e))
        words[cs[0]] = w
    return words


def member(seq, fam):
    """Is seq in I_n(a)?  Checked as support-constancy on cosets; the direct
    decimation route must agree."""
    if seq.n != fam.n:
        raise LengthMismatch("sequence length %d, family length %d" % (seq.n, fam.n))
    mask = seq.mask
    ok = True
    for cs in fam.partition.cosets:
        bits = {(mask >> e) & 1 for e in cs}
        if len(bits) > 1:
            ok = False
            break
    if __debug__:
        direct = seqcore.decimate(seq, fam.a) == seq
        assert direct == ok, "membership routes disagree"
    return ok


def enumerate_family(fam, rank_bound=ENUMERATE_RANK_BOUND):
    """Yield all 2^rank members in coset-subset counter order.

    Bit j of the counter selects the codeword of the j-th coset (cosets in
    smallest-rep order); the member is the product of the selected codewords.
    """
    if fam.rank > rank_bound:
        raise RankTooLarge("rank %d exceeds bound %d" % (fam.rank, rank_bound))
    words = code(fam)
    masks = [words[rep].mask for rep in fam.partition.reps()]
    n = fam.n
    # prefix[k] = XOR of the first k codeword masks; incrementing the counter
    # clears its trailing ones (prefix[z]) and sets bit z, so each step is one
    # table lookup instead of re-walking the subset.
    prefix = [0]
    for m in masks:
        prefix.append(prefix[-1] ^ m)
    cur = 0
    yield BinarySeq(n, 0)
    for g in range(1, 1 << len(masks)):
        z = (g & -g).bit_length() - 1
        cur ^= prefix[z] ^ masks[z]
        yield BinarySeq(n, cur)


def includes(n, a, b):
    """True iff I_n(a) is a subset of I_n(b): every coset of b must sit inside
    a single coset of a (partition refinement)."""
    pa = numth.cyclotomic_cosets(a, n)
    pb = numth.cyclotomic_cosets(b, n)
    for cs in pb.cosets:
        home = pa.coset_of(cs[0])
        if any(e not in home for e in cs[1:]):
            return False
    return True


@dataclass(frozen=True)
class LatticeGraph:
    """Distinct cyclic subgroups of the unit group, one node each, labeled by
    the smallest generator; node <1> is the top family I_n(1).

    Edges (u, v) are Hasse covers of family inclusion: I_u strictly inside
    I_v (equivalently <v> strictly inside <u>) with nothing between.
    """

    n: int
    nodes: tuple  # of (label, order, elements-tuple), sorted by label
    edges: tuple  # of (child-label, parent-label), sorted

    def node_labels(self):
        return tuple(lab for lab, _, _ in self.nodes)

    def to_dot(self):
        lines = ["digraph lattice_%d {" % self.n]
        for lab, order, _ in self.nodes:
            lines.append('  g%d [label="<%d> (order %d)"];' % (lab, lab, order))
        for u, v in self.edges:
            lines.append("  g%d -> g%d;" % (u, v))
        lines.append("}")
        return "\n".join(lines)


def lattice(n, n_bound=LATTICE_N_BOUND):
    if n > n_bound:
        raise TooLarge("modulus %d exceeds lattice bound %d" % (n, n_bound))
    info = numth.unit_group(n)
    subgroups = {}
    for a in info.units:
        elems = []
        x = 1 % n
        while True:
            elems.append(x)
            x = (x * a) % n
            if x == 1 % n:
                break
        key = frozenset(elems)
        if key not in subgroups or a < subgroups[key]:
            subgroups[key] = a
    by_label = {lab: g for g, lab in subgroups.items()}
    nodes = tuple(
        (lab, len(by_label[lab]), tuple(sorted(by_label[lab])))
        for lab in sorted(by_label)
    )
    edges = []
    for u in by_label:
        for v in by_label:
            if u == v or not by_label[v] < by_label[u]:
                continue
            cover = not any(
                w != u and w != v and by_label[v] < by_label[w] < by_label[u]
                for w in by_label
            )
            if cover:
                edges.append((u, v))
    return LatticeGraph(n=n, nodes=nodes, edges=tuple(sorted(edges)))


@dataclass(frozen=True)
class SubwordClassification:
    """Buckets of the support cosets of a member of I_{4n}(x).

    Tags (coset keyed by smallest element):
      A  fixed singleton whose half-period translate is outside the support
      B  fixed singleton paired with its translate (counted in pairs)
      D  order-p coset, translate outside the support
      E  order-p coset paired with its translate (counted in pairs)
      F  coset equal to its own translate setwise
    """

    n4: int
    x: int
    p: int  # multiplicative order of x (1, 2 or an odd prime)
    tags: dict  # coset rep -> tag
    counts: dict = field(default_factory=dict)  # tag -> count (B, E in pairs)

    @property
    def r(self):
        return self.counts.get("A", 0)

    @property
    def s(self):
        return self.counts.get("B", 0)

    @property
    def t(self):
        return self.counts.get("D", 0)

    @property
    def u(self):
        return self.counts.get("E", 0)

    @property
    def v(self):
        return self.counts.get("F", 0)


def classify_subwords(seq, x):
    """Classify the support cosets of seq (a member of I_{4n}(x)) by how the
    half-period translate +2n acts on them."""
    n4 = seq.n
    if n4 % 4 != 0:
        raise LengthMismatch("length %d is not a multiple of 4" % n4)
    if gcd(x, n4) != 1:
        raise NotAUnit("%d is not a unit mod %d" % (x, n4))
    p = numth.mult_order(x, n4)
    if p != 1 and p != 2 and not (p % 2 == 1 and numth.is_prime(p)):
        raise BadOrder("order of %d mod %d is %d; need 1, 2 or an odd prime" % (x, n4, p))
    fam = invariant_family(n4, x)
    if not member(seq, fam):
        raise NotInvariant("sequence is not fixed by decimation by %d" % x)

    half = n4 // 2
    part = fam.partition
    supp = set(seq.support)
    support_reps = sorted({part.rep_of(e) for e in supp})
    tags = {}
    counts = {"A": 0, "B": 0, "D": 0, "E": 0, "F": 0}
    done = set()
    for rep in support_reps:
        if rep in done:
            continue
        cs = part.coset_of(rep)
        translate = tuple(sorted((e + half) % n4 for e in cs))
        trep = part.rep_of(translate[0])
        if len(cs) == 1:
            if translate == cs:
                tag = "F"  # cannot happen for odd half-translate, kept for safety
            elif translate[0] in supp:
                tag = "B"
            else:
                tag = "A"
        else:
            if tuple(sorted(cs)) == translate:
                tag = "F"
            elif all(e in supp for e in translate):
                tag = "E"
            else:
                tag = "D"
        tags[rep] = tag
        done.add(rep)
        if tag in ("B", "E"):
            # the translate is itself a support coset; tag the pair once
            tags[trep] = tag
            done.add(trep)
            counts[tag] += 1
        else:
            counts[tag] += 1
    # consistency: support size decomposes over the buckets
    total = 0
    for rep, tag in tags.items():
        total += len(part.coset_of(rep))
    if total != len(supp):
        raise NotInvariant("support is not a union of cosets")
    return SubwordClassification(n4=n4, x=x % n4, p=p, tags=tags, counts=counts)


def c2n_translate(fam, s):
    """Shift the codeword of coset rep s by half the (even) period and verify
    it equals the codeword of the coset of s + n/2.  Returns that codeword."""
    n = fam.n
    if n % 2 != 0:
        raise LengthMismatch("half-period translate needs even length, got %d" % n)
    words = code(fam)
    part = fam.partition
    w = words[part.rep_of(s)]
    shifted = seqcore.shift(w, n // 2)
    target = words[part.rep_of((s + n // 2) % n)]
    if shifted != target:
        raise NotInvariant(
            "translate of codeword %d is not the codeword of %d" % (s, s + n // 2)
        )
    return shifted
