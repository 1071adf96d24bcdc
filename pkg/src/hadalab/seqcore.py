"""Core type and group actions for binary +-1 sequences.

A sequence Y = (y_0, ..., y_{n-1}) with y_i in {+1, -1} is stored bit-packed:
bit i of ``mask`` is set iff y_i = -1.  Under that encoding the componentwise
product of two sequences is XOR of masks, and the periodic autocorrelation is
a popcount:  P_Y(k) = n - 2 * popcount(mask ^ rotate(mask, k)).
"""

import json
from math import gcd

from .errors import LengthMismatch, NotAUnit, ShiftOutOfRange

__all__ = [
    "BinarySeq",
    "AutocorrVector",
    "CyclicClass",
    "shift",
    "reverse",
    "decimate",
    "product",
    "weight",
    "autocorr_vector",
    "aperiodic_autocorr",
    "is_circulant_hadamard",
    "is_symmetric",
    "canonical_rotation",
]


def _rot_mask(mask, n, k):
    """Rotate so that new bit t = old bit (t + k) mod n."""
    k %= n
    if k == 0:
        return mask
    full = (1 << n) - 1
    return ((mask >> k) | (mask << (n - k))) & full


class BinarySeq:
    """Immutable +-1 sequence of length n, bit-packed (bit set means -1)."""

    __slots__ = ("n", "mask")

    def __init__(self, n, mask):
        if n < 1:
            raise ValueError("length must be >= 1")
        if mask < 0 or mask >> n:
            raise ValueError("mask out of range for length %d" % n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("BinarySeq is immutable")

    @classmethod
    def from_text(cls, text):
        """Parse '+' / '-' characters, e.g. '+++-'."""
        text = text.strip()
        if not text or any(c not in "+-" for c in text):
            raise ValueError("sequence text must be nonempty over '+-': %r" % text)
        mask = 0
        for i, c in enumerate(text):
            if c == "-":
                mask |= 1 << i
        return cls(len(text), mask)

    @classmethod
    def from_entries(cls, entries):
        """Build from an iterable of +1 / -1 values."""
        entries = list(entries)
        mask = 0
        for i, e in enumerate(entries):
            if e == -1:
                mask |= 1 << i
            elif e != 1:
                raise ValueError("entries must be +1 or -1, got %r" % (e,))
        return cls(len(entries), mask)

    @classmethod
    def from_support(cls, n, support):
        """Build the sequence with y_i = -1 exactly on ``support``."""
        mask = 0
        for i in support:
            if not 0 <= i < n:
                raise ValueError("support index %r out of range" % (i,))
            mask |= 1 << i
        return cls(n, mask)

    @property
    def entries(self):
        return tuple(-1 if (self.mask >> i) & 1 else 1 for i in range(self.n))

    @property
    def support(self):
        """Positions carrying -1, sorted."""
        return tuple(i for i in range(self.n) if (self.mask >> i) & 1)

    def __getitem__(self, i):
        return -1 if (self.mask >> (i % self.n)) & 1 else 1

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, BinarySeq)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.n, self.mask))

    def __lt__(self, other):
        """Entrywise lexicographic order with -1 < +1."""
        if self.n != other.n:
            return self.n < other.n
        return self.entries < other.entries

    def text(self):
        return "".join("-" if (self.mask >> i) & 1 else "+" for i in range(self.n))

    def __repr__(self):
        return "BinarySeq(%r)" % self.text()

    def to_json(self):
        return json.dumps({"n": self.n, "seq": self.text()})

    @classmethod
    def from_json(cls, s):
        d = json.loads(s)
        seq = cls.from_text(d["seq"])
        if seq.n != d["n"]:
            raise ValueError("length field disagrees with sequence text")
        return seq


class AutocorrVector:
    """Periodic autocorrelation (P_Y(0), ..., P_Y(n-1))."""

    __slots__ = ("n", "values")

    def __init__(self, values):
        self.values = tuple(values)
        self.n = len(self.values)

    def __getitem__(self, k):
        return self.values[k % self.n]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, AutocorrVector) and self.values == other.values

    def __repr__(self):
        return "AutocorrVector(%r)" % (self.values,)

    def offpeak(self):
        return self.values[1:]


class CyclicClass:
    """Equivalence class of a sequence under cyclic shifts, keyed by its
    lexicographically minimal rotation (with -1 < +1)."""

    __slots__ = ("rep",)

    def __init__(self, rep):
        self.rep = rep

    @property
    def n(self):
        return self.rep.n

    def members(self):
        """All distinct rotations."""
        seen = set()
        out = []
        for i in range(self.rep.n):
            s = shift(self.rep, i)
            if s not in seen:
                seen.add(s)
                out.append(s)
        return out

    def orbit_size(self):
        return len(self.members())

    def __eq__(self, other):
        return isinstance(other, CyclicClass) and self.rep == other.rep

    def __hash__(self):
        return hash(("class", self.rep.n, self.rep.mask))

    def __lt__(self, other):
        return self.rep < other.rep

    def __repr__(self):
        return "CyclicClass(%r)" % self.rep.text()


def shift(seq, i=1):
    """Cyclic shift: (C^i Y)_t = y_{(t+i) mod n}."""
    return BinarySeq(seq.n, _rot_mask(seq.mask, seq.n, i))


def reverse(seq):
    """Reversal: (R Y)_t = y_{n-1-t}."""
    n, mask = seq.n, seq.mask
    out = 0
    for t in range(n):
        if (mask >> (n - 1 - t)) & 1:
            out |= 1 << t
    return BinarySeq(n, out)


def decimate(seq, a):
    """Decimation: (d_a Y)_t = y_{(a*t) mod n}; a must be a unit mod n."""
    n, mask = seq.n, seq.mask
    if gcd(a, n) != 1:
        raise NotAUnit("%d is not a unit mod %d" % (a, n))
    out = 0
    for t in range(n):
        if (mask >> ((a * t) % n)) & 1:
            out |= 1 << t
    return BinarySeq(n, out)


def product(x, y):
    """Componentwise product; XOR on masks."""
    if x.n != y.n:
        raise LengthMismatch("lengths %d and %d differ" % (x.n, y.n))
    return BinarySeq(x.n, x.mask ^ y.mask)


def weight(seq):
    """Number of +1 entries."""
    return seq.n - seq.mask.bit_count()


def autocorr_vector(seq):
    """Periodic autocorrelation P_Y(k) = sum_i y_i y_{i+k} for k = 0..n-1."""
    n, mask = seq.n, seq.mask
    return AutocorrVector(
        n - 2 * (mask ^ _rot_mask(mask, n, k)).bit_count() for k in range(n)
    )


def aperiodic_autocorr(seq, k):
    """Aperiodic autocorrelation C(k) = sum_{i=0}^{n-k-1} a_i a_{i+k}."""
    n = seq.n
    if not 1 <= k <= n - 1:
        raise ShiftOutOfRange("k=%d not in 1..%d" % (k, n - 1))
    e = seq.entries
    return sum(e[i] * e[i + k] for i in range(n - k))


def is_circulant_hadamard(seq):
    """True iff every off-peak periodic autocorrelation is zero."""
    n, mask = seq.n, seq.mask
    return all(
        (mask ^ _rot_mask(mask, n, k)).bit_count() * 2 == n for k in range(1, n)
    )


def is_symmetric(seq):
    """True iff y_k = y_{(n-k) mod n} for all k."""
    n, mask = seq.n, seq.mask
    return all(
        ((mask >> k) & 1) == ((mask >> ((n - k) % n)) & 1) for k in range(n)
    )


def canonical_rotation(seq):
    """Canonical representative: the lexicographically minimal rotation,
    comparing entries with -1 < +1."""
    best = seq
    for i in range(1, seq.n):
        cand = shift(seq, i)
        if cand < best:
            best = cand
    return CyclicClass(best)
