"""Reference two-level sequence families: Legendre sequences and maximal-length
LFSR sequences.  Construction verifies the two-level autocorrelation and the
LFSR period, so a bad table entry cannot produce a silently wrong sequence.
"""

from dataclasses import dataclass

from . import seqcore
from .errors import NotPrime, NotTwoLevel, UnsupportedDegree
from .numth import is_prime
from .seqcore import BinarySeq

__all__ = ["TwoLevelSeq", "legendre", "mseq", "PRIMITIVE_POLYS"]

# coefficient masks including the leading term; bit i is the x^i coefficient
PRIMITIVE_POLYS = {
    2: 0b111,        # x^2 + x + 1
    3: 0b1011,       # x^3 + x + 1
    4: 0b10011,      # x^4 + x + 1
    5: 0b100101,     # x^5 + x^2 + 1
    6: 0b1000011,    # x^6 + x + 1
}


@dataclass(frozen=True)
class TwoLevelSeq:
    seq: BinarySeq
    offpeak: int

    @property
    def n(self):
        return self.seq.n


def _two_level(seq):
    vals = set(seqcore.autocorr_vector(seq).offpeak())
    if len(vals) != 1:
        raise NotTwoLevel(
            "off-peak autocorrelation takes %d values: %s"
            % (len(vals), sorted(vals))
        )
    return vals.pop()


def legendre(p):
    """Legendre sequence of prime length p: y_0 = +1 and y_i = +1 iff i is a
    nonzero quadratic residue.  Two-level (off-peak -1) for p = 3 mod 4; for
    p = 1 mod 4 the off-peak check fails loudly."""
    if not is_prime(p) or p == 2:
        raise NotPrime("%d is not an odd prime" % p)
    residues = {(i * i) % p for i in range(1, p)}
    seq = BinarySeq.from_support(p, [i for i in range(1, p) if i not in residues])
    return TwoLevelSeq(seq=seq, offpeak=_two_level(seq))


def mseq(degree):
    """Maximal-length LFSR sequence of period 2^degree - 1 (output bit 1 maps
    to -1).  The table polynomial is validated by checking the state cycle has
    full period."""
    if degree not in PRIMITIVE_POLYS:
        raise UnsupportedDegree(
            "degree %r not in table %s" % (degree, sorted(PRIMITIVE_POLYS))
        )
    poly = PRIMITIVE_POLYS[degree]
    taps = [i for i in range(degree) if (poly >> i) & 1]
    period = (1 << degree) - 1
    state = (1 << degree) - 1  # all-ones seed
    bits = []
    seen = set()
    while state not in seen:
        seen.add(state)
        bits.append(state & 1)
        fb = 0
        for t in taps:
            fb ^= (state >> t) & 1
        state = (state >> 1) | (fb << (degree - 1))
    if len(bits) != period:
        raise NotTwoLevel(
            "LFSR for degree %d cycles after %d states, want %d"
            % (degree, len(bits), period)
        )
    mask = 0
    for i, b in enumerate(bits):
        mask |= b << i
    seq = BinarySeq(period, mask)
    return TwoLevelSeq(seq=seq, offpeak=_two_level(seq))
