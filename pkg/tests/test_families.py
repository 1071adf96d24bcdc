import pytest

from oracles import o_autocorr, o_legendre

from hadalab import families, seqcore
from hadalab.errors import NotPrime, NotTwoLevel, UnsupportedDegree


def test_legendre_7_exact():
    tl = families.legendre(7)
    assert tl.seq.text() == "+++-+--"
    assert tl.offpeak == -1
    assert tl.n == 7


def test_legendre_matches_oracle():
    for p in (3, 7, 11, 19, 23):
        tl = families.legendre(p)
        assert tl.seq.entries == o_legendre(p)
        ac = o_autocorr(tl.seq.entries)
        assert ac[0] == p
        assert set(ac[1:]) == {tl.offpeak} == {-1}


def test_legendre_weight():
    for p in (3, 7, 11, 19):
        assert seqcore.weight(families.legendre(p).seq) == (p + 1) // 2


def test_legendre_rejects_nonprime_and_even():
    for bad in (1, 2, 4, 9, 15):
        with pytest.raises(NotPrime):
            families.legendre(bad)


def test_legendre_1_mod_4_not_two_level():
    # p = 1 mod 4 gives a symmetric, non-two-level autocorrelation
    for p in (5, 13, 17):
        with pytest.raises(NotTwoLevel):
            families.legendre(p)


def test_mseq_periods_and_levels():
    for d in (2, 3, 4, 5, 6):
        tl = families.mseq(d)
        n = 2 ** d - 1
        assert tl.n == n
        assert tl.offpeak == -1
        ac = o_autocorr(tl.seq.entries)
        assert ac[0] == n and set(ac[1:]) == {-1}
        # balance: one more -1 than +1
        assert seqcore.weight(tl.seq) == (n - 1) // 2


def test_mseq_rejects_unknown_degree():
    with pytest.raises(UnsupportedDegree):
        families.mseq(7)
    with pytest.raises(UnsupportedDegree):
        families.mseq(1)


def test_mseq_shift_distinct_rotations():
    # a maximal-length sequence meets every nonzero state: all n rotations
    # are distinct
    tl = families.mseq(4)
    c = seqcore.canonical_rotation(tl.seq)
    assert c.orbit_size() == tl.n


def test_two_level_check_rejects_multilevel():
    from hadalab.families import _two_level
    from hadalab.seqcore import BinarySeq

    with pytest.raises(NotTwoLevel):
        _two_level(BinarySeq.from_text("++--"))
