import pytest

from oracles import (
    all_seqs, from_text, o_aperiodic, o_autocorr, o_canonical, o_decimate,
    o_product, o_reverse, o_shift, o_units, to_text,
)

from hadalab import seqcore
from hadalab.errors import LengthMismatch, NotAUnit, ShiftOutOfRange
from hadalab.seqcore import BinarySeq


def as_tuple(y):
    return y.entries


def test_parse_and_text_roundtrip():
    for text in ("+", "-", "+++-", "+-+-++--", "-" * 17):
        y = BinarySeq.from_text(text)
        assert y.text() == text
        assert y.n == len(text)
        assert as_tuple(y) == from_text(text)


def test_parse_rejects_bad_text():
    for bad in ("", "+0-", "abc", "+ -"):
        with pytest.raises(ValueError):
            BinarySeq.from_text(bad)


def test_entries_support_consistency():
    y = BinarySeq.from_text("+-+--+")
    assert y.entries == (1, -1, 1, -1, -1, 1)
    assert y.support == (1, 3, 4)
    assert BinarySeq.from_support(6, (1, 3, 4)) == y
    assert BinarySeq.from_entries((1, -1, 1, -1, -1, 1)) == y


def test_json_roundtrip():
    y = BinarySeq.from_text("+-+--+-")
    assert BinarySeq.from_json(y.to_json()) == y


def test_shift_matches_oracle():
    for n in range(1, 8):
        for y in all_seqs(n):
            b = BinarySeq.from_entries(y)
            for i in range(n):
                assert as_tuple(seqcore.shift(b, i)) == o_shift(y, i)


def test_reverse_matches_oracle():
    for n in range(1, 8):
        for y in all_seqs(n):
            b = BinarySeq.from_entries(y)
            assert as_tuple(seqcore.reverse(b)) == o_reverse(y)


def test_decimate_matches_oracle():
    for n in range(1, 9):
        for y in all_seqs(n):
            b = BinarySeq.from_entries(y)
            for a in o_units(n):
                assert as_tuple(seqcore.decimate(b, a)) == o_decimate(y, a)


def test_decimate_rejects_nonunit():
    y = BinarySeq.from_text("+-+-")
    with pytest.raises(NotAUnit):
        seqcore.decimate(y, 2)


def test_product_matches_oracle():
    ys = ["++--+", "+-+-+", "-----", "+++++"]
    for a in ys:
        for b in ys:
            got = seqcore.product(BinarySeq.from_text(a), BinarySeq.from_text(b))
            assert as_tuple(got) == o_product(from_text(a), from_text(b))
    with pytest.raises(LengthMismatch):
        seqcore.product(BinarySeq.from_text("+-"), BinarySeq.from_text("+-+"))


def test_autocorr_matches_oracle():
    for n in range(1, 11):
        for y in all_seqs(n):
            b = BinarySeq.from_entries(y)
            assert seqcore.autocorr_vector(b).values == o_autocorr(y)


def test_aperiodic_matches_oracle():
    for n in range(2, 9):
        for y in all_seqs(n):
            b = BinarySeq.from_entries(y)
            got = tuple(seqcore.aperiodic_autocorr(b, k) for k in range(1, n))
            assert got == o_aperiodic(y)[1:]
    with pytest.raises(ShiftOutOfRange):
        seqcore.aperiodic_autocorr(BinarySeq.from_text("+-+"), 3)
    with pytest.raises(ShiftOutOfRange):
        seqcore.aperiodic_autocorr(BinarySeq.from_text("+-+"), 0)


def test_hadamard_witness():
    y = BinarySeq.from_text("+++-")
    assert seqcore.autocorr_vector(y).values == (4, 0, 0, 0)
    assert seqcore.is_circulant_hadamard(y)
    # every cyclic shift is a row of the same circulant matrix
    for i in range(4):
        assert seqcore.is_circulant_hadamard(seqcore.shift(y, i))
    assert not seqcore.is_circulant_hadamard(BinarySeq.from_text("++--"))


def test_weight_counts_plus_ones():
    assert seqcore.weight(BinarySeq.from_text("+++-")) == 3
    assert seqcore.weight(BinarySeq.from_text("----")) == 0
    assert seqcore.weight(BinarySeq.from_text("++++")) == 4
    # complement identity
    y = BinarySeq.from_text("+-++--+")
    neg = seqcore.product(y, BinarySeq.from_text("-" * 7))
    assert seqcore.weight(y) + seqcore.weight(neg) == 7
    # actions are permutations
    assert seqcore.weight(seqcore.shift(y, 3)) == seqcore.weight(y)
    assert seqcore.weight(seqcore.decimate(y, 3)) == seqcore.weight(y)


def test_canonical_rotation_matches_oracle():
    for n in range(1, 9):
        for y in all_seqs(n):
            c = seqcore.canonical_rotation(BinarySeq.from_entries(y))
            assert as_tuple(c.rep) == o_canonical(y)


def test_cyclic_class_members_and_orbit_size():
    c = seqcore.canonical_rotation(BinarySeq.from_text("+-+-"))
    assert c.orbit_size() == 2
    assert sorted(m.text() for m in c.members()) == ["+-+-", "-+-+"]
    c = seqcore.canonical_rotation(BinarySeq.from_text("++++"))
    assert c.orbit_size() == 1


def test_ordering_minus_before_plus():
    a = BinarySeq.from_text("-+++")
    b = BinarySeq.from_text("+---")
    assert a < b
    assert sorted([b, a]) == [a, b]


def test_is_symmetric():
    # y_k = y_{n-k}: palindromic around index 0
    assert seqcore.is_symmetric(BinarySeq.from_text("+-+-"))
    assert seqcore.is_symmetric(BinarySeq.from_text("+--"))
    assert not seqcore.is_symmetric(BinarySeq.from_text("++-"))


def test_autocorr_offpeak():
    v = seqcore.autocorr_vector(BinarySeq.from_text("+++-+--"))
    assert v.offpeak() == (-1,) * 6


def test_row_sum_identity():
    # sum of the autocorrelation vector equals the squared entry sum
    for n in range(1, 9):
        for y in all_seqs(n):
            b = BinarySeq.from_entries(y)
            assert sum(seqcore.autocorr_vector(b).values) == sum(y) ** 2


def test_shift_reverse_decimate_mutual_identities():
    for text in ("+-++---", "++-+-+--+-"):
        y = BinarySeq.from_text(text)
        n = y.n
        for r in o_units(n):
            lhs = seqcore.decimate(seqcore.reverse(y), r)
            rhs = seqcore.reverse(seqcore.decimate(seqcore.shift(y, r - 1), r))
            assert lhs == rhs
        assert seqcore.reverse(seqcore.shift(y, 1)) == seqcore.shift(
            seqcore.reverse(y), n - 1)
