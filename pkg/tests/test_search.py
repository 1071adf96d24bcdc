import json

import pytest

from oracles import (
    all_seqs, o_barker_count, o_hadamard_classes, o_is_barker, o_units,
)

from hadalab import search, seqcore, sring
from hadalab.errors import TooLarge
from hadalab.seqcore import BinarySeq


def test_hadamard_full_trivial_length_1():
    res = search.hadamard_full(1)
    assert sorted(res.hit_texts()) == ["+", "-"]
    assert res.nodes_explored == 2


def test_hadamard_full_length_4():
    res = search.hadamard_full(4)
    assert res.hit_texts() == ["---+", "-+++"]
    assert res.derived["raw_count"] == 8


def test_hadamard_full_collapse_negation():
    res = search.hadamard_full(4, collapse_negation=True)
    assert res.hit_texts() == ["---+"]


def test_hadamard_full_empty_elsewhere():
    for n in (8, 12, 16, 20, 24, 28, 32):
        res = search.hadamard_full(n)
        assert res.hits == []
    # odd and non-square lengths short-circuit
    assert search.hadamard_full(9).hits == []
    assert search.hadamard_full(9).nodes_explored == 0
    assert "perfect square" in search.hadamard_full(12).derived["note"]


def test_hadamard_full_matches_brute_force():
    for n in (1, 2, 3, 4, 5, 6, 8, 9, 12):
        got = sorted(search.hadamard_full(n).hit_texts())
        assert got == o_hadamard_classes(n)


def test_hadamard_full_bound():
    with pytest.raises(TooLarge):
        search.hadamard_full(36)
    # an explicit bound can lower the cutoff but never exceed the hard limit
    with pytest.raises(TooLarge):
        search.hadamard_full(16, bound=12)
    with pytest.raises(TooLarge):
        search.hadamard_full(64, bound=100)


def test_hadamard_in_invariant_4_3():
    res = search.hadamard_in_invariant(4, 3)
    assert res.hit_texts() == ["---+", "-+++"]
    assert res.derived["raw_members"] == 4
    assert res.derived["rank"] == 3


def test_hadamard_in_invariant_documented_grid_empty():
    for n, a in ((24, 13), (36, 13), (36, 17), (36, 19), (36, 35)):
        res = search.hadamard_in_invariant(n, a)
        assert res.hits == []
        assert res.derived["rank"] == sring.invariant_family(n, a).rank


def test_hadamard_in_invariant_modes():
    # even perfect square goes through the difference-set DFS
    assert search.hadamard_in_invariant(36, 17).derived["mode"] == "difference-dfs"
    # non-square lengths fall back to the member scan
    assert search.hadamard_in_invariant(24, 13).derived["mode"] == "member-scan"


def test_hadamard_in_invariant_agrees_with_member_scan():
    # both routes on a square length: brute member scan of the family
    for n, a in ((4, 3), (16, 3), (16, 7), (36, 13)):
        res = search.hadamard_in_invariant(n, a)
        fam = sring.invariant_family(n, a)
        brute = {
            seqcore.canonical_rotation(m).rep.text()
            for m in sring.enumerate_family(fam)
            if seqcore.is_circulant_hadamard(m)
        }
        assert set(res.hit_texts()) == brute


def test_barker_census():
    counts = {}
    for n in range(1, 25):
        counts[n] = len(search.barker(n).hits)
    nonempty = sorted(k for k, v in counts.items() if v)
    assert nonempty == [1, 2, 3, 4, 5, 7, 11, 13]
    assert counts[1] == 1 and counts[2] == 2 and counts[3] == 2
    assert counts[4] == 4 and counts[5] == 2
    assert counts[7] == 2 and counts[11] == 2 and counts[13] == 2


def test_barker_matches_brute_force():
    for n in range(1, 13):
        assert search.barker(n).hit_texts() == o_barker_count(n)


def test_barker_13_exact():
    res = search.barker(13)
    assert res.hit_texts() == ["+-+-++--+++++", "+++++--++-+-+"]


def test_barker_hits_verify():
    for n in (5, 7, 11, 13):
        for t in search.barker(n).hit_texts():
            y = BinarySeq.from_text(t)
            assert y.entries[0] == 1
            assert o_is_barker(y.entries)


def test_barker_expand_symmetries():
    res = search.barker(7, expand_symmetries=True)
    texts = set(res.hit_texts())
    # closed under negation and reversal
    for t in list(texts):
        y = BinarySeq.from_text(t)
        assert seqcore.reverse(y).text() in texts
        neg = seqcore.product(y, BinarySeq(y.n, (1 << y.n) - 1))
        assert neg.text() in texts
        assert o_is_barker(y.entries)


def test_barker_bound():
    with pytest.raises(TooLarge):
        search.barker(29)


def test_orbit_stabilizer_product():
    for text in ("+++-+--", "+-++---", "++-+-+--+-"):
        y = BinarySeq.from_text(text)
        rep = search.orbit_under_decimation(y)
        phi = len(o_units(y.n))
        assert rep.orbit_size() * len(rep.stabilizer) == phi
        assert rep.seed in rep.orbit


def test_orbit_of_hadamard_class():
    rep = search.orbit_under_decimation(BinarySeq.from_text("---+"))
    rev = seqcore.canonical_rotation(seqcore.reverse(BinarySeq.from_text("---+")))
    assert set(rep.orbit) == {rep.seed, rev}
    assert rep.reversal_hit


def test_orbit_sizes_of_named_families():
    from hadalab import families

    assert search.orbit_under_decimation(families.legendre(7).seq).orbit_size() == 2
    assert search.orbit_under_decimation(families.legendre(11).seq).orbit_size() == 2
    assert search.orbit_under_decimation(families.mseq(4).seq).orbit_size() == 2
    assert search.orbit_under_decimation(families.mseq(5).seq).orbit_size() == 6


def test_search_result_json_roundtrip():
    res = search.barker(7)
    rec = json.loads(res.to_json())
    back = search.SearchResult.from_cache_record(rec)
    assert back.to_json() == res.to_json()
    assert back.hit_texts() == res.hit_texts()
    assert back.nodes_explored == res.nodes_explored
    assert "elapsed" not in res.to_json()


def test_workers_do_not_change_results():
    base = search.hadamard_in_invariant(36, 19).to_json()
    for w in (2, 8):
        assert search.hadamard_in_invariant(36, 19, workers=w).to_json() == base
    b = search.barker(21).to_json()
    for w in (2, 8):
        assert search.barker(21, workers=w).to_json() == b


def test_result_cache(tmp_path):
    cache = search.ResultCache(str(tmp_path))
    assert cache.lookup("barker", 7, {"expand_symmetries": False}) is None
    res = search.barker(7)
    cache.store(res)
    got = cache.lookup("barker", 7, {"expand_symmetries": False})
    assert got is not None
    assert got.to_json() == res.to_json()
    # different params miss
    assert cache.lookup("barker", 7, {"expand_symmetries": True}) is None
    # the latest record wins
    cache.store(search.barker(7, expand_symmetries=True))
    again = cache.lookup("barker", 7, {"expand_symmetries": False})
    assert again.to_json() == res.to_json()
