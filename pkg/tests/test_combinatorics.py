"""Permutations, shapes, index tuples, and multisegments."""

import random
from math import factorial

import pytest

from affschur.combinatorics import (
    Multisegment,
    Permutation,
    Segment,
    compositions,
    decompose_index,
    dual_partition,
    in_window,
    index_tuples,
    min_coset_reps,
    multisegments_over,
    partitions,
    place_permutation,
    residue_weight,
    sym_group,
    young_generators,
    young_subgroup,
)
from affschur.scalar import QV


def test_permutation_group_structure():
    rng = random.Random(3)
    for r in (1, 2, 3, 4):
        e = Permutation.identity(r)
        group = sym_group(r)
        assert len(group) == factorial(r)
        for _ in range(30):
            w = rng.choice(group)
            u = rng.choice(group)
            x = rng.choice(group)
            assert (w * u) * x == w * (u * x)
            assert w * w.inverse() == e
            assert w.inverse().length == w.length


def test_reduced_words():
    for r in (2, 3, 4):
        for w in sym_group(r):
            word = w.reduced_word()
            assert len(word) == w.length
            rebuilt = Permutation.identity(r)
            for i in word:
                rebuilt = rebuilt * Permutation.adjacent(i, r)
            assert rebuilt == w


def test_descents_and_multiplication_by_generator():
    w = Permutation((3, 1, 2))
    assert not w.right_descent(1)
    assert w.right_descent(2)
    assert w.times_adjacent(2).window == (3, 2, 1)
    assert w.length == 2


def test_place_permutation_is_right_action():
    rng = random.Random(8)
    for _ in range(50):
        r = rng.randint(1, 4)
        idx = tuple(rng.randint(-5, 5) for _ in range(r))
        w = rng.choice(sym_group(r))
        u = rng.choice(sym_group(r))
        once = place_permutation(place_permutation(idx, w), u)
        both = place_permutation(idx, w * u)
        assert once == both
    assert place_permutation((7, 8), Permutation((2, 1))) == (8, 7)


def test_place_permutation_preserves_weight():
    rng = random.Random(13)
    for _ in range(40):
        r = rng.randint(1, 4)
        n = rng.randint(1, 3)
        idx = tuple(rng.randint(-4, 6) for _ in range(r))
        w = rng.choice(sym_group(r))
        assert residue_weight(place_permutation(idx, w), n) == residue_weight(idx, n)


def test_compositions_and_partitions():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert sorted(compositions(2, 2), reverse=True) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(compositions(3, 4))) == 15
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions(4, max_part=2) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == [()]


def test_dual_partition_involution():
    for r in range(0, 9):
        for mu in partitions(r):
            assert dual_partition(dual_partition(mu)) == mu
    assert dual_partition((3, 1)) == (2, 1, 1)


def test_young_subgroup_and_coset_reps():
    for r in (2, 3, 4, 5):
        for p in range(1, r + 1):
            for mu in compositions(p, r):
                sub = young_subgroup(mu)
                reps = min_coset_reps(mu)
                assert len(sub) * len(reps) == factorial(r)
                seen = set()
                for u in sub:
                    for d in reps:
                        w = u * d
                        assert w.length == u.length + d.length
                        seen.add(w)
                assert len(seen) == factorial(r)


def test_young_generators():
    assert young_generators((2, 2)) == [1, 3]
    assert young_generators((1, 1, 1)) == []
    assert young_generators((3,)) == [1, 2]


def test_frozen_coset_reps():
    reps = {w.window for w in min_coset_reps((2, 1))}
    assert reps == {(1, 2, 3), (1, 3, 2), (3, 1, 2)}


def test_index_tuples_and_window():
    tuples = list(index_tuples(2, 2))
    assert tuples == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert in_window((1, 2), 2)
    assert not in_window((0, 2), 2)
    assert residue_weight((3, 1), 2) == (2, 0)
    assert residue_weight((1, 1, 2), 3) == (2, 1, 0)


def test_decompose_index():
    for n in (1, 2, 3):
        for s in range(-7, 8):
            j, lam = decompose_index((s,), n)
            assert 1 <= j[0] <= n
            assert j[0] + n * lam[0] == s
    j, lam = decompose_index((0, 5), 2)
    assert j == (2, 1) and lam == (-1, 2)


def test_segment_expansion():
    a = QV.from_int(2)
    seg = Segment(a, 3)
    assert seg.expand(QV) == (a * QV.v_pow(-2), a, a * QV.v_pow(2))
    assert Segment(a, 1).expand(QV) == (a,)
    with pytest.raises(ValueError):
        Segment(a, 0)
    with pytest.raises(ValueError):
        Segment(QV.zero, 1)


def test_multisegment_canonical_order():
    a = QV.from_int(2)
    b = QV.from_int(3)
    s = Multisegment([Segment(b, 1), Segment(a, 2), Segment(a, 1)])
    lengths = [seg.length for seg in s]
    assert lengths == [2, 1, 1]
    assert s.wp() == (2, 1, 1)
    assert s.r == 4
    assert s == Multisegment([Segment(a, 1), Segment(b, 1), Segment(a, 2)])
    assert s.in_window(2)
    assert not s.in_window(1)


def test_multisegment_juxtapose():
    a = QV.from_int(2)
    s = Multisegment([Segment(a, 2)])
    assert s.juxtapose(QV) == (a * QV.v_inv, a * QV.v)
    empty = Multisegment([])
    assert empty.r == 0
    assert empty.juxtapose(QV) == ()


def test_multisegment_json_round_trip():
    a = QV.from_int(2) * QV.v
    s = Multisegment([Segment(a, 2), Segment(QV.from_int(5), 1)])
    assert Multisegment.from_json(s.to_json(), QV) == s


def test_multisegments_over_counts():
    a = QV.from_int(2)
    grid1 = [a]
    assert len(list(multisegments_over(2, grid1, 2))) == 2
    grid3 = [QV.from_int(q) for q in (2, 3, 5)]
    assert len(list(multisegments_over(4, grid3, 4))) == 51
    found = list(multisegments_over(0, grid3, 2))
    assert found == [Multisegment([])]
    for s in multisegments_over(3, grid3, 2):
        assert s.r == 3
        assert max(seg.length for seg in s) <= 2


def test_multisegments_over_no_duplicates():
    grid = [QV.from_int(q) for q in (2, 3)]
    found = list(multisegments_over(3, grid, 3))
    assert len(found) == len(set(found))
