import itertools

import pytest

from dualramsey.orders import (
    EQ,
    GT,
    LT,
    Chain,
    ChainMap,
    InputError,
    cmp_alex_subsets,
    cmp_alex_tuples,
    enum_rigid_surjections,
    is_rigid_surjection,
    subset_alex_key,
)


def all_subsets(n):
    elems = range(1, n + 1)
    for r in range(n + 1):
        for c in itertools.combinations(elems, r):
            yield frozenset(c)


class TestAlexTuples:
    def test_last_coordinate_decides(self):
        assert cmp_alex_tuples((2, 1), (1, 3)) == LT

    def test_equal(self):
        assert cmp_alex_tuples((1, 2), (1, 2)) == EQ

    def test_inner_position_decides_when_last_ties(self):
        assert cmp_alex_tuples((3, 1, 1), (1, 2, 1)) == LT

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            cmp_alex_tuples((1, 2), (1, 2, 3))

    def test_out_of_range(self):
        with pytest.raises(InputError):
            cmp_alex_tuples((1, 5), (1, 2), chain=Chain(4))

    def test_trichotomy_and_transitivity_exhaustive(self):
        for n in range(1, 5):
            for length in range(1, 4):
                tuples = list(itertools.product(range(1, n + 1), repeat=length))
                for a, b in itertools.product(tuples, repeat=2):
                    c = cmp_alex_tuples(a, b)
                    assert c == -cmp_alex_tuples(b, a)
                    assert (c == EQ) == (a == b)
                keys = {t: tuple(reversed(t)) for t in tuples}
                ranked = sorted(tuples, key=keys.get)
                for x, y in zip(ranked, ranked[1:]):
                    assert cmp_alex_tuples(x, y) == LT


class TestAlexSubsets:
    def test_empty_is_least(self):
        assert cmp_alex_subsets(set(), {1}) == LT

    def test_known_pairs(self):
        assert cmp_alex_subsets({1, 2}, {2, 3}, chain=Chain(4)) == LT
        assert cmp_alex_subsets({1, 2}, {1, 2, 3}) == LT

    def test_subset_implies_less(self):
        for x in all_subsets(5):
            for y in all_subsets(5):
                if x < y:
                    assert cmp_alex_subsets(x, y) == LT

    def test_agrees_with_max_difference_rule(self):
        # the characteristic-vector order equals: x < y iff x is a proper
        # subset, or the largest element where they differ belongs to y
        for x in all_subsets(5):
            for y in all_subsets(5):
                if x == y:
                    assert cmp_alex_subsets(x, y) == EQ
                    continue
                if x < y:
                    expected = LT
                elif y < x:
                    expected = GT
                else:
                    expected = LT if max(x ^ y) in y else GT
                assert cmp_alex_subsets(x, y) == expected

    def test_trichotomy_and_transitivity_exhaustive(self):
        subs = list(all_subsets(4))
        for x, y in itertools.product(subs, repeat=2):
            c = cmp_alex_subsets(x, y)
            assert c == -cmp_alex_subsets(y, x)
            assert (c == EQ) == (x == y)
        ranked = sorted(subs, key=subset_alex_key)
        for x, y in zip(ranked, ranked[1:]):
            assert cmp_alex_subsets(x, y) == LT


class TestRigidSurjections:
    def test_collapse_first_two(self):
        assert is_rigid_surjection(ChainMap(Chain(4), Chain(3), (1, 1, 2, 3)))

    def test_collapse_last_two(self):
        assert is_rigid_surjection(ChainMap(Chain(4), Chain(3), (1, 2, 3, 3)))

    def test_min_preimages_out_of_order(self):
        assert not is_rigid_surjection(ChainMap(Chain(3), Chain(2), (2, 1, 2)))

    def test_not_surjective(self):
        assert not is_rigid_surjection(ChainMap(Chain(3), Chain(2), (1, 1, 1)))

    def test_matches_min_preimage_definition(self):
        for n in range(1, 6):
            for k in range(1, n + 1):
                for m in itertools.product(range(1, k + 1), repeat=n):
                    f = ChainMap(Chain(n), Chain(k), m)
                    surjective = set(m) == set(range(1, k + 1))
                    if surjective:
                        mins = [m.index(v) for v in range(1, k + 1)]
                        expected = mins == sorted(mins)
                    else:
                        expected = False
                    assert is_rigid_surjection(f) == expected

    def test_composition_closure(self):
        # composing two rigid surjections yields a rigid surjection
        for n1 in range(1, 6):
            for n2 in range(1, n1 + 1):
                for n3 in range(1, n2 + 1):
                    for f in enum_rigid_surjections(n1, n2):
                        for g in enum_rigid_surjections(n2, n3):
                            assert is_rigid_surjection(g.after(f))


class TestEnumRigidSurjections:
    def test_three_onto_two(self):
        assert [m.map for m in enum_rigid_surjections(3, 2)] == [
            (1, 1, 2),
            (1, 2, 1),
            (1, 2, 2),
        ]

    def test_bijective_case_is_identity(self):
        for n in range(1, 6):
            assert [m.map for m in enum_rigid_surjections(n, n)] == [
                tuple(range(1, n + 1))
            ]

    def test_onto_larger_is_empty(self):
        assert enum_rigid_surjections(2, 3) == []

    def test_matches_brute_force_filter(self):
        for n in range(1, 7):
            for k in range(1, 5):
                got = [m.map for m in enum_rigid_surjections(n, k)]
                assert len(set(got)) == len(got)
                assert got == sorted(got)
                if k <= n:
                    want = [
                        m
                        for m in itertools.product(range(1, k + 1), repeat=n)
                        if is_rigid_surjection(ChainMap(Chain(n), Chain(k), m))
                    ]
                    assert got == want
                else:
                    assert got == []
