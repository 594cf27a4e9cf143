from itertools import combinations

import pytest

from tautring.partitions import (
    Partition,
    act,
    chain_range,
    compose,
    complement,
    enumerate_partitions,
    is_crossing,
    oriented_pair,
    proper_subsets,
)
from tautring.symmetry import all_permutations


@pytest.mark.parametrize("d", range(1, 7))
def test_partition_count(d):
    assert len(enumerate_partitions(d)) == 2 ** (d - 1) - 1


@pytest.mark.parametrize("d", range(2, 6))
def test_crossing_symmetric_and_irreflexive(d):
    parts = enumerate_partitions(d)
    for P in parts:
        assert not is_crossing(P, P)
        for Q in parts:
            assert is_crossing(P, Q) == is_crossing(Q, P)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_no_crossings_below_four(d):
    parts = enumerate_partitions(d)
    assert not any(is_crossing(P, Q) for P in parts for Q in parts)


def test_d4_crossing_example():
    assert is_crossing(Partition((1, 2), 4), Partition((1, 3), 4))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_action_is_a_left_action(d):
    group = all_permutations(d)
    for P in enumerate_partitions(d):
        for s in group:
            for t in group:
                assert act(compose(s, t), P) == act(s, act(t, P))


@pytest.mark.parametrize("d", [3, 4, 5])
@pytest.mark.parametrize("inclusive", [False, True])
def test_chain_is_subset_interval(d, inclusive):
    parts = enumerate_partitions(d)
    for P in parts:
        for Q in parts:
            if P == Q or is_crossing(P, Q):
                continue
            h, hp = oriented_pair(P, Q)
            low, high = set(complement(hp, d)), set(h)
            got = set()
            for R in chain_range(P, Q, inclusive):
                s = next(s for s in R.sides if low <= set(s) <= high)
                got.add(frozenset(s))
            mid = sorted(high - low)
            want = set()
            for k in range(len(mid) + 1):
                if not inclusive and k in (0, len(mid)):
                    continue
                for c in combinations(mid, k):
                    want.add(frozenset(low | set(c)))
            assert got == want


def test_proper_subsets_strict_nonempty():
    assert proper_subsets((1, 2, 3)) == [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]
    assert proper_subsets((4,)) == []


def test_partition_sides_and_parse():
    P = Partition((2, 3), 3)
    assert set(P.sides) == {(1,), (2, 3)}
    assert P.opposite((2, 3)) == (1,)
    assert Partition.parse(str(P)) == P
