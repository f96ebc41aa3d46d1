from itertools import combinations, permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerqsym.combinatorics import (
    InvalidShuffleError,
    compositions_of,
    cycle_type,
    descent_set,
    dex,
    eps_word,
    excedances,
    lexmin_with_descent_set,
    maj,
    multiplicities,
    partition,
    partitions,
    permutations_with_cycle_type,
    runs,
    shuffles,
    split_fixed_points,
    stats,
    z_lambda,
)

from oracles import all_shuffles, cycle_lengths, descents

# number of partitions of n, n = 0..10
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("n", range(11))
def test_partition_counts(n):
    parts = list(partitions(n))
    assert len(parts) == PARTITION_COUNTS[n]
    assert len(set(parts)) == len(parts)
    assert all(sum(lam) == n and partition(lam) == lam for lam in parts)
    assert parts == sorted(parts, reverse=True)


def test_partition_validation():
    with pytest.raises(ValueError):
        partition((1, 2))
    with pytest.raises(ValueError):
        partition((2, 0))


def test_small_helpers():
    assert multiplicities((3, 1, 1)) == {3: 1, 1: 2}
    assert z_lambda((2, 2, 1)) == 8
    assert split_fixed_points((3, 2, 1, 1)) == ((3, 2), 2)
    assert compositions_of((2, 1, 1)) == {(2, 1, 1), (1, 2, 1), (1, 1, 2)}


def test_stats_hand_example():
    st_ = stats((3, 1, 2))
    assert st_.Des == frozenset({1}) and st_.des == 1 and st_.maj == 1
    assert st_.exc == 1 and st_.cycle_type == (3,)


def test_non_permutation_rejected():
    with pytest.raises(ValueError):
        stats((1, 1, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_statistics_against_oracle(n):
    for sigma in permutations(range(1, n + 1)):
        assert descent_set(sigma) == descents(sigma)
        assert maj(sigma) == sum(descents(sigma))
        assert excedances(sigma) == sum(v > i for i, v in enumerate(sigma, 1))
        assert cycle_type(sigma) == cycle_lengths(sigma)


@pytest.mark.parametrize("n", range(1, 8))
def test_dex_sum_is_maj_minus_exc(n):
    for sigma in permutations(range(1, n + 1)):
        D = dex(sigma)
        assert sum(D) == maj(sigma) - excedances(sigma)
        assert all(1 <= i < n for i in D)


@pytest.mark.parametrize("n", range(1, 8))
def test_cycle_type_enumeration(n):
    seen = set()
    for lam in partitions(n):
        perms = list(permutations_with_cycle_type(lam))
        assert len(perms) == factorial(n) // z_lambda(lam)
        assert all(cycle_lengths(s_) == lam for s_ in perms)
        seen.update(perms)
    assert len(seen) == factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_lexmin_descent_set(n):
    best = {}
    for sigma in permutations(range(1, n + 1)):
        best.setdefault(frozenset(descents(sigma)), sigma)
    for size in range(n):
        for S in combinations(range(1, n), size):
            assert lexmin_with_descent_set(S, n) == best[frozenset(S)]


def test_eps_word():
    assert eps_word(3, 5) == (3, 4, 5)
    assert eps_word(4, 3) == ()
    with pytest.raises(ValueError):
        eps_word(5, 3)


@given(st.integers(0, 4), st.integers(0, 4))
@settings(max_examples=40, deadline=None)
def test_shuffles_against_oracle(a, b):
    alpha = tuple(range(a, 0, -1))
    beta = tuple(range(a + 1, a + b + 1))
    got = shuffles(alpha, beta)
    assert got == set(all_shuffles(alpha, beta))
    assert len(got) == comb(a + b, a)
    star = shuffles(alpha, beta, star=True)
    if a:
        assert star == {w for w in got if w[0] == alpha[0]}
        assert len(star) == comb(a + b - 1, b)
    else:
        assert star == ({()} if not b else set())


def test_shuffle_overlap_rejected():
    with pytest.raises(InvalidShuffleError):
        shuffles((1, 2), (2, 3))


def test_runs():
    assert runs(()) == 0
    assert runs((1, 2, 3)) == 1
    assert runs((3, 1, 2)) == 2
