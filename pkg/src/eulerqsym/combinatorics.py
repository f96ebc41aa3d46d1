"""Partitions, permutations and their statistics, shuffles of words.

Partitions are weakly decreasing tuples of positive ints, permutations are
one-line tuples of the values 1..n, descent sets are frozensets, and words
are tuples of distinct positive ints.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterator, NamedTuple


class InvalidShuffleError(ValueError):
    """Shuffle operands share a letter."""


# -- partitions -------------------------------------------------------------


def partition(parts) -> tuple[int, ...]:
    """Validate and return ``parts`` as a partition tuple."""
    parts = tuple(int(x) for x in parts)
    if any(x < 1 for x in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[a] < parts[a + 1] for a in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``n`` in reverse-lexicographic order, (n) first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def multiplicities(lam) -> dict[int, int]:
    """``{i: m_i}`` for the parts of ``lam``."""
    return dict(Counter(lam))


def z_lambda(lam) -> int:
    """Size of the centralizer of a permutation of cycle type ``lam``."""
    out = 1
    for i, m in Counter(lam).items():
        out *= i**m * factorial(m)
    return out


def split_fixed_points(lam) -> tuple[tuple[int, ...], int]:
    """Write ``lam = (mu, 1^k)`` with ``mu`` free of ones; return ``(mu, k)``."""
    mu = tuple(x for x in lam if x != 1)
    return mu, len(lam) - len(mu)


def compositions_of(lam) -> set[tuple[int, ...]]:
    """Distinct rearrangements of the parts of ``lam``."""
    return set(permutations(lam))


# -- permutations -----------------------------------------------------------


class PermStats(NamedTuple):
    exc: int
    Des: frozenset
    des: int
    maj: int
    cycle_type: tuple[int, ...]


def is_permutation(sigma) -> bool:
    return sorted(sigma) == list(range(1, len(sigma) + 1))


def _check(sigma):
    sigma = tuple(sigma)
    if not is_permutation(sigma):
        raise ValueError(f"not a permutation of 1..n: {sigma}")
    return sigma


def descent_set(word) -> frozenset:
    """Positions i (1-based) with word[i] > word[i+1]."""
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def maj(word) -> int:
    return sum(descent_set(word))


def excedances(sigma) -> int:
    return sum(1 for i, v in enumerate(sigma, 1) if v > i)


def cycle_type(sigma) -> tuple[int, ...]:
    n = len(sigma)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = sigma[x - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def stats(sigma) -> PermStats:
    sigma = _check(sigma)
    D = descent_set(sigma)
    return PermStats(excedances(sigma), D, len(D), sum(D), cycle_type(sigma))


def dex(sigma) -> frozenset:
    """Descent set of the word obtained by barring the excedance values of sigma.

    Barred letters sort below all unbarred ones, and among themselves by value.
    The sum of the result is maj(sigma) - exc(sigma).
    """
    sigma = _check(sigma)
    keyed = [(0, v) if v > i else (1, v) for i, v in enumerate(sigma, 1)]
    return descent_set(keyed)


def permutations_with_cycle_type(lam) -> Iterator[tuple[int, ...]]:
    """Each permutation of [n] with cycle type ``lam`` exactly once."""
    lam = partition(lam)
    n = sum(lam)
    sizes = Counter(lam)
    image = [0] * (n + 1)

    def place(remaining):
        if not remaining:
            yield tuple(image[1:])
            return
        first = remaining[0]
        rest = remaining[1:]
        for size in sorted(sizes, reverse=True):
            if not sizes[size]:
                continue
            sizes[size] -= 1
            for others in combinations(rest, size - 1):
                left = [x for x in rest if x not in others]
                # fix the smallest element first so each cycle appears once
                for order in permutations(others):
                    cycle = (first,) + order
                    for a in range(size):
                        image[cycle[a]] = cycle[(a + 1) % size]
                    yield from place(left)
            sizes[size] += 1

    yield from place(list(range(1, n + 1)))


def lexmin_with_descent_set(S, n) -> tuple[int, ...]:
    """Lexicographically least permutation of [n] whose descent set is ``S``."""
    S = set(S)
    if any(not 1 <= i < n for i in S):
        raise ValueError(f"descent set {sorted(S)} not inside [{n - 1}]")
    word = list(range(1, n + 1))
    i = 1
    while i < n:
        if i in S:
            j = i
            while j + 1 in S:
                j += 1
            word[i - 1 : j + 1] = reversed(word[i - 1 : j + 1])
            i = j + 1
        else:
            i += 1
    return tuple(word)


# -- words and shuffles -----------------------------------------------------


def eps_word(i: int, j: int) -> tuple[int, ...]:
    """The word i, i+1, ..., j; empty when i == j + 1."""
    if i > j + 1:
        raise ValueError(f"eps_word needs i <= j + 1, got i={i}, j={j}")
    return tuple(range(i, j + 1))


def shuffles(alpha, beta, star: bool = False) -> set[tuple[int, ...]]:
    """Interleavings of ``alpha`` and ``beta`` keeping both as subwords.

    With ``star`` only shuffles starting with ``alpha[0]`` are kept; for an
    empty ``alpha`` that set is empty unless ``beta`` is empty too.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if len(set(alpha)) != len(alpha) or len(set(beta)) != len(beta):
        raise InvalidShuffleError("words must have distinct letters")
    if set(alpha) & set(beta):
        raise InvalidShuffleError(f"letter sets of {alpha} and {beta} overlap")
    if star and not alpha:
        return {()} if not beta else set()
    n, a = len(alpha) + len(beta), len(alpha)
    out = set()
    for slots in combinations(range(n), a):
        if star and slots[0] != 0:
            continue
        word = [0] * n
        ia = ib = 0
        slot_set = set(slots)
        for pos in range(n):
            if pos in slot_set:
                word[pos] = alpha[ia]
                ia += 1
            else:
                word[pos] = beta[ib]
                ib += 1
        out.add(tuple(word))
    return out


def runs(word) -> int:
    """Number of maximal increasing runs: des + 1, and 0 for the empty word."""
    return len(descent_set(word)) + 1 if word else 0


def shuffle_count(a: int, b: int) -> int:
    return comb(a + b, a)
