"""Brute-force oracles that share no code with the package.

Symmetric functions are checked by evaluating at explicit rational points in
a few variables; quasisymmetric fundamentals by summing monomials directly.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product
from math import prod

from sympy import Matrix, Rational


def power_sum(k, xs):
    return sum(x**k for x in xs)


def complete(k, xs):
    return sum((prod(c) for c in combinations_with_replacement(xs, k)), Fraction(0)) if k else Fraction(1)


def elementary(k, xs):
    return sum((prod(c) for c in combinations(xs, k)), Fraction(0)) if k else Fraction(1)


def monomial(lam, xs):
    if len(lam) > len(xs):
        return Fraction(0)
    exps = tuple(lam) + (0,) * (len(xs) - len(lam))
    return sum((prod(x**a for x, a in zip(xs, e)) for e in set(permutations(exps))), Fraction(0))


def schur(lam, xs):
    """Bialternant formula; needs distinct xs."""
    n = len(xs)
    if len(lam) > n:
        return Fraction(0)
    lam = tuple(lam) + (0,) * (n - len(lam))
    num = Matrix(n, n, lambda i, j: Rational(xs[i]) ** (lam[j] + n - 1 - j))
    den = Matrix(n, n, lambda i, j: Rational(xs[i]) ** (n - 1 - j))
    r = num.det() / den.det()
    return Fraction(int(r.p), int(r.q))


_SINGLE = {"p": power_sum, "h": complete, "e": elementary}


def basis_value(basis, lam, xs):
    if basis in _SINGLE:
        return prod((_SINGLE[basis](k, xs) for k in lam), start=Fraction(1))
    if basis == "m":
        return monomial(lam, xs)
    return schur(lam, xs)


def poly_value(poly, qv=Fraction(2, 3), pv=Fraction(5, 7), tv=Fraction(3, 11)):
    return sum((Fraction(c) * qv**a * pv**b * tv**d for (a, b, d), c in poly.items()), Fraction(0))


def evaluate(f, xs, **vals):
    """Numeric value of a SymFunc at x = xs (q, p, t set to fixed rationals)."""
    return sum((poly_value(c, **vals) * basis_value(f.basis, lam, xs) for lam, c in f.items()), Fraction(0))


POINTS = [
    [Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5)],
    [Fraction(2, 3), Fraction(-1), Fraction(7), Fraction(3), Fraction(-1, 4)],
]


def fundamental_brute(S, n, xs):
    """F_{S,n}: i_1 >= ... >= i_n, strict where j is in S."""
    k = len(xs)
    total = Fraction(0)
    for seq in product(range(k), repeat=n):
        ok = all(seq[j] >= seq[j + 1] and (j + 1 not in S or seq[j] > seq[j + 1]) for j in range(n - 1))
        if ok:
            total += prod((xs[i] for i in seq), start=Fraction(1))
    return total


def descents(word):
    return {i for i in range(1, len(word)) if word[i - 1] > word[i]}


def cycle_lengths(sigma):
    seen, out = set(), []
    for i in range(1, len(sigma) + 1):
        if i not in seen:
            length, j = 0, i
            while j not in seen:
                seen.add(j)
                j = sigma[j - 1]
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def all_shuffles(u, v):
    if not u:
        return [tuple(v)]
    if not v:
        return [tuple(u)]
    return [(u[0],) + w for w in all_shuffles(u[1:], v)] + [(v[0],) + w for w in all_shuffles(u, v[1:])]
