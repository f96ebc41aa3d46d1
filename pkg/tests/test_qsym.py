from fractions import Fraction
from itertools import combinations, product
from math import prod

import pytest

from eulerqsym.combinatorics import partitions
from eulerqsym.poly import Poly, QRational, pochhammer, q
from eulerqsym.qsym import (
    QSymFunc,
    f_times_h,
    fundamental_to_monomial,
    ps_fundamental,
    ps_m,
    schur_expand,
    schur_to_fundamental,
    stable_ps,
    stable_ps_F,
    standard_tableaux,
    to_fundamental,
)
from eulerqsym.symfunc import NonSymmetricError, SymFunc, convert, h, s

from oracles import POINTS, evaluate, fundamental_brute

XS = POINTS[0][:4]


def subsets(n):
    for size in range(n):
        yield from (frozenset(c) for c in combinations(range(1, n), size))


def monomial_qsym_brute(alpha, xs):
    total = Fraction(0)
    for idx in combinations(range(len(xs)), len(alpha)):
        total += prod((xs[i] ** a for i, a in zip(idx, alpha)), start=Fraction(1))
    return total


@pytest.mark.parametrize("n", range(1, 5))
def test_fundamental_monomial_expansion(n):
    for S in subsets(n):
        got = sum(monomial_qsym_brute(a, XS) for a in fundamental_to_monomial(S, n))
        assert got == fundamental_brute(S, n, XS)


def test_extreme_fundamentals():
    # F_{emptyset,n} = h_n and F_{[n-1],n} = e_n
    for n in range(1, 5):
        assert QSymFunc.F(set(), n).to_symfunc() == convert(h(n), "m")
        assert QSymFunc.F(set(range(1, n)), n).to_symfunc() == convert(SymFunc("e", {(n,): 1}), "m")


def test_nonsymmetric_rejected():
    with pytest.raises(NonSymmetricError):
        QSymFunc.F({1}, 3).to_symfunc()
    assert not QSymFunc.F({1}, 3).is_symmetric()
    with pytest.raises(ValueError):
        QSymFunc.F({3}, 3)


@pytest.mark.parametrize("lam", [(3,), (2, 1), (1, 1, 1), (3, 1), (2, 2), (3, 2), (2, 2, 1), (4, 2)])
def test_schur_fundamental_expansion(lam):
    F = schur_to_fundamental(lam)
    n = sum(lam)
    value = sum(c.constant() * fundamental_brute(S, m_, XS) for (m_, S), c in F.items())
    if n <= 4:
        assert value == evaluate(s(*lam), XS)
    assert F.to_symfunc() == convert(s(*lam), "m")
    assert schur_expand(F) == {lam: Poly(1)}


def test_standard_tableaux_counts():
    # hook length formula values
    assert len(standard_tableaux((3, 2))) == 5
    assert len(standard_tableaux((3, 2, 1))) == 16
    assert len(standard_tableaux((4, 2, 1))) == 35


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_f_times_h_against_evaluation(a, b):
    for S in subsets(a):
        lhs = fundamental_brute(S, a, XS) * evaluate(h(b), XS)
        rhs = sum(c.constant() * fundamental_brute(T, m_, XS) for (m_, T), c in f_times_h(S, a, b).items())
        assert lhs == rhs


def ps_brute(S, n, m):
    total = Poly()
    for seq in product(range(m), repeat=n):
        if all(seq[j] >= seq[j + 1] and (j + 1 not in S or seq[j] > seq[j + 1]) for j in range(n - 1)):
            total = total + Poly.monomial(q=sum(seq))
    return total


@pytest.mark.parametrize("n", range(0, 5))
@pytest.mark.parametrize("m", range(0, 4))
def test_ps_fundamental_brute(n, m):
    for S in subsets(n) if n else [frozenset()]:
        assert ps_fundamental(S, n, m) == (ps_brute(S, n, m) if n else Poly(1))


@pytest.mark.parametrize("n", range(1, 5))
def test_ps_m_homomorphism_and_routes(n):
    for lam in partitions(n):
        f = s(*lam)
        for m in range(4):
            assert ps_m(f, m) == ps_m(to_fundamental(f), m)
            assert ps_m(f * h(1), m) == ps_m(f, m) * ps_m(h(1), m)


def test_ps_m_h_is_gaussian():
    # h_k(1, q, ..., q^(m-1)) = [m+k-1 choose k]_q
    for m in range(1, 5):
        for k in range(4):
            num = pochhammer(q, m + k - 1)
            den = pochhammer(q, k) * pochhammer(q, m - 1)
            gauss = QRational(num, den).to_poly()
            assert ps_m(h(k) if k else SymFunc.one("h"), m) == gauss


def test_stable_ps_F():
    assert stable_ps_F({1, 2}, 3) == QRational(q**3, pochhammer(q, 3))


def hook_content_ps(lam):
    # ps(s_lam) = q^{b(lam)} / prod over cells of (1 - q^hook)
    b = sum(i * part for i, part in enumerate(lam))
    conj = [sum(1 for part in lam if part > j) for j in range(lam[0])]
    den = Poly(1)
    for i, part in enumerate(lam):
        for j in range(part):
            den = den * (1 - q ** (part - j + conj[j] - i - 1))
    return QRational(q**b, den)


@pytest.mark.parametrize("n", range(1, 7))
def test_stable_ps_hook_content(n):
    for lam in partitions(n):
        assert stable_ps(s(*lam)) == hook_content_ps(lam)


def test_qsym_arithmetic():
    a = QSymFunc.F({1}, 2)
    b = QSymFunc.F(set(), 2)
    assert (a + b) - b == a
    assert (a * 3).coeffs[(2, frozenset({1}))] == 3
    assert not (a - a)


@pytest.mark.parametrize("n", [5, 6])
def test_schur_expand_of_tableau_sum(n):
    for lam in partitions(n):
        assert schur_expand(schur_to_fundamental(lam)) == {lam: Poly(1)}


@pytest.mark.parametrize("n", [5, 6])
def test_ps_m_products_high(n):
    for a in range(1, n):
        for lam in partitions(a):
            for mu in partitions(n - a):
                f, g = s(*lam), s(*mu)
                for m in range(5):
                    assert ps_m(f * g, m) == ps_m(f, m) * ps_m(g, m)
