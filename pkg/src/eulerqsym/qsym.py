"""Quasisymmetric functions in the fundamental basis and principal specializations."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .combinatorics import (
    compositions_of,
    descent_set,
    eps_word,
    lexmin_with_descent_set,
    shuffles,
)
from .poly import ONE, Poly, QRational, pochhammer, q
from .symfunc import NonSymmetricError, SymFunc, convert


def _descent_key(n, S):
    S = frozenset(S)
    if any(not 1 <= i <= n - 1 for i in S):
        raise ValueError(f"descent set {sorted(S)} not inside [{n - 1}]")
    return (n, S)


class QSymFunc:
    """Finite sum of fundamentals: ``{(n, S): coeff}`` meaning sum coeff * F_{S,n}.

    F_{S,n} is the sum of x_{i_1} ... x_{i_n} over i_1 >= i_2 >= ... >= i_n >= 1
    with i_j > i_{j+1} whenever j is in S, so that its stable principal
    specialization is q^(sum S) / (q;q)_n.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for (n, S), c in (coeffs or {}).items():
            c = Poly(c)
            if c:
                key = _descent_key(n, S)
                v = clean.get(key, Poly()) + c
                if v:
                    clean[key] = v
                else:
                    clean.pop(key, None)
        self.coeffs = clean

    @classmethod
    def F(cls, S, n):
        return cls({(n, frozenset(S)): 1})

    def items(self):
        return self.coeffs.items()

    def __add__(self, other):
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, Poly()) + c
        return QSymFunc(out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        return QSymFunc({key: v * c for key, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSymFunc):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = sorted(self.coeffs.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1])))
        return " + ".join(f"({c!r})*F[{n};{sorted(S)}]" for (n, S), c in terms)

    def to_monomial_qsym(self):
        """``{composition: coeff}`` in the monomial quasisymmetric basis."""
        out = {}
        for (n, S), c in self.coeffs.items():
            for alpha in fundamental_to_monomial(S, n):
                v = out.get(alpha, Poly()) + c
                if v:
                    out[alpha] = v
                else:
                    out.pop(alpha)
        return out

    def is_symmetric(self):
        try:
            self.to_symfunc()
        except NonSymmetricError:
            return False
        return True

    def to_symfunc(self):
        """The same function in the m basis; raises NonSymmetricError otherwise."""
        mono = self.to_monomial_qsym()
        out = {}
        for alpha, c in mono.items():
            lam = tuple(sorted(alpha, reverse=True))
            if lam in out:
                continue
            for beta in compositions_of(lam):
                if mono.get(beta, Poly()) != c:
                    raise NonSymmetricError(
                        f"coefficient of M{beta} is {mono.get(beta, 0)!r}, "
                        f"but M{alpha} has {c!r}"
                    )
            out[lam] = c
        return SymFunc("m", out)


def composition_from_set(T, n):
    """Composition of n whose partial sums are the elements of T."""
    cuts = [0] + sorted(T) + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def fundamental_to_monomial(S, n):
    """Compositions alpha with F_{S,n} = sum M_alpha.

    M_alpha = sum over i_1 < ... < i_l of x_{i_1}^alpha_1 ... x_{i_l}^alpha_l.
    The terms are the reversals of the compositions whose partial-sum set
    contains S.
    """
    _descent_key(n, S)
    if n == 0:
        return [()]
    free = [i for i in range(1, n) if i not in S]
    out = []
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            out.append(composition_from_set(set(S) | set(extra), n)[::-1])
    return out


def f_times_h(S, a, b):
    """F_{S,a} * h_b expanded in fundamentals through shuffles of a word with
    descent set S against the increasing word a+1, ..., a+b."""
    alpha = lexmin_with_descent_set(S, a)
    out = {}
    for sigma in shuffles(alpha, eps_word(a + 1, a + b)):
        key = (a + b, descent_set(sigma))
        out[key] = out.get(key, 0) + 1
    return QSymFunc(out)


# -- Schur functions and standard tableaux ----------------------------------


def standard_tableaux(lam):
    """Standard Young tableaux of shape ``lam`` as tuples of rows."""
    lam = tuple(lam)
    n = sum(lam)
    if n == 0:
        return [()]
    out = []
    # remove the cell holding n from each corner
    for r in range(len(lam)):
        if lam[r] and (r + 1 == len(lam) or lam[r + 1] < lam[r]):
            smaller = list(lam)
            smaller[r] -= 1
            smaller = tuple(x for x in smaller if x)
            for T in standard_tableaux(smaller):
                rows = [list(row) for row in T]
                if r == len(rows):
                    rows.append([])
                rows[r].append(n)
                out.append(tuple(tuple(row) for row in rows))
    return out


def tableau_descents(T):
    """i such that i+1 sits in a strictly lower row than i."""
    row_of = {v: r for r, row in enumerate(T) for v in row}
    n = len(row_of)
    return frozenset(i for i in range(1, n) if row_of[i + 1] > row_of[i])


@lru_cache(maxsize=None)
def _schur_fundamentals(lam):
    n = sum(lam)
    out = {}
    for T in standard_tableaux(lam):
        key = (n, tableau_descents(T))
        out[key] = out.get(key, 0) + 1
    return out


def schur_to_fundamental(lam):
    """s_lam = sum over standard tableaux T of F_{Des(T)}."""
    return QSymFunc(_schur_fundamentals(tuple(lam)))


def to_fundamental(f):
    """F-expansion of a symmetric function (through the Schur basis)."""
    out = {}
    for lam, c in convert(f, "s").coeffs.items():
        for key, k in _schur_fundamentals(lam).items():
            out[key] = out.get(key, Poly()) + c * k
    return QSymFunc(out)


def schur_expand(f):
    """Schur coefficients ``{lam: coeff}`` of a symmetric function or of a
    quasisymmetric function that is symmetric (NonSymmetricError if not)."""
    if isinstance(f, QSymFunc):
        f = f.to_symfunc()
    return dict(convert(f, "s").coeffs)


# -- principal specializations ----------------------------------------------


@lru_cache(maxsize=None)
def _ps_fundamental(S, n, m):
    """F_{S,n}(1, q, ..., q^(m-1)).

    Read right to left the index sequence is weakly increasing, with a strict
    rise across position n - s for each s in S.
    """
    if n == 0:
        return ONE
    if m <= 0:
        return Poly()
    S = frozenset(n - x for x in S)
    # ways[v] = generating polynomial of valid prefixes ending at value v
    ways = [Poly.monomial(q=v) for v in range(m)]
    for pos in range(1, n):
        strict = pos in S
        nxt = []
        acc = Poly()
        for v in range(m):
            if strict:
                nxt.append(acc.shift(q=v))
                acc = acc + ways[v]
            else:
                acc = acc + ways[v]
                nxt.append(acc.shift(q=v))
        ways = nxt
    total = Poly()
    for w in ways:
        total = total + w
    return total


@lru_cache(maxsize=None)
def _ps_monomial(lam, m):
    """m_lam(1, q, ..., q^(m-1)) by placing distinct parts at increasing positions."""
    counts = {}
    for a in lam:
        counts[a] = counts.get(a, 0) + 1
    values = sorted(counts)

    @lru_cache(maxsize=None)
    def go(pos, left):
        if not any(left):
            return ONE
        if pos == m or sum(left) > m - pos:
            return Poly()
        total = go(pos + 1, left)
        for a, c in enumerate(left):
            if c:
                rest = left[:a] + (c - 1,) + left[a + 1 :]
                total = total + go(pos + 1, rest).shift(q=values[a] * pos)
        return total

    return go(0, tuple(counts[v] for v in values))


def ps_m(f, m):
    """Principal specialization x_i = q^(i-1) for i <= m, x_i = 0 beyond."""
    if m < 0:
        raise ValueError("order must be nonnegative")
    if isinstance(f, QSymFunc):
        total = Poly()
        for (n, S), c in f.coeffs.items():
            total = total + c * _ps_fundamental(S, n, m)
        return total
    total = Poly()
    for lam, c in convert(f, "m").coeffs.items():
        total = total + c * _ps_monomial(lam, m)
    return total


def ps_fundamental(S, n, m):
    return _ps_fundamental(frozenset(S), n, m)


def q_factorial_denominator(n):
    """(q; q)_n."""
    return pochhammer(q, n)


def stable_ps_F(S, n):
    """Stable principal specialization of F_{S,n}: q^(sum S) / (q;q)_n."""
    _descent_key(n, S)
    return QRational(Poly.monomial(q=sum(S)), q_factorial_denominator(n))


def stable_ps(f):
    """Stable principal specialization of a homogeneous F-sum or symmetric function."""
    if not isinstance(f, QSymFunc):
        f = to_fundamental(f)
    degrees = {n for n, _ in f.coeffs}
    if len(degrees) > 1:
        raise ValueError("stable_ps expects a homogeneous function")
    n = degrees.pop() if degrees else 0
    num = Poly()
    for (_, S), c in f.coeffs.items():
        term = stable_ps_F(S, n)
        num = num + c * term.num
    return QRational(num, q_factorial_denominator(n))
