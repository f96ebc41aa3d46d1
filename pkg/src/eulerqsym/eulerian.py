"""Builders for the cycle-type Eulerian quasisymmetric functions Q_{lam,j}.

Three routes are provided: the generating series for the aggregated Q_{n,j},
the single-cycle series plus plethysm for Q_{lam,j}, and direct enumeration
of permutations by their Dex sets.  All tables are stored in the Schur basis.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from sympy import Matrix
from sympy.functions.combinatorial.numbers import mobius

from .combinatorics import (
    dex,
    excedances,
    multiplicities,
    partition,
    partitions,
    permutations_with_cycle_type,
    split_fixed_points,
)
from .poly import Poly, t
from .qsym import QSymFunc
from .symfunc import IntegralityError, SymFunc, SymSeries, convert, h, mul_truncated, plethysm


@dataclass(frozen=True)
class QTable:
    """Q-values keyed by ``(index, j)``; index is a partition or a degree n."""

    n_max: int
    entries: dict = field(default_factory=dict)

    def row(self, index):
        js = sorted(j for (i, j) in self.entries if i == index)
        return [self.entries[(index, j)] for j in range(js[-1] + 1)] if js else []

    def indices(self):
        return sorted({i for i, _ in self.entries}, key=lambda x: (x if isinstance(x, int) else sum(x), x))


def _schur_integral(f):
    out = convert(f, "s")
    if not out.is_integral():
        raise IntegralityError(f"non-integral Schur expansion: {out!r}")
    return out


def _split_by_t(f, length):
    """List over j = 0..length-1 of the t^j coefficients, each in the Schur basis."""
    pieces = f.collect("t")
    if pieces and max(pieces) >= length:
        raise ValueError(f"t-degree {max(pieces)} exceeds expected range {length - 1}")
    return [_schur_integral(pieces[j]) if j in pieces else SymFunc.zero("s") for j in range(length)]


def t_range(r):
    """t + t^2 + ... + t^(r-1)."""
    return Poly({(0, 0, j): 1 for j in range(1, r)})


def ell(n):
    """Character of the Lie representation: (1/n) sum_{d | n} mu(d) p_d^(n/d)."""
    if n < 1:
        raise ValueError("ell needs n >= 1")
    coeffs = {}
    for d in range(1, n + 1):
        if n % d == 0 and mobius(d):
            coeffs[(d,) * (n // d)] = Fraction(int(mobius(d)), n)
    return SymFunc("p", coeffs)


def marked_sets_series(N):
    """sum_{r=2..N} (t + ... + t^(r-1)) h_r, the graded character of marked sets."""
    return SymFunc("h", {(r,): t_range(r) for r in range(2, N + 1)})


def complete_series(N):
    """H(z) = sum_{d=0..N} h_d."""
    return SymFunc("h", {(d,) if d else (): 1 for d in range(N + 1)})


@lru_cache(maxsize=None)
def _series_h(N):
    denom = SymSeries(marked_sets_series(N), N)
    return (SymSeries(complete_series(N), N) * denom.geometric()).func


def q_series(N, basis="s"):
    """Q_{n,j} for n <= N from H(z) (1 - sum_{r>=2} (t+...+t^(r-1)) h_r z^r)^{-1}."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    whole = _series_h(N)
    table = QTable(N)
    for n in range(N + 1):
        row = _split_by_t(whole.degree_part(n), max(n, 1))
        for j, f in enumerate(row):
            table.entries[(n, j)] = f if basis == "s" else convert(f, basis)
    return table


@lru_cache(maxsize=None)
def _single_cycle_series(N):
    """h_1 + sum_m ell_m[marked sets], through degree N, in the p basis."""
    inner = marked_sets_series(N)
    total = convert(h(1), "p") if N >= 1 else SymFunc.zero("p")
    for k in range(1, N // 2 + 1):
        total = total + plethysm(ell(k), inner, N)
    return total.truncate(N)


@lru_cache(maxsize=None)
def _single_cycle_p(n):
    return _single_cycle_series(n).degree_part(n)


def q_single_cycle(n):
    """[Q_{(n),0}, ..., Q_{(n),n-1}] (Schur basis); for n = 1 just [h_1]."""
    if n < 1:
        raise ValueError("q_single_cycle needs n >= 1")
    return _split_by_t(_single_cycle_p(n), n)


@lru_cache(maxsize=None)
def _q_lambda(lam):
    n = sum(lam)
    _, k = split_fixed_points(lam)
    gen = SymFunc.one("p")
    for i, mi in sorted(multiplicities(lam).items()):
        inner = _single_cycle_p(i)
        gen = mul_truncated(gen, plethysm(h(mi), inner), n)
    return tuple(_split_by_t(gen, n - k + 1))


def q_lambda(lam):
    """[Q_{lam,0}, ..., Q_{lam,n-k}] through plethysm of single-cycle series."""
    return list(_q_lambda(partition(lam)))


def dex_fundamentals(lam):
    """``{j: QSymFunc}`` summing F_{Dex(sigma)} over sigma of cycle type lam with exc j."""
    buckets = defaultdict(lambda: defaultdict(int))
    n = sum(lam)
    for sigma in permutations_with_cycle_type(lam):
        buckets[excedances(sigma)][(n, dex(sigma))] += 1
    return {j: QSymFunc(dict(b)) for j, b in buckets.items()}


def q_lambda_direct(lam):
    """[Q_{lam,0}, ..., Q_{lam,n-k}] by enumerating permutations of cycle type lam."""
    lam = partition(lam)
    n = sum(lam)
    _, k = split_fixed_points(lam)
    row = [SymFunc.zero("s") for _ in range(n - k + 1)]
    for j, F in dex_fundamentals(lam).items():
        row[j] = convert(F.to_symfunc(), "s")
    return row


def q_table(n_max, route="plethysm"):
    builder = {"plethysm": q_lambda, "direct": q_lambda_direct}[route]
    table = QTable(n_max)
    for n in range(n_max + 1):
        for lam in partitions(n):
            for j, f in enumerate(builder(lam)):
                table.entries[(lam, j)] = f
    return table


# -- raising operator on mark grids -------------------------------------------


@dataclass(frozen=True)
class MarkGrid:
    """Grid [a_1 - 1] x ... x [a_s - 1] graded by coordinate sum."""

    block_sizes: tuple

    def __post_init__(self):
        if any(a < 2 for a in self.block_sizes):
            raise ValueError(f"block sizes must be >= 2: {self.block_sizes}")

    @property
    def total(self):
        return sum(self.block_sizes)

    def points(self, grade):
        ranges = [range(1, a) for a in self.block_sizes]
        return [b for b in product(*ranges) if sum(b) == grade]

    def raising_matrix(self, j):
        """Matrix of phi: V_{j-1} -> V_j (rows index grade-j points)."""
        dom, cod = self.points(j - 1), self.points(j)
        where = {b: r for r, b in enumerate(cod)}
        rows = [[0] * len(dom) for _ in cod]
        for c, b in enumerate(dom):
            for i, a in enumerate(self.block_sizes):
                if b[i] <= a - 2:
                    up = b[:i] + (b[i] + 1,) + b[i + 1 :]
                    rows[where[up]][c] += 1
        return rows, dom, cod


@dataclass(frozen=True)
class RaisingResult:
    injective: bool
    rank: int
    domain_dim: int
    codomain_dim: int

    def __bool__(self):
        return self.injective


def raising_injectivity(block_sizes, j):
    """Check that raising one mark maps grade j-1 injectively into grade j."""
    grid = MarkGrid(tuple(block_sizes))
    if not 1 <= j <= grid.total / 2:
        raise ValueError(f"j={j} outside 1..{grid.total}/2")
    rows, dom, cod = grid.raising_matrix(j)
    rank = Matrix(rows).rank() if dom and cod else 0
    return RaisingResult(rank == len(dom), rank, len(dom), len(cod))
