"""Cycle-type (q,p)-Eulerian polynomials.

``a_lambda_direct`` enumerates permutations; ``a_lambda_specialized`` goes
through principal specializations of Q_{mu,j} h_{k-i}, either as a
p-series certified by a vanishing window or by the shuffle closed form
applied to the fundamental expansion of Q_{mu,j}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import (
    eps_word,
    lexmin_with_descent_set,
    maj,
    partition,
    partitions,
    permutations_with_cycle_type,
    runs,
    shuffles,
    split_fixed_points,
    stats,
)
from .eulerian import q_lambda
from .poly import Poly, p, pochhammer, q
from .qsym import ps_m, to_fundamental
from .symfunc import SymFunc, h


class DecompositionError(ValueError):
    """Partition cannot be split as (mu, 1^k) as required."""


class SeriesNotStabilizedError(ArithmeticError):
    """Truncated p-series failed its vanishing-window certificate."""


@dataclass(frozen=True)
class AQPPoly:
    """Coefficients a_{lam,j}(q,p) of t^j, j = 0..n-k."""

    lam: tuple
    coeffs: tuple

    def __getitem__(self, j):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Poly()

    def __len__(self):
        return len(self.coeffs)

    def to_dict(self):
        entries = [
            {"j": j, "terms": [{"q": a, "p": b, "c": c} for (a, b, _), c in poly.terms()]}
            for j, poly in enumerate(self.coeffs)
        ]
        return {"lambda": list(self.lam), "entries": entries}

    @classmethod
    def from_dict(cls, data):
        coeffs = tuple(
            Poly({(term["q"], term["p"], 0): term["c"] for term in entry["terms"]})
            for entry in sorted(data["entries"], key=lambda e: e["j"])
        )
        return cls(tuple(data["lambda"]), coeffs)

    def dumps(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def a_lambda_direct(lam):
    """sum over sigma of cycle type lam of q^(maj-exc) p^des t^exc, split by exc."""
    lam = partition(lam)
    n = sum(lam)
    _, k = split_fixed_points(lam)
    acc = [dict() for _ in range(n - k + 1)]
    for sigma in permutations_with_cycle_type(lam):
        st = stats(sigma)
        key = (st.maj - st.exc, st.des, 0)
        acc[st.exc][key] = acc[st.exc].get(key, 0) + 1
    return AQPPoly(lam, tuple(Poly(d) for d in acc))


def _decompose(lam):
    lam = partition(lam)
    mu, k = split_fixed_points(lam)
    if any(x == 1 for x in mu):
        raise DecompositionError(f"{lam} does not split as (mu, 1^k)")
    return lam, mu, k


def _q_mu(mu):
    return q_lambda(mu) if mu else [SymFunc.one("s")]


@lru_cache(maxsize=None)
def shuffle_closed_form(S, a, k):
    """sum_{i=0..k} sum_{sigma in sh*(alpha, eps(a+1, a+k-i))} (p q^i)^(des+1) q^maj.

    ``alpha`` is the lexicographically least permutation of [a] with descent
    set S.  The empty word contributes 1.
    """
    alpha = lexmin_with_descent_set(S, a)
    total = Poly()
    for i in range(k + 1):
        weight = p * q**i
        for sigma in shuffles(alpha, eps_word(a + 1, a + k - i), star=True):
            total = total + (weight ** runs(sigma)).shift(q=maj(sigma))
    return total


def _closed_form_coefficient(Q, a, k):
    total = Poly()
    for (deg, S), c in to_fundamental(Q).items():
        if deg != a:
            raise ValueError(f"expected degree {a}, found {deg}")
        total = total + c * shuffle_closed_form(S, a, k)
    return total


def specialization_series(funcs, n, bound=None):
    """(p;q)_{n+1} sum_{m=0..bound} p^m sum_i q^(i m) ps_m(funcs[i]), certified.

    ``funcs[i]`` is the function paired with q^(i m), or a tuple of factors
    whose specializations get multiplied.  The series is carried to p-degree
    ``bound`` (default 2n+2) and all coefficients of p-degree in (n, bound]
    must vanish; the p-degree <= n part is returned.
    """
    if bound is None:
        bound = 2 * n + 2
    series = Poly()
    for mdeg in range(bound + 1):
        inner = Poly()
        for i, f in enumerate(funcs):
            if f is None:
                continue
            if isinstance(f, tuple):
                value = Poly(1)
                for factor in f:
                    value = value * ps_m(factor, mdeg)
            else:
                value = ps_m(f, mdeg)
            inner = inner + value.shift(q=i * mdeg)
        series = series + inner.shift(p=mdeg)
    product = (pochhammer(p, n + 1) * series).truncate("p", bound)
    tail = Poly({key: c for key, c in product.items() if key[1] > n})
    if tail:
        raise SeriesNotStabilizedError(f"p-degrees ({n}, {bound}] not zero: {tail!r}")
    return product


def _series_coefficient(Q, k, n):
    funcs = [Q * h(k - i) for i in range(k + 1)]
    return specialization_series(funcs, n)


def a_lambda_specialized(lam, route="closed-form"):
    """a_{lam,j}(q,p) from Q_{mu,j} h_{k-i} with lam = (mu, 1^k)."""
    lam, mu, k = _decompose(lam)
    n = sum(lam)
    a = n - k
    coeffs = []
    for Q in _q_mu(mu):
        if not Q:
            coeffs.append(Poly())
        elif route == "closed-form":
            coeffs.append(_closed_form_coefficient(Q, a, k))
        elif route == "series":
            coeffs.append(_series_coefficient(Q, k, n))
        else:
            raise ValueError(f"unknown route {route!r}")
    return AQPPoly(lam, tuple(coeffs))


def eulerian_polynomial(n):
    """Eulerian numbers a_{n,0..n-1} by summing a_{lam,j}(1,1) over lam |- n."""
    if n == 0:
        return [1]
    out = [0] * n
    for lam in partitions(n):
        A = a_lambda_direct(lam)
        for j, c in enumerate(A.coeffs):
            if c:
                out[j] += c.subs(q=1, p=1).constant()
    return out


def p_one_specialization(A):
    """a_{lam,j}(q, 1) for every j."""
    return [c.subs(p=1) for c in A.coeffs]
