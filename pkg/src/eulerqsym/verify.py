"""Exhaustive instance checks for the Eulerian quasisymmetric identities.

Each check returns a :class:`Verdict`; failures always carry a witness.
Checks take precomputed rows as optional arguments so that they can be
run against perturbed data.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations, combinations_with_replacement, permutations
from math import comb

from .combinatorics import (
    eps_word,
    maj,
    partitions,
    runs,
    shuffles,
    split_fixed_points,
)
from .eulerian import ell, q_lambda, q_lambda_direct, q_series, q_single_cycle, raising_injectivity
from .poly import Poly, QRational, p, pochhammer, q
from .qp import (
    SeriesNotStabilizedError,
    a_lambda_direct,
    a_lambda_specialized,
    eulerian_polynomial,
    shuffle_closed_form,
    specialization_series,
)
from .qsym import QSymFunc, stable_ps
from .symfunc import SymFunc, convert, h, mul_truncated, plethysm, s

# refuse bounds beyond these; permutation sweeps are factorial
LIMITS = {
    "thm1": 9,
    "routes": 9,
    "thm2": 8,
    "p1": 8,
    "lemma-shuffle": 6,
    "fund-prop": 8,
    "cadogan": 12,
    "raising": 14,
    "eulerian": 9,
}


@dataclass
class Verdict:
    claim: str
    instance: dict
    passed: bool
    witness: dict | None = None
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, timings=False):
        out = asdict(self)
        if not timings:
            out.pop("elapsed")
        return out

    def sort_key(self):
        return (self.claim, json.dumps(self.instance, sort_keys=True))


def _verdict(claim, instance, fn):
    """Run ``fn`` (returning a witness dict or None) and wrap it as a Verdict."""
    start = time.perf_counter()
    try:
        witness = fn()
    except (ArithmeticError, ValueError) as exc:
        witness = {"error": f"{type(exc).__name__}: {exc}"}
    elapsed = time.perf_counter() - start
    return Verdict(claim, instance, witness is None, witness, elapsed)


def _lam(lam):
    return {"lambda": list(lam)}


def _negative_schur(f):
    for lam, c in sorted(convert(f, "s").items(), reverse=True):
        for key, v in c.terms():
            if v < 0:
                return {"partition": list(lam), "exponents": list(key), "coeff": str(v)}
    return None


def _poly_witness(poly):
    for key, v in poly.terms():
        if v < 0:
            return {"exponents": list(key), "coeff": str(v)}
    return None


def _row_difference(a, b):
    """First index where two rows of symmetric functions differ."""
    for j in range(max(len(a), len(b))):
        x = a[j] if j < len(a) else SymFunc.zero("s")
        y = b[j] if j < len(b) else SymFunc.zero("s")
        if x != y:
            diff = convert(x - y, "s")
            lam = max(diff.coeffs)
            return {"j": j, "partition": list(lam), "difference": repr(diff.coeff(lam))}
    return None


# -- Schur positivity and unimodality -----------------------------------------


def check_schur_theorem(lam, row=None):
    """Q_{lam,j} Schur-positive, Schur-unimodal up to the centre, and symmetric."""
    lam = tuple(lam)

    def run():
        Q = q_lambda(lam) if row is None else row
        n = sum(lam)
        _, k = split_fixed_points(lam)
        top = n - k
        for j, f in enumerate(Q):
            if j > top and f:
                return {"support": j, "bound": top}
            if (w := _negative_schur(f)) is not None:
                return {"part": "positivity", "j": j, **w}
        for j in range(1, top // 2 + 1):
            if (w := _negative_schur(Q[j] - Q[j - 1])) is not None:
                return {"part": "unimodality", "j": j, **w}
        for j in range(top + 1):
            if Q[j] != Q[top - j]:
                return {"part": "symmetry", "j": j, "mirror": top - j}
        return None

    return _verdict("thm1", _lam(lam), run)


def check_routes(lam, plethysm_row=None, direct_row=None):
    """Plethysm and Dex-enumeration routes give identical Schur expansions."""
    lam = tuple(lam)

    def run():
        a = q_lambda(lam) if plethysm_row is None else plethysm_row
        b = q_lambda_direct(lam) if direct_row is None else direct_row
        return _row_difference(a, b)

    return _verdict("routes", _lam(lam), run)


def check_series_aggregate(n, rows=None, series_row=None):
    """sum over lam |- n of Q_{lam,j} equals the series coefficient Q_{n,j}."""

    def run():
        table = rows or {lam: q_lambda(lam) for lam in partitions(n)}
        target = series_row or q_series(n).row(n)
        total = []
        for j in range(len(target)):
            acc = SymFunc.zero("s")
            for r in table.values():
                if j < len(r):
                    acc = acc + r[j]
            total.append(acc)
        extra = [j for r in table.values() for j in range(len(target), len(r)) if r[j]]
        if extra:
            return {"j": extra[0], "reason": "nonzero beyond series range"}
        return _row_difference(total, target)

    return _verdict("routes-series", {"n": n}, run)


# -- (q,p)-Eulerian unimodality ------------------------------------------------


def check_qp_theorem(lam, A=None):
    """a_{lam,j} - a_{lam,j-1} in N[q,p] up to the centre, and t-symmetry."""
    lam = tuple(lam)

    def run():
        poly = a_lambda_direct(lam) if A is None else A
        n = sum(lam)
        _, k = split_fixed_points(lam)
        top = n - k
        for j in range(len(poly)):
            if (w := _poly_witness(poly[j])) is not None:
                return {"part": "nonnegativity", "j": j, **w}
        for j in range(1, top // 2 + 1):
            if (w := _poly_witness(poly[j] - poly[j - 1])) is not None:
                return {"part": "unimodality", "j": j, **w}
        for j in range(top + 1):
            if poly[j] != poly[top - j]:
                return {"part": "symmetry", "j": j, "mirror": top - j}
        return None

    return _verdict("thm2", _lam(lam), run)


def check_qp_routes(lam, A=None):
    """Direct enumeration equals both specialization routes."""
    lam = tuple(lam)

    def run():
        direct = a_lambda_direct(lam) if A is None else A
        for route in ("closed-form", "series"):
            other = a_lambda_specialized(lam, route)
            for j in range(max(len(direct), len(other))):
                if direct[j] != other[j]:
                    return {"route": route, "j": j, "direct": repr(direct[j]), "other": repr(other[j])}
        return None

    return _verdict("thm2-routes", _lam(lam), run)


def check_p_one(lam, A=None, row=None):
    """a_{lam,j}(q,1) = (q;q)_n ps(Q_{lam,j}) with exact cancellation."""
    lam = tuple(lam)

    def run():
        poly = a_lambda_direct(lam) if A is None else A
        Q = q_lambda(lam) if row is None else row
        n = sum(lam)
        for j in range(max(len(poly), len(Q))):
            lhs = poly[j].subs(p=1)
            if j < len(Q) and Q[j]:
                rhs = (QRational(pochhammer(q, n)) * stable_ps(Q[j])).to_poly()
            else:
                rhs = Poly()
            if lhs != rhs:
                return {"j": j, "lhs": repr(lhs), "rhs": repr(rhs)}
        return None

    return _verdict("p1", _lam(lam), run)


# -- shuffle lemma and the fundamental proposition ----------------------------


def _shuffle_sum(alpha, word, weight, star):
    total = Poly()
    for sigma in shuffles(alpha, word, star=star):
        total = total + (weight ** runs(sigma)).shift(q=maj(sigma))
    return total


def check_shuffle_lemma(m, k, r):
    """Both sides of the shuffle identity agree for every alpha in S_m."""

    def run():
        if r > k:
            raise ValueError("need r <= k")
        for alpha in permutations(range(1, m + 1)):
            lhs = rhs = Poly()
            for i in range(r, k + 1):
                word = eps_word(m + 1, m + k - i)
                weight = p * q**i
                lhs = lhs + pochhammer(p * q**r, i - r) * _shuffle_sum(alpha, word, weight, False)
                rhs = rhs + _shuffle_sum(alpha, word, weight, True)
            if lhs != rhs:
                return {"alpha": list(alpha), "difference": repr(lhs - rhs)}
        return None

    return _verdict("lemma-shuffle", {"m": m, "k": k, "r": r}, run)


def check_fund_prop(n, k, S):
    """Certified series value of F_{S,n-k} h_{k-i} equals the shuffle closed form in N[q,p]."""
    S = frozenset(S)

    def run():
        a = n - k
        F = QSymFunc.F(S, a)
        funcs = [(F, h(k - i)) for i in range(k + 1)]
        try:
            series = specialization_series(funcs, n)
        except SeriesNotStabilizedError as exc:
            return {"certificate": str(exc)}
        closed = shuffle_closed_form(S, a, k)
        if series != closed:
            return {"series": repr(series), "closed": repr(closed)}
        if (w := _poly_witness(closed)) is not None:
            return {"part": "N[q,p]", **w}
        return None

    return _verdict("fund-prop", {"n": n, "k": k, "S": sorted(S)}, run)


# -- Lie characters ------------------------------------------------------------


def cadogan_sides(N):
    """(sum_n h_n[sum_m ell_m], sum_d h_1^d), both through degree N, in the p basis."""
    lie = SymFunc.zero("p")
    for m_ in range(1, N + 1):
        lie = lie + ell(m_)
    lhs = SymFunc.one("p")
    for n_ in range(1, N + 1):
        lhs = lhs + plethysm(h(n_), lie, N)
    h1 = convert(h(1), "p")
    rhs, power = SymFunc.one("p"), SymFunc.one("p")
    for _ in range(N):
        power = mul_truncated(power, h1, N)
        rhs = rhs + power
    return lhs, rhs


def check_cadogan(N):
    """Degreewise equality through degree N."""

    def run():
        lhs, rhs = cadogan_sides(N)
        for d in range(N + 1):
            if lhs.degree_part(d) != rhs.degree_part(d):
                return {"degree": d, "difference": repr(convert(lhs.degree_part(d) - rhs.degree_part(d), "s"))}
        return None

    return _verdict("cadogan", {"N": N}, run)


def check_raising(block_sizes, j):
    def run():
        res = raising_injectivity(block_sizes, j)
        if not res.injective:
            return {"rank": res.rank, "domain_dim": res.domain_dim}
        return None

    return _verdict("raising", {"blocks": list(block_sizes), "j": j}, run)


def eulerian_number(n, j):
    """Closed form sum_i (-1)^i C(n+1, i) (j+1-i)^n, independent of any enumeration."""
    return sum((-1) ** i * comb(n + 1, i) * (j + 1 - i) ** n for i in range(j + 1))


def check_eulerian(n):
    """q=p=1 aggregation gives the Eulerian numbers; symmetric and unimodal."""

    def run():
        got = eulerian_polynomial(n)
        want = [eulerian_number(n, j) for j in range(n)] if n else [1]
        if got != want:
            return {"got": got, "want": want}
        if got != got[::-1]:
            return {"part": "symmetry", "got": got}
        half = (len(got) - 1) // 2
        if any(got[i] > got[i + 1] for i in range(half)):
            return {"part": "unimodality", "got": got}
        return None

    return _verdict("eulerian", {"n": n}, run)


def spot_values():
    """Pinned regression values as (name, computed, expected)."""
    q6 = q_single_cycle(6)[3]
    l3_h2 = convert(plethysm(ell(3), h(2)), "s")
    expected_q6 = convert(h(6) + h(4, 2) + h(3, 3), "s") + l3_h2
    q4 = q_single_cycle(4)
    a21 = a_lambda_direct((2, 1))[1]
    return [
        ("Q_(1),0 = h_1", q_lambda((1,))[0], convert(h(1), "s")),
        ("Q_(6),3 = h_6 + h_4h_2 + h_3^2 + ell_3[h_2]", q6, expected_q6),
        ("Q_(4),2 - Q_(4),1 = s_31", q4[2] - q4[1], s(3, 1)),
        ("a_(2,1),1 = p + pq + p^2q^2", a21, p + p * q + p**2 * q**2),
    ]


def check_spot_values():
    def run():
        for name, got, want in spot_values():
            if got != want:
                return {"value": name, "got": repr(got), "want": repr(want)}
        return None

    return _verdict("spot", {}, run)


# -- sweeps ------------------------------------------------------------------


def _partitions_upto(n):
    for d in range(1, n + 1):
        yield from partitions(d)


def block_multisets(total):
    """Multisets of block sizes >= 2 with sum <= total."""
    out = []
    for count in range(1, total // 2 + 1):
        for blocks in combinations_with_replacement(range(2, total + 1), count):
            if sum(blocks) <= total:
                out.append(tuple(sorted(blocks, reverse=True)))
    return sorted(set(out))


def _sweep_thm1(b):
    return [check_schur_theorem(lam) for lam in _partitions_upto(b)]


def _sweep_routes(b):
    out = [check_routes(lam) for lam in _partitions_upto(b)]
    out += [check_series_aggregate(n) for n in range(1, b + 1)]
    return out


def _sweep_thm2(b):
    out = []
    for lam in _partitions_upto(b):
        A = a_lambda_direct(lam)
        out.append(check_qp_theorem(lam, A))
        out.append(check_qp_routes(lam, A))
    return out


def _sweep_p1(b):
    return [check_p_one(lam) for lam in _partitions_upto(b)]


def _sweep_lemma(b):
    m_max, k_max = b if isinstance(b, tuple) else (b, b)
    return [
        check_shuffle_lemma(m_, k, r)
        for m_ in range(m_max + 1)
        for k in range(k_max + 1)
        for r in range(k + 1)
    ]


def _sweep_fund(b):
    out = []
    for n in range(b + 1):
        for k in range(n + 1):
            a = n - k
            universe = range(1, a)
            for size in range(len(universe) + 1):
                for S in combinations(universe, size):
                    out.append(check_fund_prop(n, k, S))
    return out


def _sweep_cadogan(b):
    return [check_cadogan(N) for N in range(b + 1)]


def _sweep_raising(b):
    out = []
    for blocks in block_multisets(b):
        for j in range(1, sum(blocks) // 2 + 1):
            out.append(check_raising(blocks, j))
    return out


def _sweep_eulerian(b):
    return [check_eulerian(n) for n in range(1, b + 1)]


SUITES = {
    "thm1": _sweep_thm1,
    "routes": _sweep_routes,
    "thm2": _sweep_thm2,
    "p1": _sweep_p1,
    "lemma-shuffle": _sweep_lemma,
    "fund-prop": _sweep_fund,
    "cadogan": _sweep_cadogan,
    "raising": _sweep_raising,
    "eulerian": _sweep_eulerian,
    "spot": None,
}

DEFAULT_BOUNDS = {
    "thm1": 8,
    "routes": 8,
    "thm2": 7,
    "p1": 7,
    "lemma-shuffle": (4, 4),
    "fund-prop": 6,
    "cadogan": 8,
    "raising": 10,
    "eulerian": 8,
    "spot": True,
}


def _exceeds(name, bound):
    limit = LIMITS.get(name)
    if limit is None:
        return False
    values = bound if isinstance(bound, tuple) else (bound,)
    return any(v > limit for v in values)


def run_suite(name, bound):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    if name == "spot":
        return [check_spot_values()] if bound else []
    if _exceeds(name, bound):
        return [Verdict(name, {"bound": bound}, False, {"error": f"bound exceeds limit {LIMITS[name]}"})]
    return SUITES[name](bound)


def run_all(bounds):
    """Run every suite named in ``bounds`` ({suite: bound}); sorted verdicts."""
    verdicts = []
    for name, bound in bounds.items():
        verdicts.extend(run_suite(name, bound))
    verdicts.sort(key=Verdict.sort_key)
    return verdicts


def report_json(verdicts, timings=False):
    return json.dumps([v.to_dict(timings) for v in verdicts], indent=1, sort_keys=True)


def summary(verdicts):
    failed = sum(not v.passed for v in verdicts)
    return f"{len(verdicts)} checks, {len(verdicts) - failed} passed, {failed} failed"
