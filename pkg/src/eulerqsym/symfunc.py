"""Exact symmetric functions in the m, e, h, p and s bases.

A :class:`SymFunc` is a finite map from partitions to :class:`Poly`
coefficients tagged with a basis.  Transition matrices are computed
degreewise against the monomial basis and cached.  Rational coefficients
only show up in the power-sum basis.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .combinatorics import partition, partitions, z_lambda
from .poly import ONE, Poly

BASES = ("m", "e", "h", "p", "s")
BASIS_ALIASES = {
    "m": "m", "monomial": "m",
    "e": "e", "elementary": "e",
    "h": "h", "homogeneous": "h", "complete": "h",
    "p": "p", "power": "p", "powersum": "p",
    "s": "s", "schur": "s",
}
MULTIPLICATIVE = ("e", "h", "p")


class NonSymmetricError(ValueError):
    """A quasisymmetric function expected to be symmetric is not."""


class IntegralityError(ArithmeticError):
    """A result that must have integer coefficients came out rational."""


def basis_tag(name: str) -> str:
    try:
        return BASIS_ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unsupported basis {name!r}") from None


def _merge(a, b):
    return tuple(sorted(a + b, reverse=True))


class SymFunc:
    """Symmetric function ``sum_lam coeffs[lam] * b_lam`` in basis ``b``."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs=None):
        self.basis = basis_tag(basis)
        clean = {}
        for lam, c in (coeffs or {}).items():
            c = Poly(c)
            if c:
                lam = tuple(lam)
                clean[lam] = clean.get(lam, Poly()) + c
                if not clean[lam]:
                    del clean[lam]
        self.coeffs = clean

    @classmethod
    def _raw(cls, basis, coeffs):
        obj = cls.__new__(cls)
        obj.basis = basis
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, basis="s"):
        return cls._raw(basis_tag(basis), {})

    @classmethod
    def one(cls, basis="s"):
        return cls._raw(basis_tag(basis), {(): ONE})

    # -- inspection ---------------------------------------------------------

    def items(self):
        return self.coeffs.items()

    def coeff(self, lam) -> Poly:
        return self.coeffs.get(tuple(lam), Poly())

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degrees(self):
        return sorted({sum(lam) for lam in self.coeffs})

    def is_homogeneous(self, n=None):
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (n is None or degs[0] == n)

    def degree_part(self, d):
        return SymFunc._raw(self.basis, {lam: c for lam, c in self.coeffs.items() if sum(lam) == d})

    def truncate(self, N):
        return SymFunc._raw(self.basis, {lam: c for lam, c in self.coeffs.items() if sum(lam) <= N})

    def min_degree(self):
        return min((sum(lam) for lam in self.coeffs), default=None)

    def is_integral(self):
        return all(c.is_integral() for c in self.coeffs.values())

    def is_nonnegative(self):
        return all(c.is_nonnegative() for c in self.coeffs.values())

    def map_coeffs(self, fn):
        return SymFunc(self.basis, {lam: fn(c) for lam, c in self.coeffs.items()})

    def collect(self, var="t"):
        """Split the coefficients by powers of ``var``: ``{exp: SymFunc}``."""
        out = {}
        for lam, c in self.coeffs.items():
            for e, piece in c.collect(var).items():
                out.setdefault(e, {})[lam] = piece
        return {e: SymFunc._raw(self.basis, d) for e, d in sorted(out.items())}

    def to(self, basis):
        return convert(self, basis)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SymFunc):
            return other if other.basis == self.basis else convert(other, self.basis)
        if isinstance(other, (Poly, Rational)):
            return SymFunc(self.basis, {(): other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            v = out.get(lam, Poly()) + c
            if v:
                out[lam] = v
            else:
                out.pop(lam, None)
        return SymFunc._raw(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw(self.basis, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Poly, Rational)):
            if not other:
                return SymFunc.zero(self.basis)
            return SymFunc._raw(self.basis, {lam: c * other for lam, c in self.coeffs.items()})
        if isinstance(other, SymFunc):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Poly, Rational)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (Fraction(1) / other)
        return NotImplemented

    def __pow__(self, k):
        out = SymFunc.one(self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __call__(self, g, N=None):
        """Plethysm ``self[g]``."""
        return plethysm(self, g, N)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lam in sorted(self.coeffs, reverse=True):
            c = self.coeffs[lam]
            name = f"{self.basis}[{','.join(map(str, lam))}]"
            if c == 1:
                parts.append(name)
            elif len(c) == 1 and c.is_constant():
                parts.append(f"{c!r}*{name}")
            else:
                parts.append(f"({c!r})*{name}")
        return " + ".join(parts)

    # -- serialization ------------------------------------------------------

    def to_dict(self):
        terms = []
        for lam in sorted(self.coeffs, reverse=True):
            coeff = [
                {"q": a, "p": b, "t": c, "c": _encode_scalar(v)}
                for (a, b, c), v in self.coeffs[lam].terms()
            ]
            terms.append({"partition": list(lam), "coeff": coeff})
        return {"basis": self.basis, "terms": terms}

    @classmethod
    def from_dict(cls, data):
        coeffs = {}
        for term in data["terms"]:
            lam = tuple(term["partition"])
            coeffs[lam] = Poly({(c["q"], c["p"], c["t"]): _decode_scalar(c["c"]) for c in term["coeff"]})
        return cls(data["basis"], coeffs)

    def dumps(self):
        return canonical_json(self.to_dict())

    @classmethod
    def loads(cls, text):
        return cls.from_dict(json.loads(text))


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _encode_scalar(v):
    if isinstance(v, int):
        return v
    return f"{v.numerator}/{v.denominator}"


def _decode_scalar(v):
    if isinstance(v, int):
        return v
    return Fraction(v)


def _basis_element(basis, parts):
    parts = [int(x) for x in parts]
    if basis in ("h", "e"):
        parts = [x for x in parts if x]  # h_0 = e_0 = 1
    lam = tuple(sorted(parts, reverse=True))
    partition(lam)
    return SymFunc._raw(basis, {lam: ONE})


def m(*parts):
    return _basis_element("m", parts)


def e(*parts):
    return _basis_element("e", parts)


def h(*parts):
    return _basis_element("h", parts)


def psum(*parts):
    return _basis_element("p", parts)


def s(*parts):
    return _basis_element("s", parts)


# -- transition matrices ----------------------------------------------------


def _coefficient_of_monomial(factor_exps, mu):
    """Counter for the coefficient of x^mu in a product of one factor per part.

    ``factor_exps(a, remaining)`` yields the exponent vectors a factor of
    degree ``a`` may contribute.
    """

    @lru_cache(maxsize=None)
    def go(parts, remaining):
        if not parts:
            return 1 if not any(remaining) else 0
        a, rest = parts[0], parts[1:]
        total = 0
        for vec in factor_exps(a, remaining):
            total += go(rest, tuple(r - v for r, v in zip(remaining, vec)))
        return total

    return go


def _p_vectors(a, remaining):
    for j, r in enumerate(remaining):
        if r >= a:
            yield tuple(a if i == j else 0 for i in range(len(remaining)))


def _bounded_vectors(a, remaining, cap):
    if not remaining:
        if a == 0:
            yield ()
        return
    for first in range(min(a, remaining[0], cap), -1, -1):
        for rest in _bounded_vectors(a - first, remaining[1:], cap):
            yield (first,) + rest


def _h_vectors(a, remaining):
    return _bounded_vectors(a, remaining, a)


def _e_vectors(a, remaining):
    return _bounded_vectors(a, remaining, 1)


@lru_cache(maxsize=None)
def kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    last, rest = mu[-1], mu[:-1]
    total = 0
    for nu in _horizontal_strip_removals(lam, last):
        total += kostka(nu, rest)
    return total


def _horizontal_strip_removals(lam, size):
    """Partitions nu inside lam with lam/nu a horizontal strip of ``size`` cells."""
    lam = list(lam)
    out = []

    def go(i, left, acc):
        if i == len(lam):
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(0, min(left, lam[i] - lower) + 1):
            go(i + 1, left - take, acc + [lam[i] - take])

    go(0, size, [])
    return out


@lru_cache(maxsize=None)
def to_monomial_matrix(basis, n):
    """``{lam: {mu: c}}`` with b_lam = sum_mu c * m_mu over partitions of n."""
    parts = list(partitions(n))
    if basis == "m":
        return {lam: {lam: 1} for lam in parts}
    if basis == "s":
        return {lam: {mu: k for mu in parts if (k := kostka(lam, mu))} for lam in parts}
    vec = {"p": _p_vectors, "h": _h_vectors, "e": _e_vectors}[basis]
    out = {lam: {} for lam in parts}
    for mu in parts:
        count = _coefficient_of_monomial(vec, mu)
        for lam in parts:
            c = count(lam, mu)
            if c:
                out[lam][mu] = c
    return out


@lru_cache(maxsize=None)
def from_monomial_matrix(basis, n):
    """``{mu: {lam: c}}`` with m_mu = sum_lam c * b_lam (exact inverse)."""
    fwd = to_monomial_matrix(basis, n)
    parts = list(partitions(n))
    idx = {lam: a for a, lam in enumerate(parts)}
    size = len(parts)
    # rows: b_lam in m-coordinates; invert A where A[lam][mu] = fwd
    A = [[Fraction(fwd[lam].get(mu, 0)) for mu in parts] for lam in parts]
    inv = [[Fraction(int(a == b)) for b in range(size)] for a in range(size)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if A[r][col])
        A[col], A[pivot] = A[pivot], A[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = A[col][col]
        A[col] = [x / scale for x in A[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(size):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # inv = A^{-1}: m_mu = sum_lam inv[mu][lam] b_lam
    out = {}
    for mu in parts:
        row = {}
        for lam in parts:
            c = inv[idx[mu]][idx[lam]]
            if c:
                row[lam] = c.numerator if c.denominator == 1 else c
        out[mu] = row
    return out


@lru_cache(maxsize=None)
def _single_to_p(basis, n):
    """p-expansion of h_n or e_n."""
    out = {}
    for mu in partitions(n):
        c = Fraction(1, z_lambda(mu))
        if basis == "e" and (n - len(mu)) % 2:
            c = -c
        out[mu] = c
    return out


@lru_cache(maxsize=None)
def _multiplicative_to_p(basis, lam):
    acc = {(): Fraction(1)}
    for a in lam:
        nxt = {}
        for nu, c in acc.items():
            for mu, d in _single_to_p(basis, a).items():
                key = _merge(nu, mu)
                nxt[key] = nxt.get(key, 0) + c * d
        acc = nxt
    return {k: v for k, v in acc.items() if v}


def _apply(f, rows, basis):
    out = {}
    for lam, c in f.coeffs.items():
        for mu, x in rows(lam).items():
            v = out.get(mu, Poly()) + c * x
            if v:
                out[mu] = v
            else:
                out.pop(mu, None)
    return SymFunc._raw(basis, out)


def _to_m(f):
    if f.basis == "m":
        return f
    return _apply(f, lambda lam: to_monomial_matrix(f.basis, sum(lam))[lam], "m")


def _schur_solve(f):
    """Unitriangular Kostka solve of an m-basis function into Schur functions."""
    work = dict(f.coeffs)
    out = {}
    while work:
        lam = max(work)  # largest in lex order, hence maximal in dominance
        c = work.pop(lam)
        out[lam] = c
        for mu, k in to_monomial_matrix("s", sum(lam))[lam].items():
            if mu == lam:
                continue
            v = work.get(mu, Poly()) - c * k
            if v:
                work[mu] = v
            else:
                work.pop(mu, None)
    return SymFunc._raw("s", out)


def convert(f, target):
    """Re-express ``f`` in the basis ``target``."""
    target = basis_tag(target)
    if f.basis == target:
        return f
    if target == "p" and f.basis in ("h", "e"):
        return _apply(f, lambda lam: _multiplicative_to_p(f.basis, lam), "p")
    fm = _to_m(f)
    if target == "m":
        return fm
    if target == "s":
        return _schur_solve(fm)
    return _apply(fm, lambda mu: from_monomial_matrix(target, sum(mu))[mu], target)


def mul(f, g):
    """Product of two symmetric functions, returned in the basis of ``f``."""
    if f.basis == g.basis and f.basis in MULTIPLICATIVE:
        return _concat_product(f, g, f.basis)
    fp, gp = convert(f, "p"), convert(g, "p")
    return convert(_concat_product(fp, gp, "p"), f.basis)


def _concat_product(f, g, basis, N=None):
    out = {}
    for lam, c in f.coeffs.items():
        dl = sum(lam)
        for mu, d in g.coeffs.items():
            if N is not None and dl + sum(mu) > N:
                continue
            key = _merge(lam, mu)
            v = out.get(key, Poly()) + c * d
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return SymFunc._raw(basis, out)


def mul_truncated(f, g, N):
    """Product keeping only degrees <= N; multiplicative bases only."""
    if f.basis != g.basis:
        g = convert(g, f.basis)
    if f.basis not in MULTIPLICATIVE:
        return mul(f, g).truncate(N)
    return _concat_product(f, g, f.basis, N)


# -- plethysm ---------------------------------------------------------------


def p_k_of(k, g):
    """p_k[g] for g in the power-sum basis: p_i -> p_{ik}, each indeterminate x -> x^k."""
    return SymFunc._raw(
        "p", {tuple(k * a for a in lam): c.raise_exponents(k) for lam, c in g.coeffs.items()}
    )


def plethysm(f, g, N=None):
    """f[g], truncated at degree N when given; result in the p basis.

    With ``N`` given, ``g`` must have no constant term.
    """
    fp = convert(f, "p")
    gp = convert(g, "p")
    if N is not None and gp.min_degree() == 0:
        raise ValueError("truncated plethysm needs g without constant term")
    low = gp.min_degree()
    powers = {}
    products = {(): SymFunc.one("p")}

    def power(k):
        if k not in powers:
            powers[k] = p_k_of(k, gp) if N is None else p_k_of(k, gp).truncate(N)
        return powers[k]

    def product(mu):
        if mu not in products:
            head = product(mu[:-1])
            nxt = power(mu[-1])
            products[mu] = (
                _concat_product(head, nxt, "p") if N is None else _concat_product(head, nxt, "p", N)
            )
        return products[mu]

    out = SymFunc.zero("p")
    for mu, c in sorted(fp.coeffs.items()):
        if low is None:
            if mu == ():
                out = out + SymFunc("p", {(): c})
            continue
        if N is not None and low * sum(mu) > N:
            continue
        out = out + product(mu) * c
    return out


class SymSeries:
    """A symmetric-function power series in z truncated at z-degree ``trunc``.

    The z-exponent of every term equals its symmetric-function degree, so the
    series is stored as one inhomogeneous :class:`SymFunc`; ``comp(d)`` is the
    coefficient of z^d.
    """

    def __init__(self, func, trunc):
        self.trunc = trunc
        self.func = func.truncate(trunc)

    def comp(self, d):
        if d > self.trunc:
            raise ValueError(f"degree {d} beyond truncation {self.trunc}")
        return self.func.degree_part(d)

    def __add__(self, other):
        return SymSeries(self.func + other.func, min(self.trunc, other.trunc))

    def __sub__(self, other):
        return SymSeries(self.func - other.func, min(self.trunc, other.trunc))

    def __mul__(self, other):
        if isinstance(other, SymSeries):
            N = min(self.trunc, other.trunc)
            return SymSeries(mul_truncated(self.func, other.func, N), N)
        return SymSeries(self.func * other, self.trunc)

    def geometric(self):
        """(1 - self)^{-1}; self must have no constant term."""
        if self.func.min_degree() == 0:
            raise ValueError("geometric series needs a series without constant term")
        one = SymFunc.one(self.func.basis)
        out, power = one, one
        for _ in range(self.trunc):
            power = mul_truncated(power, self.func, self.trunc)
            if not power:
                break
            out = out + power
        return SymSeries(out, self.trunc)

    def plethysm_into(self, f):
        """f[self], clipped at the same z-degree."""
        return SymSeries(plethysm(f, self.func, self.trunc), self.trunc)

    def __eq__(self, other):
        return self.trunc == other.trunc and self.func == other.func

    __hash__ = None
