"""Sparse exact polynomials in the commuting indeterminates q, p, t."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

VARS = ("q", "p", "t")


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Polynomial in q, p, t with integer (or transiently rational) coefficients.

    Terms are stored as ``{(e_q, e_p, e_t): coeff}`` with zero coefficients
    pruned.  Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, Poly):
            self._terms = terms._terms
        elif isinstance(terms, Rational):
            self._terms = {(0, 0, 0): _normalize(terms)} if terms else {}
        else:
            clean = {}
            for key, c in dict(terms).items():
                if c:
                    key = tuple(key)
                    if len(key) != 3 or min(key) < 0:
                        raise ValueError(f"bad exponent triple {key!r}")
                    clean[key] = _normalize(c)
            self._terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, c=1, q=0, p=0, t=0):
        return cls({(q, p, t): c})

    # -- inspection ---------------------------------------------------------

    def items(self):
        return self._terms.items()

    def terms(self):
        """Terms sorted lexicographically by exponent triple."""
        return sorted(self._terms.items())

    def coeff(self, q=0, p=0, t=0):
        return self._terms.get((q, p, t), 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self, var):
        """Largest exponent of ``var`` (-1 for the zero polynomial)."""
        a = VARS.index(var)
        return max((k[a] for k in self._terms), default=-1)

    def is_constant(self):
        return all(k == (0, 0, 0) for k in self._terms)

    def constant(self):
        return self._terms.get((0, 0, 0), 0)

    def is_integral(self):
        return all(isinstance(c, int) for c in self._terms.values())

    def is_nonnegative(self):
        return all(c >= 0 for c in self._terms.values())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _normalize(v)
            else:
                out.pop(k, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if not other:
                return Poly()
            return Poly._raw({k: _normalize(c * other) for k, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for (a1, b1, c1), x in self._terms.items():
            for (a2, b2, c2), y in other._terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, 0) + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (Fraction(1) / other)
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- substitutions ------------------------------------------------------

    def raise_exponents(self, k):
        """Send every indeterminate x to x**k (the plethystic action of p_k)."""
        if k == 1:
            return self
        return Poly._raw({(a * k, b * k, c * k): v for (a, b, c), v in self._terms.items()})

    def subs(self, q=None, p=None, t=None):
        """Substitute numbers for any subset of the indeterminates."""
        vals = (q, p, t)
        out = {}
        for key, c in self._terms.items():
            newkey = list(key)
            for a, v in enumerate(vals):
                if v is not None:
                    c = c * v ** key[a]
                    newkey[a] = 0
            if c:
                newkey = tuple(newkey)
                out[newkey] = out.get(newkey, 0) + c
        return Poly(out)

    def collect(self, var):
        """Split into ``{exponent of var: Poly free of var}``."""
        a = VARS.index(var)
        out = {}
        for key, c in self._terms.items():
            rest = list(key)
            rest[a] = 0
            out.setdefault(key[a], {})[tuple(rest)] = c
        return {e: Poly._raw(d) for e, d in sorted(out.items())}

    def truncate(self, var, deg):
        """Drop terms whose ``var`` exponent exceeds ``deg``."""
        a = VARS.index(var)
        return Poly._raw({k: c for k, c in self._terms.items() if k[a] <= deg})

    def shift(self, q=0, p=0, t=0):
        return Poly._raw({(a + q, b + p, c + t): v for (a, b, c), v in self._terms.items()})

    # -- univariate division in q ---------------------------------------

    def divmod_q(self, divisor):
        """Long division by a polynomial in q alone; coefficients may be in p, t."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if any(k[1] or k[2] for k in divisor._terms):
            raise ValueError("divisor must be a polynomial in q only")
        dq = divisor.degree("q")
        lead = divisor.coeff(q=dq)
        quot = Poly()
        rem = self
        while not rem.is_zero() and rem.degree("q") >= dq:
            rq = rem.degree("q")
            top = rem.collect("q")[rq]
            factor = (top * (Fraction(1) / lead)).shift(q=rq - dq)
            quot = quot + factor
            rem = rem - factor * divisor
        return quot, rem

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b, c), v in self.terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VARS, (a, b, c))
                if e
            )
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, Rational):
        return Poly(x)
    return NotImplemented


ZERO = Poly()
ONE = Poly(1)
q = Poly.monomial(q=1)
p = Poly.monomial(p=1)
t = Poly.monomial(t=1)


def pochhammer(a, i, base=q):
    """(a; base)_i = (1 - a)(1 - a*base)...(1 - a*base^(i-1)); equals 1 for i = 0."""
    if i < 0:
        raise ValueError("pochhammer length must be nonnegative")
    out = ONE
    factor = Poly(a)
    for _ in range(i):
        out = out * (ONE - factor)
        factor = factor * base
    return out


def q_int(m, step=1):
    """1 + q^step + q^(2 step) + ... + q^((m-1) step)."""
    return Poly({(step * i, 0, 0): 1 for i in range(m)})


class QRational:
    """Quotient num/den with den a nonzero polynomial in q alone."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        self.num = Poly(num)
        self.den = Poly(den)
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    def __add__(self, other):
        if not isinstance(other, QRational):
            other = QRational(other)
        if self.den == other.den:
            return QRational(self.num + other.num, self.den)
        return QRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, QRational):
            return QRational(self.num * other.num, self.den * other.den)
        return QRational(self.num * other, self.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QRational):
            other = QRational(other)
        return self.num * other.den == other.num * self.den

    def to_poly(self):
        """Exact quotient; raises ValueError if the division leaves a remainder."""
        quot, rem = self.num.divmod_q(self.den)
        if not rem.is_zero():
            raise ValueError(f"{self!r} is not a polynomial")
        return quot

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"
