"""Exact Laurent polynomials in q over the rationals, and their fraction field."""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from numbers import Rational


def _clean(c):
    # keep integral coefficients as int: much faster than Fraction
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """An element of Q[q, q^-1], stored as exponent -> nonzero coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        out = {}
        if terms:
            for e, c in dict(terms).items():
                c = _clean(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
                if c:
                    out[int(e)] = c
        self._terms = out
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def q_power(cls, e: int, c=1) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Rational)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, e: int):
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) and c >= 0 for c in self._terms.values())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == ({0: _clean(Fraction(other))} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Rational)):
                other = LaurentPoly.const(other)
            else:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _clean(v)
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Rational)):
                other = LaurentPoly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = e1 + e2
                    out[e] = out.get(e, 0) + c1 * c2
            return LaurentPoly._raw({e: _clean(c) for e, c in out.items() if c})
        if isinstance(other, (int, Rational)):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: _clean(c * other) for e, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                return LaurentPoly({e * k: Fraction(c) ** k})
            raise ValueError("only monomials can be inverted")
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, e: int) -> LaurentPoly:
        """Multiply by q^e."""
        return LaurentPoly._raw({x + e: c for x, c in self._terms.items()})

    def substitute_power(self, k: int) -> LaurentPoly:
        """q -> q^k (k may be negative)."""
        return LaurentPoly._raw({e * k: c for e, c in self._terms.items()})

    def __call__(self, value):
        """Evaluate at a number (exact for Fractions)."""
        total = 0
        for e, c in self._terms.items():
            total += c * Fraction(value) ** e
        return _clean(Fraction(total))

    # -- printing / serialization -------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict:
        return {str(e): str(c) for e, c in sorted(self._terms.items(), reverse=True)}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls({int(e): Fraction(c) for e, c in data.items()})


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.q_power(1)


def bar_q(p: LaurentPoly) -> LaurentPoly:
    """q -> q^-1."""
    return p.substitute_power(-1)


def subst_neg_qinv(p: LaurentPoly) -> LaurentPoly:
    """q -> -q^-1."""
    return LaurentPoly._raw({-e: (c if e % 2 == 0 else -c) for e, c in p._terms.items()})


def eval_at_one(p: LaurentPoly):
    return _clean(Fraction(sum(p._terms.values())))


@cache
def geometric_sum(n: int, k: int) -> LaurentPoly:
    """1 + q^{2k} + ... + q^{2k(n-1)}."""
    out = ZERO
    for j in range(n):
        out = out + LaurentPoly.q_power(2 * k * j)
    return out


def q_integer(m: int) -> LaurentPoly:
    """Symmetric quantum integer [m] = (q^m - q^-m)/(q - q^-1)."""
    if m == 0:
        return ZERO
    sign = 1 if m > 0 else -1
    m = abs(m)
    return LaurentPoly({m - 1 - 2 * j: sign for j in range(m)})


def q_binomial(a: int, b: int) -> LaurentPoly:
    """Symmetric Gaussian binomial [a choose b] for 0 <= b <= a."""
    if b < 0 or b > a:
        return ZERO
    num = ONE
    for m in range(1, a + 1):
        num = num * q_integer(m)
    den = ONE
    for m in list(range(1, b + 1)) + list(range(1, a - b + 1)):
        den = den * q_integer(m)
    quot, rem = _poly_divmod(num, den)
    assert rem.is_zero()
    return quot


# -- polynomial division helpers (used by RatFunc) ---------------------------


def _poly_divmod(a: LaurentPoly, b: LaurentPoly):
    """Division with remainder of Laurent polynomials treated as polynomials after
    shifting both to start at exponent 0. Returns (quotient, remainder) with
    a = quotient * b + remainder."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return ZERO, ZERO
    sa, sb = a.min_degree(), b.min_degree()
    A = dict(a.shift(-sa)._terms)
    B = b.shift(-sb)._terms
    db = max(B)
    lead = Fraction(B[db])
    quot = {}
    while A and max(A) >= db:
        da = max(A)
        c = _clean(Fraction(A[da]) / lead)
        quot[da - db] = c
        for e, v in B.items():
            x = A.get(e + da - db, 0) - c * v
            if x:
                A[e + da - db] = _clean(x)
            else:
                A.pop(e + da - db, None)
    q_ = LaurentPoly._raw(quot).shift(sa - sb)
    r_ = LaurentPoly._raw(A).shift(sa)
    return q_, r_


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd in Q[q] of the polynomial parts (monomial factors stripped)."""
    a = a.shift(-a.min_degree()) if a else a
    b = b.shift(-b.min_degree()) if b else b
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, (r.shift(-r.min_degree()) if r else r)
    lead = Fraction(a._terms[a.max_degree()])
    return a * (1 / lead)


class RatFunc:
    """Element of Q(q), kept reduced: gcd(num, den) = 1, den monic with
    lowest exponent 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentPoly.coerce(num)
        den = ONE if den is None else LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = _poly_gcd(num, den)
        num, _ = _poly_divmod(num, g)
        den, _ = _poly_divmod(den, g)
        s = den.min_degree()
        num, den = num.shift(-s), den.shift(-s)
        lead = Fraction(den._terms[den.max_degree()])
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    def is_laurent(self) -> bool:
        return self.den == ONE

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def __eq__(self, other):
        try:
            other = _as_ratfunc(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    return RatFunc(LaurentPoly.coerce(x))
