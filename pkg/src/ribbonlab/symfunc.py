"""Symmetric functions with Laurent-polynomial coefficients.

A SymFunc is a finite linear combination of basis elements b_lam, where the
basis is one of monomial, homogeneous, elementary, powersum or schur.
Elements of different degrees may be mixed; every conversion works degree
by degree through the monomial basis using cached exact transition matrices.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .partitions import (
    conjugate,
    contains,
    partitions_of,
    size,
    skew_cells,
    z_factor,
)
from .qcoeff import ONE, ZERO, LaurentPoly, RatFunc, bar_q, geometric_sum

BASES = ("monomial", "homogeneous", "elementary", "powersum", "schur")
_ALIASES = {"m": "monomial", "h": "homogeneous", "e": "elementary", "p": "powersum", "s": "schur"}


def basis_name(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in BASES:
        raise ValueError(f"unknown basis {name!r}")
    return name


# -- transition matrices ------------------------------------------------------


@lru_cache(maxsize=None)
def kostka(lam: tuple, mu: tuple) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    if size(lam) != size(mu):
        return 0
    if not mu:
        return 1
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    # remove a horizontal strip of size `last` (n=1 strips have spin 0)
    for nu in _remove_horizontal_strip(lam, last):
        total += kostka(nu, rest)
    return total


@lru_cache(maxsize=None)
def _remove_horizontal_strip(lam: tuple, k: int) -> tuple:
    out = []

    def rec(i, remaining, acc):
        if i == len(lam):
            if remaining == 0:
                out.append(tuple(p for p in acc if p))
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(0, min(remaining, lam[i] - lower) + 1):
            rec(i + 1, remaining - take, acc + [lam[i] - take])

    rec(0, k, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _p_to_m(lam: tuple) -> dict:
    """Coefficient of m_mu in p_lam: number of ordered ways to distribute the
    parts of lam into len(mu) labelled variables so that variable i gets mu_i."""
    mu_list = partitions_of(size(lam))
    out = {}
    for mu in mu_list:
        if len(mu) > len(lam):
            continue
        c = _distribute(tuple(lam), tuple(mu))
        if c:
            out[mu] = c
    return out


@lru_cache(maxsize=None)
def _distribute(parts: tuple, target: tuple) -> int:
    if not parts:
        return 1 if all(t == 0 for t in target) else 0
    p, rest = parts[0], parts[1:]
    total = 0
    for i, t in enumerate(target):
        if t >= p:
            total += _distribute(rest, target[:i] + (t - p,) + target[i + 1 :])
    return total


@lru_cache(maxsize=None)
def _to_monomial(basis: str, d: int) -> dict:
    """Matrix rows: basis element lam (degree d) -> {mu: coefficient of m_mu}."""
    parts = partitions_of(d)
    rows = {}
    for lam in parts:
        if basis == "monomial":
            row = {lam: 1}
        elif basis == "schur":
            row = {mu: kostka(lam, mu) for mu in parts}
        elif basis == "homogeneous":
            row = {mu: sum(kostka(nu, lam) * kostka(nu, mu) for nu in parts) for mu in parts}
        elif basis == "elementary":
            row = {
                mu: sum(kostka(conjugate(nu), lam) * kostka(nu, mu) for nu in parts)
                for mu in parts
            }
        elif basis == "powersum":
            row = _p_to_m(lam)
        else:
            raise ValueError(basis)
        rows[lam] = {mu: c for mu, c in row.items() if c}
    return rows


def _invert(rows: dict, order: tuple) -> dict:
    """Invert a square matrix given as sparse rows, by Gauss-Jordan over Q."""
    idx = {lam: i for i, lam in enumerate(order)}
    size_ = len(order)
    a = [[Fraction(0)] * size_ + [Fraction(int(i == j)) for j in range(size_)] for i in range(size_)]
    for lam, row in rows.items():
        for mu, c in row.items():
            a[idx[lam]][idx[mu]] = Fraction(c)
    for col in range(size_):
        piv = next(r for r in range(col, size_) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        if pv != 1:
            a[col] = [x / pv for x in a[col]]
        for r in range(size_):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = {}
    for i, lam in enumerate(order):
        inv[lam] = {}
        for j, mu in enumerate(order):
            v = a[i][size_ + j]
            if v:
                inv[lam][mu] = v.numerator if v.denominator == 1 else v
    return inv


@lru_cache(maxsize=None)
def _from_monomial(basis: str, d: int) -> dict:
    """Matrix rows: m_lam -> {mu: coefficient of b_mu}."""
    if basis == "monomial":
        return {lam: {lam: 1} for lam in partitions_of(d)}
    fwd = _to_monomial(basis, d)
    # x = B->m, so m = (B->m)^{-1} B; rows of the inverse give m_lam in B
    return _invert(fwd, partitions_of(d))


@lru_cache(maxsize=None)
def transition(src: str, dst: str, d: int) -> dict:
    """Rows: b^src_lam -> {mu: coefficient of b^dst_mu}, for degree d."""
    src, dst = basis_name(src), basis_name(dst)
    if src == dst:
        return {lam: {lam: 1} for lam in partitions_of(d)}
    to_m = _to_monomial(src, d)
    if dst == "monomial":
        return to_m
    from_m = _from_monomial(dst, d)
    out = {}
    for lam, row in to_m.items():
        acc = {}
        for nu, c in row.items():
            for mu, c2 in from_m[nu].items():
                acc[mu] = acc.get(mu, 0) + c * c2
        out[lam] = {mu: (v.numerator if isinstance(v, Fraction) and v.denominator == 1 else v)
                    for mu, v in acc.items() if v}
    return out


def character(lam: tuple, mu: tuple):
    """Irreducible character chi^lam at cycle type mu, read off s -> p."""
    # s_lam = sum_mu z_mu^{-1} chi^lam_mu p_mu
    c = transition("schur", "powersum", size(lam))[lam].get(mu, 0)
    return Fraction(c) * z_factor(mu)


# -- the element type ----------------------------------------------------------


class SymFunc:
    """Finite combination sum_lam c_lam b_lam in a fixed basis."""

    __slots__ = ("basis", "_coeffs")

    def __init__(self, basis: str, coeffs=None):
        self.basis = basis_name(basis)
        out = {}
        for lam, c in (coeffs or {}).items():
            c = LaurentPoly.coerce(c)
            if c:
                out[tuple(lam)] = c
        self._coeffs = out

    # constructors
    @classmethod
    def zero(cls, basis="schur") -> SymFunc:
        return cls(basis)

    @classmethod
    def one(cls) -> SymFunc:
        return cls("schur", {(): ONE})

    @classmethod
    def m(cls, lam) -> SymFunc:
        return cls("monomial", {_part(lam): ONE})

    @classmethod
    def h(cls, lam) -> SymFunc:
        return cls("homogeneous", {_part(lam): ONE})

    @classmethod
    def e(cls, lam) -> SymFunc:
        return cls("elementary", {_part(lam): ONE})

    @classmethod
    def p(cls, lam) -> SymFunc:
        return cls("powersum", {_part(lam): ONE})

    @classmethod
    def s(cls, lam) -> SymFunc:
        return cls("schur", {_shape(lam): ONE})

    # inspection
    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda t: (size(t[0]), tuple(-x for x in t[0])))

    def coeff(self, lam) -> LaurentPoly:
        return self._coeffs.get(tuple(lam), ZERO)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degrees(self) -> set:
        return {size(lam) for lam in self._coeffs}

    def homogeneous_part(self, d: int) -> SymFunc:
        return SymFunc(self.basis, {lam: c for lam, c in self._coeffs.items() if size(lam) == d})

    def truncate(self, d: int) -> SymFunc:
        return SymFunc(self.basis, {lam: c for lam, c in self._coeffs.items() if size(lam) <= d})

    def convert(self, target: str) -> SymFunc:
        return convert(self, target)

    # arithmetic
    def __add__(self, other):
        other = _coerce_sym(other, self.basis)
        if other is NotImplemented:
            return NotImplemented
        other = convert(other, self.basis)
        out = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymFunc(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self._coeffs.items()})

    def __sub__(self, other):
        other = _coerce_sym(other, self.basis)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, (LaurentPoly, int, Fraction)):
            c = LaurentPoly.coerce(other)
            return SymFunc(self.basis, {lam: v * c for lam, v in self._coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            other = _coerce_sym(other, self.basis)
            if other is NotImplemented:
                return NotImplemented
        a = convert(self, "monomial")._coeffs
        b = convert(other, "monomial")._coeffs
        return a == b

    def __hash__(self):
        return hash(frozenset(convert(self, "monomial")._coeffs.items()))

    def __repr__(self):
        return f"SymFunc({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        sym = {"monomial": "m", "homogeneous": "h", "elementary": "e", "powersum": "p", "schur": "s"}[self.basis]
        terms = []
        for lam, c in self.items():
            idx = "".join(map(str, lam)) if all(x < 10 for x in lam) else ",".join(map(str, lam))
            terms.append(f"({c})*{sym}[{idx}]")
        return " + ".join(terms)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "coeffs": [{"part": ",".join(map(str, lam)), "poly": c.to_json()} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> SymFunc:
        coeffs = {}
        for entry in data["coeffs"]:
            text = entry["part"]
            lam = tuple(int(x) for x in text.split(",")) if text else ()
            coeffs[lam] = LaurentPoly.from_json(entry["poly"])
        return cls(data["basis"], coeffs)


def _part(lam) -> tuple:
    if isinstance(lam, int):
        return (lam,) if lam else ()
    return tuple(sorted(lam, reverse=True))


def _shape(lam) -> tuple:
    if isinstance(lam, int):
        return (lam,) if lam else ()
    lam = tuple(lam)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {lam}")
    return lam


def _coerce_sym(x, basis):
    if isinstance(x, SymFunc):
        return x
    if isinstance(x, (LaurentPoly, int, Fraction)):
        return SymFunc(basis, {(): x})
    return NotImplemented


# -- operations -----------------------------------------------------------------


def convert(f: SymFunc, target: str) -> SymFunc:
    target = basis_name(target)
    if f.basis == target:
        return f
    by_degree = {}
    for lam, c in f._coeffs.items():
        by_degree.setdefault(size(lam), []).append((lam, c))
    out = {}
    for d, terms in by_degree.items():
        mat = transition(f.basis, target, d)
        for lam, c in terms:
            for mu, v in mat[lam].items():
                out[mu] = out.get(mu, ZERO) + c * v
    return SymFunc(target, out)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product computed in the power-sum basis, returned in f's basis."""
    fp, gp = convert(f, "powersum"), convert(g, "powersum")
    out = {}
    for a, ca in fp._coeffs.items():
        for b, cb in gp._coeffs.items():
            lam = tuple(sorted(a + b, reverse=True))
            out[lam] = out.get(lam, ZERO) + ca * cb
    return convert(SymFunc("powersum", out), f.basis)


@lru_cache(maxsize=None)
def lr_coefficient(lam: tuple, mu: tuple, nu: tuple) -> int:
    """c^nu_{lam,mu}: Littlewood-Richardson tableaux of shape nu/lam, content mu."""
    if size(lam) + size(mu) != size(nu) or not contains(nu, lam):
        return 0
    rows = sorted({r for r, _ in skew_cells(nu, lam)})
    count = 0
    # fill row by row; entries weakly increase along rows, strictly down columns
    filled = {}

    def row_cells(r):
        lo = lam[r - 1] if r <= len(lam) else 0
        return list(range(lo + 1, nu[r - 1] + 1))

    def rec(ri, used, word_counts):
        nonlocal count
        if ri == len(rows):
            if tuple(used[i] for i in range(len(mu))) == mu:
                count += 1
            return
        r = rows[ri]
        cols = row_cells(r)

        # reading word goes right to left along each row, top row first
        def fill(ci, prev, used_, wc, placed):
            if ci < 0:
                rec(ri + 1, used_, wc)
                return
            c = cols[ci]
            above = filled.get((r - 1, c), 0)
            hi = prev if prev is not None else len(mu)
            for v in range(max(above + 1, 1), hi + 1):
                if used_[v - 1] >= mu[v - 1]:
                    continue
                if v > 1 and wc[v - 1] + 1 > wc[v - 2]:
                    continue
                filled[(r, c)] = v
                u2 = list(used_)
                u2[v - 1] += 1
                w2 = list(wc)
                w2[v - 1] += 1
                fill(ci - 1, v, u2, w2, placed)
                del filled[(r, c)]

        fill(len(cols) - 1, None, used, word_counts, None)

    rec(0, [0] * len(mu), [0] * len(mu))
    return count


def multiply_lr(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product via Littlewood-Richardson coefficients (Schur basis)."""
    fs, gs = convert(f, "schur"), convert(g, "schur")
    out = {}
    for a, ca in fs._coeffs.items():
        for b, cb in gs._coeffs.items():
            for nu in partitions_of(size(a) + size(b)):
                c = lr_coefficient(a, b, nu)
                if c:
                    out[nu] = out.get(nu, ZERO) + ca * cb * c
    return SymFunc("schur", out)


def _map_powersum(f: SymFunc, fn) -> SymFunc:
    fp = convert(f, "powersum")
    out = {}
    for lam, c in fp._coeffs.items():
        out[lam] = fn(lam, c)
    return convert(SymFunc("powersum", out), f.basis)


def upsilon(f: SymFunc, n: int) -> SymFunc:
    """The plethysm p_k -> (1 + q^{2k} + ... + q^{2k(n-1)}) p_k."""
    def fn(lam, c):
        for k in lam:
            c = c * geometric_sum(n, k)
        return c

    return _map_powersum(f, fn)


def omega_n(f: SymFunc, n: int) -> SymFunc:
    """Semilinear involution s_lam -> q^{(n-1)|lam|} s_lam', q -> q^{-1}."""
    def fn(lam, c):
        sign = -1 if (size(lam) - len(lam)) % 2 else 1
        return bar_q(c).shift((n - 1) * size(lam)) * sign

    return _map_powersum(f, fn)


def bar_lambda(f: SymFunc, n: int) -> SymFunc:
    """Semilinear involution p_k -> q^{2(n-1)k} p_k, q -> q^{-1}."""
    return _map_powersum(f, lambda lam, c: bar_q(c).shift(2 * (n - 1) * size(lam)))


def hall_inner(f: SymFunc, g: SymFunc) -> LaurentPoly:
    fp, gp = convert(f, "powersum"), convert(g, "powersum")
    total = ZERO
    for lam, c in fp._coeffs.items():
        d = gp._coeffs.get(lam)
        if d is not None:
            total = total + c * d * z_factor(lam)
    return total


def inner_n(f: SymFunc, g: SymFunc, n: int) -> RatFunc:
    """The form with <Upsilon(p_lam), p_mu>_n = z_lam delta_{lam,mu}."""
    fp, gp = convert(f, "powersum"), convert(g, "powersum")
    total = RatFunc(ZERO)
    for lam, c in fp._coeffs.items():
        d = gp._coeffs.get(lam)
        if d is None:
            continue
        den = ONE
        for k in lam:
            den = den * geometric_sum(n, k)
        total = total + RatFunc(c * d * z_factor(lam), den)
    return total


def _perp_p(lam: tuple, mu: tuple):
    """p_lam^perp p_mu as (partition, integer coefficient) or None."""
    rest = list(mu)
    coeff = 1
    for k in lam:
        m = rest.count(k)
        if not m:
            return None
        coeff *= k * m
        rest.remove(k)
    return tuple(rest), coeff


def perp(f: SymFunc, g: SymFunc) -> SymFunc:
    """f^perp g, the adjoint of multiplication by f for the Hall pairing."""
    fp, gp = convert(f, "powersum"), convert(g, "powersum")
    out = {}
    for lam, c in fp._coeffs.items():
        for mu, d in gp._coeffs.items():
            res = _perp_p(lam, mu)
            if res is not None:
                nu, k = res
                out[nu] = out.get(nu, ZERO) + c * d * k
    return convert(SymFunc("powersum", out), g.basis)


def specialize(f: SymFunc, values) -> LaurentPoly:
    """Set x_1..x_m to the given values and all other variables to zero."""
    values = [LaurentPoly.coerce(v) for v in values]
    fp = convert(f, "powersum")
    power_cache = {}

    def pk(k):
        if k not in power_cache:
            total = ZERO
            for v in values:
                total = total + v**k
            power_cache[k] = total
        return power_cache[k]

    total = ZERO
    for lam, c in fp._coeffs.items():
        term = c
        for k in lam:
            term = term * pk(k)
        total = total + term
    return total


@lru_cache(maxsize=None)
def _monomial_exponents(lam: tuple, nvars: int) -> tuple:
    if len(lam) > nvars:
        return ()
    padded = lam + (0,) * (nvars - len(lam))
    return tuple(sorted(set(permutations(padded))))


def to_polynomial(f: SymFunc, nvars: int) -> dict:
    """Expand in nvars variables: {exponent tuple: coefficient}."""
    fm = convert(f, "monomial")
    out = {}
    for lam, c in fm._coeffs.items():
        for alpha in _monomial_exponents(lam, nvars):
            out[alpha] = out.get(alpha, ZERO) + c
    return {a: c for a, c in out.items() if c}


def bold_h(k: int, n: int) -> SymFunc:
    return upsilon(SymFunc.h(k), n)


def bold_e(k: int, n: int) -> SymFunc:
    return upsilon(SymFunc.e(k), n)

