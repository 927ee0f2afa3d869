"""Ribbon tableaux and their spin generating functions.

G_{lam/mu}(X;q) is the sum over semistandard n-ribbon tableaux T of shape
lam/mu of q^{s(T)} x^{w(T)}. Tableaux are chains of partitions whose steps
are horizontal ribbon strips.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    add_horizontal_strips,
    add_vertical_strips,
    conjugate,
    contains,
    enumerate_border_ribbon_strips,
    n_core,
    n_quotient,
    partitions_of,
    remove_horizontal_strips,
    size,
)
from .qcoeff import ONE, ZERO, LaurentPoly, bar_q, eval_at_one
from .symfunc import SymFunc, convert, lr_coefficient


@dataclass(frozen=True)
class RibbonTableau:
    """A chain inner = c_0 <= c_1 <= ... <= c_m = outer of horizontal n-ribbon
    strips; the strip c_i/c_{i-1} holds the ribbons labelled i."""

    n: int
    chain: tuple
    weight: tuple
    spin: int

    @property
    def inner(self):
        return self.chain[0]

    @property
    def outer(self):
        return self.chain[-1]

    def to_json(self) -> dict:
        return {
            "chain": [list(lam) for lam in self.chain],
            "spin": self.spin,
            "weight": list(self.weight),
        }


def _ribbons(outer, inner, n) -> int | None:
    d = size(outer) - size(inner)
    if d < 0 or d % n or not contains(outer, inner):
        return None
    return d // n


def enumerate_tableaux(outer, inner, n: int, max_label: int) -> list:
    """All semistandard n-ribbon tableaux of shape outer/inner with labels
    1..max_label, in lexicographic order of their weights then chains."""
    outer, inner = tuple(outer), tuple(inner)
    if _ribbons(outer, inner, n) is None:
        return []
    out = []

    def rec(chain, weight, spin):
        cur = chain[-1]
        if len(weight) == max_label:
            if cur == outer:
                out.append(RibbonTableau(n, chain, weight, spin))
            return
        left = (size(outer) - size(cur)) // n
        for k in range(left + 1):
            for nu, s in add_horizontal_strips(cur, n, k):
                if contains(outer, nu):
                    rec(chain + (nu,), weight + (k,), spin + s)

    rec((inner,), (), 0)
    return sorted(out, key=lambda t: (t.weight, t.chain))


@lru_cache(maxsize=None)
def K_poly(outer, inner, n: int, alpha) -> LaurentPoly:
    """Spin generating function of tableaux of shape outer/inner, weight alpha."""
    outer, inner, alpha = tuple(outer), tuple(inner), tuple(alpha)
    if not alpha:
        return ONE if outer == inner else ZERO
    if not contains(outer, inner):
        return ZERO
    total = ZERO
    for mu, s in remove_horizontal_strips(outer, n, alpha[-1]):
        if contains(mu, inner):
            rest = K_poly(mu, inner, n, alpha[:-1])
            if rest:
                total = total + rest.shift(s)
    return total


def L_poly(outer, inner, n: int, alpha) -> LaurentPoly:
    """Spin generating function of column semistandard tableaux (steps are
    vertical strips), via conjugation and spin complement."""
    d = _ribbons(tuple(outer), tuple(inner), n)
    if d is None:
        return ZERO
    k = K_poly(conjugate(tuple(outer)), conjugate(tuple(inner)), n, tuple(alpha))
    return bar_q(k).shift((n - 1) * d)


def _default_inner(outer, inner, n):
    return n_core(tuple(outer), n) if inner is None else tuple(inner)


@lru_cache(maxsize=None)
def _G(outer, inner, n) -> SymFunc:
    d = _ribbons(outer, inner, n)
    if d is None:
        return SymFunc("monomial")
    coeffs = {}
    for alpha in partitions_of(d):
        c = K_poly(outer, inner, n, alpha)
        if c:
            coeffs[alpha] = c
    return SymFunc("monomial", coeffs)


def G(outer, n: int, inner=None) -> SymFunc:
    """The ribbon function G_{outer/inner} in the monomial basis; inner
    defaults to the n-core of outer."""
    outer = tuple(outer)
    return _G(outer, _default_inner(outer, inner, n), n)


def q_lr(outer, n: int, inner=None, check: bool = True) -> dict:
    """Schur coefficients of G_{outer/inner}: {nu: c_nu(q)}.

    When inner is the n-core these have nonnegative integer coefficients;
    ``check`` raises ArithmeticError if that ever fails."""
    outer = tuple(outer)
    inner = _default_inner(outer, inner, n)
    out = dict(convert(_G(outer, inner, n), "schur").coeffs)
    if check and inner == n_core(outer, n):
        for nu, c in out.items():
            if not c.has_nonnegative_integer_coefficients():
                raise ArithmeticError(f"negative q-LR coefficient {c} at {nu} for {outer}")
    return out


@lru_cache(maxsize=None)
def X_poly(outer, inner, n: int, type_) -> LaurentPoly:
    """Signed spin generating function sum (-1)^h(T) q^s(T) over border
    ribbon strip tableaux of shape outer/inner and the given type."""
    outer, inner, type_ = tuple(outer), tuple(inner), tuple(type_)
    if not type_:
        return ONE if outer == inner else ZERO
    if not contains(outer, inner):
        return ZERO
    total = ZERO
    for b in enumerate_border_ribbon_strips(inner, n, type_[0]):
        if contains(outer, b.outer):
            rest = X_poly(outer, b.outer, n, type_[1:])
            if rest:
                sign = -1 if b.height % 2 else 1
                total = total + rest.shift(b.spin) * sign
    return total


def default_super_order(m_unprimed: int, m_primed: int) -> list:
    """1 < 1' < 2 < 2' < ...: letters are (label, primed)."""
    out = []
    for i in range(1, max(m_unprimed, m_primed) + 1):
        if i <= m_unprimed:
            out.append((i, False))
        if i <= m_primed:
            out.append((i, True))
    return out


def super_G(outer, inner, n: int, m_unprimed: int, m_primed: int, order=None) -> dict:
    """Coefficients of the super ribbon function: {(alpha, beta): K(q)} with
    alpha, beta compositions of lengths m_unprimed and m_primed (x and y
    exponents). Unprimed letters fill horizontal strips, primed letters
    vertical strips, in the given total order."""
    outer, inner = tuple(outer), tuple(inner)
    if order is None:
        order = default_super_order(m_unprimed, m_primed)
    if _ribbons(outer, inner, n) is None:
        return {}
    out = {}

    def rec(pos, cur, alpha, beta, spin):
        if pos == len(order):
            if cur == outer:
                key = (tuple(alpha), tuple(beta))
                out[key] = out.get(key, ZERO) + LaurentPoly.q_power(spin)
            return
        label, primed = order[pos]
        left = (size(outer) - size(cur)) // n
        adder = add_vertical_strips if primed else add_horizontal_strips
        for k in range(left + 1):
            for nu, s in adder(cur, n, k):
                if not contains(outer, nu):
                    continue
                if primed:
                    beta[label - 1] += k
                else:
                    alpha[label - 1] += k
                rec(pos + 1, nu, alpha, beta, spin + s)
                if primed:
                    beta[label - 1] -= k
                else:
                    alpha[label - 1] -= k

    rec(0, inner, [0] * m_unprimed, [0] * m_primed, 0)
    return {k: v for k, v in out.items() if v}


# -- q = 1 and quotient helpers ----------------------------------------------


def skew_schur(outer, inner) -> SymFunc:
    """s_{outer/inner} in the Schur basis via Littlewood-Richardson numbers."""
    outer, inner = tuple(outer), tuple(inner)
    d = size(outer) - size(inner)
    if d < 0 or not contains(outer, inner):
        return SymFunc("schur")
    coeffs = {}
    for nu in partitions_of(d):
        c = lr_coefficient(inner, nu, outer)
        if c:
            coeffs[nu] = c
    return SymFunc("schur", coeffs)


def quotient_schur_product(outer, n: int, inner=None) -> SymFunc:
    """prod_i s_{outer^(i)/inner^(i)} over the n-quotients, computed on a
    common abacus."""
    outer = tuple(outer)
    inner = _default_inner(outer, inner, n)
    if n_core(outer, n) != n_core(inner, n):
        return SymFunc("schur")
    length = -(-max(len(outer), len(inner)) // n) * n
    qo = n_quotient(outer, n, length)
    qi = n_quotient(inner, n, length)
    out = SymFunc.one()
    for a, b in zip(qo, qi):
        out = out * skew_schur(a, b)
    return convert(out, "schur")


def G_at_one(outer, n: int, inner=None) -> SymFunc:
    """G_{outer/inner}(X; 1) in the Schur basis."""
    f = G(outer, n, inner)
    return SymFunc(
        "schur",
        {lam: LaurentPoly.const(eval_at_one(c)) for lam, c in convert(f, "schur").coeffs.items()},
    )
