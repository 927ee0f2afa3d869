"""The Fock space F with its quantum affine and Heisenberg actions.

Vectors are finite maps partition -> LaurentPoly. Residues are taken as
(row - column) mod n; "to the right of" a node means in a larger column.
"""

from __future__ import annotations

from .partitions import (
    add_horizontal_strips,
    add_vertical_strips,
    conjugate,
    n_core,
    part,
    remove_horizontal_strips,
    remove_vertical_strips,
    enumerate_border_ribbon_strips,
    removable_border_strips,
    size,
)
from .qcoeff import ONE, ZERO, LaurentPoly, bar_q, subst_neg_qinv
from .ribbonfn import G
from .symfunc import SymFunc, transition


class FockVector:
    """sum_lam c_lam |lam> with nonzero LaurentPoly coefficients."""

    __slots__ = ("n", "_entries")

    def __init__(self, n: int, entries=None):
        self.n = n
        out = {}
        for lam, c in (entries or {}).items():
            c = LaurentPoly.coerce(c)
            if c:
                out[tuple(lam)] = c
        self._entries = out

    @classmethod
    def basis(cls, n: int, lam=()) -> FockVector:
        return cls(n, {tuple(lam): ONE})

    @classmethod
    def vacuum(cls, n: int) -> FockVector:
        return cls.basis(n, ())

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def items(self):
        return sorted(self._entries.items(), key=lambda t: (size(t[0]), t[0]))

    def coeff(self, lam) -> LaurentPoly:
        return self._entries.get(tuple(lam), ZERO)

    def is_zero(self) -> bool:
        return not self._entries

    def _check(self, other):
        if other.n != self.n:
            raise ValueError("Fock vectors of different levels")

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        self._check(other)
        out = dict(self._entries)
        for lam, c in other._entries.items():
            out[lam] = out.get(lam, ZERO) + c
        return FockVector(self.n, out)

    def __neg__(self):
        return FockVector(self.n, {lam: -c for lam, c in self._entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, FockVector):
            return NotImplemented
        c = LaurentPoly.coerce(c)
        return FockVector(self.n, {lam: v * c for lam, v in self._entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.n == other.n and self._entries == other._entries

    def __hash__(self):
        return hash((self.n, frozenset(self._entries.items())))

    def __repr__(self):
        return f"FockVector({self})"

    def __str__(self):
        if not self._entries:
            return "0"
        return " + ".join(f"({c})|{','.join(map(str, lam))}>" for lam, c in self.items())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"part": ",".join(map(str, lam)), "poly": c.to_json()} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> FockVector:
        entries = {}
        for e in data["entries"]:
            text = e["part"]
            lam = tuple(int(x) for x in text.split(",")) if text else ()
            entries[lam] = LaurentPoly.from_json(e["poly"])
        return cls(data["n"], entries)


def _linear(v: FockVector, action) -> FockVector:
    """Extend a basis action lam -> [(mu, coeff)] linearly."""
    out = {}
    for lam, c in v._entries.items():
        for mu, d in action(lam):
            out[mu] = out.get(mu, ZERO) + c * d
    return FockVector(v.n, out)


# -- the quantum affine action ----------------------------------------------


def residue(cell, n: int) -> int:
    r, c = cell
    return (r - c) % n


def addable_nodes(lam) -> list:
    out = []
    for r in range(1, len(lam) + 2):
        c = part(lam, r) + 1
        if r == 1 or part(lam, r - 1) >= c:
            out.append((r, c))
    return out


def removable_nodes(lam) -> list:
    return [(r, lam[r - 1]) for r in range(1, len(lam) + 1) if part(lam, r + 1) < lam[r - 1]]


def _with_cell(lam, cell, delta):
    r, _ = cell
    parts = list(lam) + [0]
    parts[r - 1] += delta
    return tuple(p for p in parts if p)


def N_i(lam, i: int, n: int) -> int:
    return sum(1 for x in addable_nodes(lam) if residue(x, n) == i) - sum(
        1 for x in removable_nodes(lam) if residue(x, n) == i
    )


def N_zero(lam, n: int) -> int:
    return sum(1 for r, p in enumerate(lam, 1) for c in range(1, p + 1) if residue((r, c), n) == 0)


def _count_side(lam, i, n, col, right: bool) -> int:
    def side(x):
        return x[1] > col if right else x[1] < col

    add = sum(1 for x in addable_nodes(lam) if residue(x, n) == i and side(x))
    rem = sum(1 for x in removable_nodes(lam) if residue(x, n) == i and side(x))
    return add - rem


def apply_f(i: int, v: FockVector) -> FockVector:
    n = v.n
    if not 0 <= i < n:
        raise ValueError(f"residue {i} out of range for n={n}")

    def act(lam):
        for node in addable_nodes(lam):
            if residue(node, n) == i:
                yield _with_cell(lam, node, 1), LaurentPoly.q_power(_count_side(lam, i, n, node[1], True))

    return _linear(v, act)


def apply_e(i: int, v: FockVector) -> FockVector:
    n = v.n
    if not 0 <= i < n:
        raise ValueError(f"residue {i} out of range for n={n}")

    def act(lam):
        for node in removable_nodes(lam):
            if residue(node, n) == i:
                mu = _with_cell(lam, node, -1)
                yield mu, LaurentPoly.q_power(-_count_side(mu, i, n, node[1], False))

    return _linear(v, act)


def apply_qh(i: int, v: FockVector, power: int = 1) -> FockVector:
    """q^{power * h_i}."""
    return _linear(v, lambda lam: [(lam, LaurentPoly.q_power(power * N_i(lam, i, v.n)))])


def apply_qD(v: FockVector, power: int = 1) -> FockVector:
    return _linear(v, lambda lam: [(lam, LaurentPoly.q_power(power * N_zero(lam, v.n)))])


# -- Heisenberg operators -------------------------------------------------------


def _neg_q_pow(s: int) -> LaurentPoly:
    """(-q)^{-s}."""
    return LaurentPoly.q_power(-s, -1 if s % 2 else 1)


def _strip_op(v: FockVector, k: int, strips) -> FockVector:
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = v.n
    return _linear(v, lambda lam: [(mu, _neg_q_pow(s)) for mu, s in strips(lam, n, k)])


def apply_V(k: int, v: FockVector) -> FockVector:
    return _strip_op(v, k, add_horizontal_strips)


def apply_U(k: int, v: FockVector) -> FockVector:
    return _strip_op(v, k, remove_horizontal_strips)


def apply_Vtilde(k: int, v: FockVector) -> FockVector:
    return _strip_op(v, k, add_vertical_strips)


def apply_Utilde(k: int, v: FockVector) -> FockVector:
    return _strip_op(v, k, remove_vertical_strips)


def _compose(op, seq, v):
    # seq = (a_1, ..., a_l) applies op(a_1) first
    for k in seq:
        v = op(k, v)
    return v


def apply_V_seq(seq, v: FockVector) -> FockVector:
    return _compose(apply_V, seq, v)


def apply_B(k: int, v: FockVector) -> FockVector:
    """B_{-k} (k < 0) adds border ribbon strips of size |k|; B_k (k > 0)
    removes them. Coefficients are X(-q^{-1})."""
    if k == 0:
        raise ValueError("B_0 is not defined")
    n = v.n

    def weight(b):
        sign = -1 if (b.height + b.spin) % 2 else 1
        return LaurentPoly.q_power(-b.spin, sign)

    if k < 0:
        def act(lam):
            acc = {}
            for b in enumerate_border_ribbon_strips(lam, n, -k):
                acc[b.outer] = acc.get(b.outer, ZERO) + weight(b)
            return acc.items()
    else:
        def act(lam):
            acc = {}
            for b in removable_border_strips(lam, n, k):
                acc[b.inner] = acc.get(b.inner, ZERO) + weight(b)
            return acc.items()

    return _linear(v, act)


def apply_B_seq(seq, v: FockVector) -> FockVector:
    return _compose(apply_B, seq, v)


def apply_S(lam, v: FockVector, route: str = "kostka") -> FockVector:
    """S_lam = s_lam(Y^{-1}).

    route "kostka": sum_rho [s_lam : h_rho] V_rho.
    route "character": sum_mu z_mu^{-1} chi^lam_mu B_{-mu}.
    """
    lam = tuple(lam)
    d = size(lam)
    if route == "kostka":
        row = transition("schur", "homogeneous", d)[lam]
        op = apply_V
        sign = 1
    elif route == "character":
        row = transition("schur", "powersum", d)[lam]
        op = apply_B
        sign = -1
    else:
        raise ValueError(f"unknown route {route!r}")
    out = FockVector(v.n)
    for rho, c in row.items():
        w = v
        for k in rho:
            w = op(sign * k, w)
        out = out + w * c
    return out


def prime(v: FockVector) -> FockVector:
    """Semilinear |lam> -> |lam'>, q -> q^{-1}."""
    return FockVector(v.n, {conjugate(lam): bar_q(c) for lam, c in v._entries.items()})


def phi(v: FockVector) -> SymFunc:
    """Semilinear (q -> -q^{-1}) map |lam> -> G_lam."""
    out = SymFunc("monomial")
    for lam, c in v._entries.items():
        out = out + G(lam, v.n, n_core(lam, v.n)) * subst_neg_qinv(c)
    return out


def truncated_basis(n: int, max_size: int) -> list:
    """All |lam> with |lam| <= max_size."""
    from .partitions import partitions_upto

    return [FockVector.basis(n, lam) for lam in partitions_upto(max_size)]


def heisenberg_scalar(k: int, n: int) -> LaurentPoly:
    """k (1 + q^{-2k} + ... + q^{-2k(n-1)})."""
    from .qcoeff import geometric_sum

    return bar_q(geometric_sum(n, k)) * k
