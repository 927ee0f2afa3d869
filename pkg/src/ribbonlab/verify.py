"""Mechanical checks of the ribbon function identities over finite grids.

Each identity expands into independent cells (one parameter choice each).
A cell compares two exact expressions and records the first difference
when they disagree. Cells may run on a thread pool capped by the
RIBBONLAB_THREADS environment variable; the report is ordered by the
cell parameters, so output never depends on scheduling.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import domino
from .fock import (
    FockVector,
    apply_B,
    apply_e,
    apply_f,
    apply_S,
    apply_V,
    heisenberg_scalar,
    phi,
)
from .partitions import (
    add_horizontal_strips,
    add_ribbons,
    add_vertical_strips,
    conjugate,
    enumerate_border_ribbon_strips,
    format_partition,
    horizontal_strip_spin,
    mspin,
    n_core,
    partitions_of,
    partitions_upto,
    remove_horizontal_strips,
    remove_vertical_strips,
    removable_border_strips,
    size,
)
from .qcoeff import ONE, ZERO, LaurentPoly, bar_q, subst_neg_qinv
from .ribbonfn import G, G_at_one, K_poly, X_poly, q_lr, quotient_schur_product
from .symfunc import (
    SymFunc,
    bold_e,
    bold_h,
    convert,
    kostka,
    omega_n,
    perp,
    specialize,
    to_polynomial,
    upsilon,
)


@dataclass
class CellResult:
    params: dict
    passed: bool
    counterexample: dict | None = None
    terms: list | None = None

    def to_json(self) -> dict:
        out = {"params": self.params, "passed": self.passed}
        if self.terms is not None:
            out["terms"] = self.terms
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class VerifyReport:
    identity: str
    grid: dict
    cells: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells)

    @property
    def failures(self) -> list:
        return [c for c in self.cells if not c.passed]

    def first_counterexample(self) -> dict | None:
        for c in self.cells:
            if not c.passed:
                return {"params": c.params, **(c.counterexample or {})}
        return None

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "identity": self.identity,
            "grid": self.grid,
            "passed": self.passed,
            "n_cells": len(self.cells),
            "n_failed": len(self.failures),
            "first_counterexample": self.first_counterexample(),
            "cells": [c.to_json() for c in self.cells],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity", "params", "passed", "counterexample"])
        for c in self.cells:
            w.writerow(
                [
                    self.identity,
                    json.dumps(c.params, sort_keys=True),
                    "pass" if c.passed else "fail",
                    json.dumps(c.counterexample, sort_keys=True) if c.counterexample else "",
                ]
            )
        return buf.getvalue()

    def to_pretty(self) -> str:
        lines = [
            f"{self.identity}: {len(self.cells) - len(self.failures)}/{len(self.cells)} cells pass"
            f" ({self.wall_time:.2f}s)"
        ]
        for c in self.cells:
            desc = " ".join(f"{k}={v}" for k, v in c.params.items())
            lines.append(f"  {'PASS' if c.passed else 'FAIL'} {desc}")
            for lam, poly in c.terms or []:
                lines.append(f"      ({poly}) G[{lam}]")
            if c.counterexample:
                for k, v in c.counterexample.items():
                    lines.append(f"      {k}: {v}")
        return "\n".join(lines)


# -- helpers -----------------------------------------------------------------------


def _fmt(lam) -> str:
    return format_partition(tuple(lam))


def _sym_diff(lhs: SymFunc, rhs: SymFunc) -> dict | None:
    if lhs == rhs:
        return None
    return {
        "lhs": str(convert(lhs, "schur")),
        "rhs": str(convert(rhs, "schur")),
        "lhs_minus_rhs": str(convert(lhs - rhs, "schur")),
    }


def _fock_diff(lhs: FockVector, rhs: FockVector) -> dict | None:
    if lhs == rhs:
        return None
    return {"lhs": str(lhs), "rhs": str(rhs), "lhs_minus_rhs": str(lhs - rhs)}


def _poly_diff(lhs: dict, rhs: dict) -> dict | None:
    for key in sorted(set(lhs) | set(rhs)):
        a, b = lhs.get(key, ZERO), rhs.get(key, ZERO)
        if a != b:
            return {"monomial": [list(part) for part in key], "lhs": str(a), "rhs": str(b)}
    return None


def _g_sum(pairs, n: int) -> tuple[SymFunc, list]:
    """sum c_mu G_mu, merging repeated mu; also the sorted term list."""
    acc = {}
    for mu, c in pairs:
        acc[mu] = acc.get(mu, ZERO) + c
    total = SymFunc("monomial")
    terms = []
    for mu in sorted(acc, key=lambda m: (size(m), m), reverse=True):
        c = acc[mu]
        if c:
            total = total + G(mu, n) * c
            terms.append([_fmt(mu), str(c)])
    return total, terms


def _ribbon_closure(mu, n: int, steps: int) -> list:
    """levels[t] = partitions lam with lam/mu tileable by t n-ribbons."""
    levels = [{tuple(mu)}]
    for _ in range(steps):
        nxt = set()
        for lam in levels[-1]:
            nxt.update(nu for nu, _ in add_ribbons(lam, n))
        levels.append(nxt)
    return [sorted(level) for level in levels]


def _cores(n: int, max_size: int) -> list:
    return [lam for lam in partitions_upto(max_size) if n_core(lam, n) == lam]


def _with_core(core, n: int, weight: int) -> list:
    """Partitions with the given n-core and n-weight."""
    return _ribbon_closure(core, n, weight)[weight]


def _poly_mul(a: dict, b: dict, cap: int) -> dict:
    """Product of polynomials keyed by (x exponents, y exponents), dropping
    terms of x-degree above cap."""
    out = {}
    for (ax, ay), ca in a.items():
        da = sum(ax)
        for (bx, by), cb in b.items():
            if da + sum(bx) > cap:
                continue
            key = (tuple(u + v for u, v in zip(ax, bx)), tuple(u + v for u, v in zip(ay, by)))
            out[key] = out.get(key, ZERO) + ca * cb
    return {k: v for k, v in out.items() if v}


def _tensor(fx: SymFunc, fy: SymFunc, nvars: int, coeff=ONE) -> dict:
    px, py = to_polynomial(fx, nvars), to_polynomial(fy, nvars)
    return {(a, b): ca * cb * coeff for a, ca in px.items() for b, cb in py.items()}


def _add_into(acc: dict, poly: dict) -> None:
    for k, v in poly.items():
        acc[k] = acc.get(k, ZERO) + v


def _clean(poly: dict) -> dict:
    return {k: v for k, v in poly.items() if v}


def _kernel(n: int, degree: int, nvars: int, dual: bool) -> dict:
    """Truncated prod_{i,j} prod_{k<n} 1/(1 - x_i y_j q^{2k}), or for dual
    prod (1 + x_i y_j q^{2k}), expanded factor by factor."""
    zero = (0,) * nvars
    out = {(zero, zero): ONE}
    for i in range(nvars):
        for j in range(nvars):
            for k in range(n):
                factor = {}
                top = 1 if dual else degree
                for t in range(top + 1):
                    x = tuple(t if a == i else 0 for a in range(nvars))
                    y = tuple(t if b == j else 0 for b in range(nvars))
                    factor[(x, y)] = LaurentPoly.q_power(2 * k * t)
                out = _poly_mul(out, factor, degree)
    return out


def _sort_value(v):
    # partition strings sort by size then parts; other strings after them
    if isinstance(v, str):
        if v == "" or v.replace(",", "").isdigit():
            parts = tuple(int(x) for x in v.split(",")) if v else ()
            return (0, sum(parts), parts)
        return (1, v)
    return (0, v)


def _cell_key(params: dict):
    return tuple((k, _sort_value(v)) for k, v in params.items())


# -- identity grids ------------------------------------------------------------------
#
# Each grid function yields (params, thunk); the thunk returns
# (passed, counterexample, terms).


def _shapes(opts, default_max):
    if opts.get("nu") is not None:
        return [tuple(opts["nu"])]
    return list(partitions_upto(opts.get("sizemax") or default_max))


def _ks(opts, default_max):
    if opts.get("k") is not None:
        return [opts["k"]]
    return list(range(1, (opts.get("kmax") or default_max) + 1))


def _raising(kind):
    def grid(opts):
        for n in opts["n"]:
            for nu in _shapes(opts, 8):
                for k in _ks(opts, 3):
                    yield {"n": n, "nu": _fmt(nu), "k": k}, _raising_cell(kind, n, nu, k)

    return grid


def _raising_cell(kind, n, nu, k):
    def run():
        g = G(nu, n)
        if kind == "pieri":
            lhs = bold_h(k, n) * g
            pairs = [(mu, LaurentPoly.q_power(s)) for mu, s in add_horizontal_strips(nu, n, k)]
        elif kind == "dual-pieri":
            lhs = bold_e(k, n) * g
            pairs = [(mu, LaurentPoly.q_power(s)) for mu, s in add_vertical_strips(nu, n, k)]
        else:
            lhs = upsilon(SymFunc.p(k), n) * g
            outs = sorted({b.outer for b in enumerate_border_ribbon_strips(nu, n, k)})
            pairs = [(mu, X_poly(mu, nu, n, (k,))) for mu in outs]
        rhs, terms = _g_sum(pairs, n)
        diff = _sym_diff(lhs, rhs)
        return diff is None, diff, terms

    return run


def _lowering(kind):
    def grid(opts):
        for n in opts["n"]:
            for lam in _shapes(opts, 8):
                for k in _ks(opts, 3):
                    yield {"n": n, "nu": _fmt(lam), "k": k}, _lowering_cell(kind, n, lam, k)

    return grid


def _lowering_cell(kind, n, lam, k):
    def run():
        g = G(lam, n)
        if kind == "lowering-mn":
            lhs = perp(SymFunc.p(k), g)
            ins = sorted({b.inner for b in removable_border_strips(lam, n, k)})
            pairs = [(mu, X_poly(lam, mu, n, (k,))) for mu in ins]
            rhs, terms = _g_sum(pairs, n)
            diff = _sym_diff(lhs, rhs)
            return diff is None, diff, terms
        lhs_h = perp(SymFunc.h(k), g)
        rhs_h, terms = _g_sum(
            [(mu, LaurentPoly.q_power(s)) for mu, s in remove_horizontal_strips(lam, n, k)], n
        )
        lhs_e = perp(SymFunc.e(k), g)
        rhs_e, terms_e = _g_sum(
            [(mu, LaurentPoly.q_power(s)) for mu, s in remove_vertical_strips(lam, n, k)], n
        )
        diff = _sym_diff(lhs_h, rhs_h)
        if diff is not None:
            return False, {"operator": "h_k^perp", **diff}, terms
        diff = _sym_diff(lhs_e, rhs_e)
        if diff is not None:
            return False, {"operator": "e_k^perp", **diff}, terms_e
        return True, None, terms

    return run


def _cauchy_grid(dual):
    def grid(opts):
        for n in opts["n"]:
            cores = [tuple(opts["core"])] if opts.get("core") is not None else _cores(n, 1)
            for core in cores:
                params = {"n": n, "core": _fmt(core), "degree": opts["degree"], "vars": opts["vars"]}
                yield params, _cauchy_cell(n, core, opts["degree"], opts["vars"], dual)

    return grid


def _cauchy_cell(n, core, degree, nvars, dual):
    def run():
        lhs = {}
        for d in range(degree + 1):
            for lam in _with_core(core, n, d):
                if dual:
                    gx = G(conjugate(lam), n)
                    gy = G(lam, n)
                    gy = SymFunc("monomial", {a: bar_q(c) for a, c in gy.coeffs.items()})
                    _add_into(lhs, _tensor(gx, gy, nvars, LaurentPoly.q_power((n - 1) * d)))
                else:
                    g = G(lam, n)
                    _add_into(lhs, _tensor(g, g, nvars))
        lhs = _clean(lhs)
        rhs = _kernel(n, degree, nvars, dual)
        diff = _poly_diff(lhs, rhs)
        return diff is None, diff, None

    return run


def _skew_cauchy_grid(opts):
    for n in opts["n"]:
        for mu in _shapes(opts, 3):
            params = {"n": n, "mu": _fmt(mu), "degree": opts["degree"], "vars": opts["vars"]}
            yield params, _skew_cauchy_cell(n, mu, opts["degree"], opts["vars"])


def _skew_cauchy_cell(n, mu, degree, nvars):
    def run():
        gmu = G(mu, n)
        # kernel terms have equal x- and y-degree, so y-degree stays <= degree
        cap = degree + size(mu)
        lhs = _poly_mul(_tensor(gmu, SymFunc.one(), nvars), _kernel(n, degree, nvars, False), cap)
        rhs = {}
        for level in _ribbon_closure(mu, n, degree):
            for lam in level:
                _add_into(rhs, _tensor(G(lam, n), G(lam, n, mu), nvars))
        diff = _poly_diff(lhs, _clean(rhs))
        return diff is None, diff, None

    return run


def _omega_grid(opts):
    for n in opts["n"]:
        sizemax = opts.get("sizemax") or 10
        inners = [tuple(opts["inner"])] if opts.get("inner") is not None else list(partitions_upto(sizemax))
        for mu in inners:
            steps = (sizemax - size(mu)) // n
            for level in _ribbon_closure(mu, n, steps)[1:]:
                for lam in level:
                    if opts.get("nu") is not None and lam != tuple(opts["nu"]):
                        continue
                    yield {"n": n, "outer": _fmt(lam), "inner": _fmt(mu)}, _omega_cell(n, lam, mu)
        for d in range(1, (opts.get("kmax") or 4) + 1):
            for lam in partitions_of(d):
                yield {"n": n, "schur": _fmt(lam)}, _omega_algebra_cell(n, lam)


def _omega_cell(n, lam, mu):
    def run():
        lhs = omega_n(G(lam, n, mu), n)
        rhs = G(conjugate(lam), n, conjugate(mu))
        diff = _sym_diff(lhs, rhs)
        return diff is None, diff, None

    return run


def _omega_algebra_cell(n, lam):
    def run():
        k = size(lam)
        f = SymFunc.s(lam) * LaurentPoly.q_power(1) + SymFunc.s(conjugate(lam))
        checks = [
            ("omega_n(omega_n(f)) = f", omega_n(omega_n(f, n), n), f),
            (
                "q^{2(n-1)k} omega_n(Upsilon f) = Upsilon(omega_n f)",
                omega_n(upsilon(f, n), n) * LaurentPoly.q_power(2 * (n - 1) * k),
                upsilon(omega_n(f, n), n),
            ),
            (
                "omega_n(Upsilon s_lam) = q^{-(n-1)k} Upsilon s_lam'",
                omega_n(upsilon(SymFunc.s(lam), n), n),
                upsilon(SymFunc.s(conjugate(lam)), n) * LaurentPoly.q_power(-(n - 1) * k),
            ),
        ]
        for name, a, b in checks:
            diff = _sym_diff(a, b)
            if diff is not None:
                return False, {"check": name, **diff}, None
        return True, None, None

    return run


def _compositions(d: int):
    if d == 0:
        yield ()
        return
    for first in range(1, d + 1):
        for rest in _compositions(d - first):
            yield (first,) + rest


def _symmetry_grid(opts):
    for n in opts["n"]:
        for lam in _shapes(opts, 12):
            yield {"n": n, "shape": _fmt(lam)}, _symmetry_cell(n, lam)


def _symmetry_cell(n, lam):
    def run():
        core = n_core(lam, n)
        d = (size(lam) - size(core)) // n
        for alpha in _compositions(d):
            a = K_poly(lam, core, n, alpha)
            b = K_poly(lam, core, n, tuple(sorted(alpha, reverse=True)))
            if a != b:
                return False, {"alpha": list(alpha), "K_alpha": str(a), "K_sorted": str(b)}, None
        return True, None, None

    return run


def _heisenberg_grid(opts):
    kmax = opts.get("kmax") or 3
    sizemax = opts.get("sizemax") or 8
    for n in opts["n"]:
        for lam in partitions_upto(sizemax):
            yield {"n": n, "shape": _fmt(lam), "check": "commutator"}, _commutator_cell(n, lam, kmax)
        for lam in partitions_upto(min(sizemax, 6)):
            yield {"n": n, "shape": _fmt(lam), "check": "commutes-with-Uq"}, _uq_cell(n, lam, kmax)


def _commutator_cell(n, lam, kmax):
    def run():
        v = FockVector.basis(n, lam)
        for k in range(1, kmax + 1):
            for l in range(1, kmax + 1):
                lhs = apply_B(k, apply_B(-l, v)) - apply_B(-l, apply_B(k, v))
                rhs = v * heisenberg_scalar(k, n) if k == l else FockVector(n)
                diff = _fock_diff(lhs, rhs)
                if diff is not None:
                    return False, {"k": k, "l": l, **diff}, None
        return True, None, None

    return run


def _uq_cell(n, lam, kmax):
    def run():
        v = FockVector.basis(n, lam)
        for k in range(1, kmax + 1):
            for sign in (1, -1):
                for i in range(n):
                    for name, op in (("f", apply_f), ("e", apply_e)):
                        a = apply_B(sign * k, op(i, v))
                        b = op(i, apply_B(sign * k, v))
                        diff = _fock_diff(a, b)
                        if diff is not None:
                            return False, {"B": sign * k, "op": f"{name}_{i}", **diff}, None
        return True, None, None

    return run


def _newton_grid(opts):
    kmax = opts.get("kmax") or 4
    sizemax = opts.get("sizemax") or 5
    for n in opts["n"]:
        for lam in partitions_upto(sizemax):
            yield {"n": n, "shape": _fmt(lam)}, _newton_cell(n, lam, kmax)


def _newton_cell(n, lam, kmax):
    def run():
        v = FockVector.basis(n, lam)
        for k in range(1, kmax + 1):
            lhs = apply_V(k, v) * k
            rhs = FockVector(n)
            for i in range(1, k + 1):
                w = apply_B(-i, v)
                rhs = rhs + (apply_V(k - i, w) if k > i else w)
            diff = _fock_diff(lhs, rhs)
            if diff is not None:
                return False, {"k": k, **diff}, None
        return True, None, None

    return run


def _lr_grid(opts):
    kmax = opts.get("kmax") or 2
    for n in opts["n"]:
        for mu in _shapes(opts, 4):
            for d in range(1, kmax + 1):
                for lam in partitions_of(d):
                    yield {"n": n, "lambda": _fmt(lam), "mu": _fmt(mu)}, _lr_cell(n, lam, mu)


def _lr_cell(n, lam, mu):
    def run():
        nus = _ribbon_closure(mu, n, size(lam))[-1]
        pairs, fock = [], {}
        for nu in nus:
            c = q_lr(nu, n, mu, check=False).get(lam, ZERO)
            if c:
                pairs.append((nu, c))
                fock[nu] = subst_neg_qinv(c)
        lhs = upsilon(SymFunc.s(lam), n) * G(mu, n)
        rhs, terms = _g_sum(pairs, n)
        diff = _sym_diff(lhs, rhs)
        if diff is not None:
            return False, diff, terms
        diff = _fock_diff(apply_S(lam, FockVector.basis(n, mu)), FockVector(n, fock))
        if diff is not None:
            return False, {"check": "S_lambda|mu>", **diff}, terms
        return True, None, terms

    return run


def _phican_grid(opts):
    kmax = opts.get("kmax") or 3
    for n in opts["n"]:
        cores = [tuple(opts["core"])] if opts.get("core") is not None else _cores(n, 1)
        for core in cores:
            for d in range(1, kmax + 1):
                for lam in partitions_of(d):
                    yield {"n": n, "lambda": _fmt(lam), "core": _fmt(core)}, _phican_cell(n, lam, core)


def _phican_cell(n, lam, core):
    def run():
        target = upsilon(SymFunc.s(lam), n)
        via_g = SymFunc("monomial")
        via_s = SymFunc("schur")
        for mu in _with_core(core, n, size(lam)):
            coeffs = q_lr(mu, n)
            c = coeffs.get(lam, ZERO)
            if not c:
                continue
            via_g = via_g + G(mu, n) * c
            for nu, d in coeffs.items():
                via_s = via_s + SymFunc.s(nu) * (c * d)
        for name, other in (("sum c G", via_g), ("sum c c s", via_s)):
            diff = _sym_diff(target, other)
            if diff is not None:
                return False, {"expansion": name, **diff}, None
        return True, None, None

    return run


def _phi_grid(opts):
    kmax = opts.get("kmax") or 3
    sizemax = opts.get("sizemax") or 3
    for n in opts["n"]:
        for mu in _shapes(opts, sizemax):
            for k in range(1, kmax + 1):
                yield {"n": n, "shape": _fmt(mu), "k": k}, _phi_cell(n, mu, k)
        for d in range(1, sizemax + 1):
            for lam in partitions_of(d):
                yield {"n": n, "schur": _fmt(lam)}, _phi_schur_cell(n, lam)


def _phi_cell(n, mu, k):
    def run():
        v = FockVector.basis(n, mu)
        g = phi(v)
        checks = [
            ("Phi(B_-k v) = Upsilon(p_k) Phi(v)", phi(apply_B(-k, v)), upsilon(SymFunc.p(k), n) * g),
            ("Phi(B_k v) = k d/dp_k Phi(v)", phi(apply_B(k, v)), perp(SymFunc.p(k), g)),
        ]
        for name, a, b in checks:
            diff = _sym_diff(a, b)
            if diff is not None:
                return False, {"check": name, **diff}, None
        return True, None, None

    return run


def _phi_schur_cell(n, lam):
    def run():
        a = phi(apply_S(lam, FockVector.vacuum(n)))
        b = upsilon(SymFunc.s(lam), n)
        diff = _sym_diff(a, b)
        return diff is None, diff, None

    return run


def _mspin_grid(opts):
    for n in opts["n"]:
        for k in _ks(opts, 3):
            yield {"n": n, "k": k}, _mspin_cell(n, k)


def _mspin_cell(n, k):
    def run():
        shapes = [lam for lam in partitions_of(n * k) if len(lam) <= n and n_core(lam, n) == ()]
        standard = (1,) * k
        lhs = ZERO
        lhs_strip = ZERO
        for lam in shapes:
            gen = K_poly(lam, (), n, standard)
            lhs = lhs + gen.shift(mspin(lam, (), n))
            lhs_strip = lhs_strip + gen.shift(horizontal_strip_spin(lam, (), n))
        values = [LaurentPoly.q_power(2 * i) for i in range(n)]
        rhs = ZERO
        for mu in partitions_of(k):
            rhs = rhs + specialize(SymFunc.s(mu), values) * kostka(mu, standard)
        if lhs != rhs:
            return False, {"lhs": str(lhs), "rhs": str(rhs)}, None
        if lhs_strip != rhs:
            return False, {"lhs_with_strip_spin": str(lhs_strip), "rhs": str(rhs)}, None
        return True, None, [["sum", str(lhs)]]

    return run


def _q1_grid(opts):
    for n in opts["n"]:
        for lam in _shapes(opts, 12 if n > 1 else 8):
            yield {"n": n, "shape": _fmt(lam)}, _q1_cell(n, lam)


def _q1_cell(n, lam):
    def run():
        if n == 1:
            diff = _sym_diff(G(lam, 1), SymFunc.s(lam))
        else:
            diff = _sym_diff(G_at_one(lam, n), quotient_schur_product(lam, n))
        return diff is None, diff, None

    return run


def _qlr_grid(opts):
    for n in opts["n"]:
        for lam in _shapes(opts, 12):
            yield {"n": n, "shape": _fmt(lam)}, _qlr_cell(n, lam)


def _qlr_cell(n, lam):
    def run():
        try:
            q_lr(lam, n, check=True)
        except ArithmeticError as exc:
            return False, {"error": str(exc)}, None
        return True, None, None

    return run


def _domino_grid(opts):
    length = opts.get("sizemax") or 3
    for core in domino.two_cores(3):
        for m in range(length + 1):
            yield {"check": "rsk", "core": _fmt(core), "length": m}, _rsk_cell(core, m)
    yield {"check": "rsk-random", "core": "", "length": 5}, _rsk_random_cell(opts.get("seed", 0))
    yield {"check": "increasing-insertion", "core": "", "length": 3}, _increasing_cell()
    yield {"check": "cauchy", "core": "", "length": 3}, _domino_cauchy_cell(3, 2)


def _rsk_case(w, core):
    p, q = domino.rsk(w, core)
    if not (domino.is_semistandard(p) and domino.is_semistandard(q)):
        return {"biword": w.format(), "error": "tableau not semistandard"}
    if p.shape != q.shape:
        return {"biword": w.format(), "error": "shapes differ"}
    if w.tc != p.spin + q.spin:
        return {"biword": w.format(), "error": f"tc {w.tc} != spins {p.spin}+{q.spin}"}
    back = domino.inverse_rsk(p, q)
    if back != w:
        return {"biword": w.format(), "error": f"inverse gave {back.format()!r}"}
    return None


def _rsk_cell(core, m):
    def run():
        images = set()
        for w in domino.all_biwords(m, 2, 2):
            err = _rsk_case(w, core)
            if err:
                return False, err, None
            p, q = domino.rsk(w, core)
            images.add((p, q))
        return True, None, [["pairs", str(len(images))]]

    return run


def _rsk_random_cell(seed):
    def run():
        rng = random.Random(seed)
        for _ in range(200):
            m = rng.randint(0, 5)
            w = domino.ColoredBiword(
                tuple((rng.randint(0, 1), rng.randint(1, 3), rng.randint(1, 3)) for _ in range(m))
            )
            err = _rsk_case(w, ())
            if err:
                return False, err, None
        return True, None, None

    return run


def _standard_domino_tableaux(max_dominoes: int, max_label: int = 5):
    """(tableau, labels used) for standard domino tableaux on the empty core
    with at most max_dominoes dominoes and distinct labels <= max_label."""
    from itertools import combinations

    chains = [((),)]
    frontier = [((),)]
    for _ in range(max_dominoes):
        frontier = [c + (mu,) for c in frontier for mu, _h in add_ribbons(c[-1], 2)]
        chains.extend(frontier)
    for chain in chains:
        t = domino.from_chain(chain)
        for used in combinations(range(1, max_label + 1), len(chain) - 1):
            relabelled = tuple((used[lab - 1], d) for lab, d in t.dominoes)
            yield domino.DominoTableau((), relabelled), set(used)


def _increasing_cell():
    def run():
        count = 0
        for t, used in _standard_domino_tableaux(3):
            free = [j for j in range(1, 6) if j not in used]
            for i in free:
                for j in free:
                    if i == j:
                        continue
                    for c1 in (0, 1):
                        for c2 in (0, 1):
                            count += 1
                            if not domino.check_increasing_insertion(t, (c1, i), (c2, j)):
                                return False, {"tableau": t.to_json(), "d1": [c1, i], "d2": [c2, j]}, None
        return True, None, [["instances", str(count)]]

    return run


def _domino_cauchy_cell(degree, nvars):
    def run():
        comb = {}
        for m in range(degree + 1):
            for w in domino.all_biwords(m, nvars, nvars):
                p, q = domino.rsk(w)
                x = tuple(q.weight) + (0,) * (nvars - len(q.weight))
                y = tuple(p.weight) + (0,) * (nvars - len(p.weight))
                key = (x, y)
                comb[key] = comb.get(key, ZERO) + LaurentPoly.q_power(p.spin + q.spin)
        alg = {}
        for d in range(degree + 1):
            for lam in _with_core((), 2, d):
                g = G(lam, 2)
                _add_into(alg, _tensor(g, g, nvars))
        diff = _poly_diff(_clean(comb), _clean(alg))
        return diff is None, diff, None

    return run


IDENTITIES = {
    "pieri": _raising("pieri"),
    "dual-pieri": _raising("dual-pieri"),
    "lowering-pieri": _lowering("lowering-pieri"),
    "mn": _raising("mn"),
    "lowering-mn": _lowering("lowering-mn"),
    "cauchy": _cauchy_grid(False),
    "dual-cauchy": _cauchy_grid(True),
    "skew-cauchy": _skew_cauchy_grid,
    "omega": _omega_grid,
    "symmetry": _symmetry_grid,
    "heisenberg": _heisenberg_grid,
    "mn-pieri-equiv": _newton_grid,
    "littlewood-richardson": _lr_grid,
    "phican": _phican_grid,
    "phi-map": _phi_grid,
    "mspin-identity": _mspin_grid,
    "q1": _q1_grid,
    "qlr-positivity": _qlr_grid,
    "domino": _domino_grid,
}

_DEFAULT_N = {"q1": (1, 2, 3)}
_DEFAULT_DEGREE = {"skew-cauchy": 2}
_DEFAULT_VARS = {"skew-cauchy": 2}


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("RIBBONLAB_THREADS", "1")))
    except ValueError:
        return 1


def run(
    identity: str,
    *,
    n=None,
    nu=None,
    k=None,
    kmax=None,
    sizemax=None,
    degree=None,
    nvars=None,
    core=None,
    inner=None,
    threads=None,
) -> VerifyReport:
    """Check one identity over its grid. Unset options take the documented
    desk-scale defaults."""
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
    if isinstance(n, int):
        n = (n,)
    opts = {
        "n": tuple(n) if n is not None else _DEFAULT_N.get(identity, (2, 3)),
        "nu": tuple(nu) if nu is not None else None,
        "k": k,
        "kmax": kmax,
        "sizemax": sizemax,
        "degree": degree if degree is not None else _DEFAULT_DEGREE.get(identity, 3),
        "vars": nvars if nvars is not None else _DEFAULT_VARS.get(identity, 3),
        "core": tuple(core) if core is not None else None,
        "inner": tuple(inner) if inner is not None else None,
    }
    for m in opts["n"]:
        if m < 1:
            raise ValueError("n must be positive")
    grid = {
        key: (_fmt(v) if key in ("nu", "core", "inner") and v is not None else (list(v) if isinstance(v, tuple) else v))
        for key, v in opts.items()
        if v is not None
    }
    start = time.perf_counter()
    cells = sorted(IDENTITIES[identity](opts), key=lambda c: _cell_key(c[0]))

    def execute(cell):
        params, thunk = cell
        passed, counter, terms = thunk()
        return CellResult(params, passed, counter, terms)

    workers = threads if threads is not None else _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(execute, cells))
    else:
        results = [execute(c) for c in cells]
    return VerifyReport(identity, grid, results, time.perf_counter() - start)
