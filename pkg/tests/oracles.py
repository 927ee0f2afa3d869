"""Brute-force reference implementations used only by the tests.

Everything here works on raw cell sets and avoids the library's abacus,
strip and tableau routines, so agreement is evidence rather than echo.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def cells(lam):
    return {(r, c) for r, row in enumerate(lam, 1) for c in range(1, row + 1)}


def shape_of(cs):
    rows = {}
    for r, c in cs:
        rows[r] = rows.get(r, 0) + 1
    lam = tuple(rows.get(r, 0) for r in range(1, max(rows, default=0) + 1))
    return lam if cells(lam) == set(cs) else None


def partitions(m, max_part=None):
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def conjugate(lam):
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, (lam[0] if lam else 0) + 1))


def _connected(cs):
    cs = set(cs)
    if not cs:
        return True
    stack = [next(iter(cs))]
    seen = {stack[0]}
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cs and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cs)


def is_ribbon_cells(cs):
    """Connected, no 2x2 square, and higher rows never sit left of lower rows."""
    cs = set(cs)
    if not _connected(cs):
        return False
    for r, c in cs:
        if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cs:
            return False
    for (r1, c1), (r2, c2) in product(cs, cs):
        if r1 < r2 and c1 < c2:
            return False
    return True


def ribbon_spin(rib):
    return len({r for r, _ in rib}) - 1


def _ribbons_containing(cell, pool, n):
    """All n-cell ribbons inside pool containing cell."""
    out = set()

    def grow(cur):
        if len(cur) == n:
            if is_ribbon_cells(cur):
                out.add(frozenset(cur))
            return
        for r, c in list(cur):
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in pool and nb not in cur:
                    grow(cur | {nb})

    grow(frozenset({cell}))
    return out


def _orderable(pieces, inner):
    """Can the pieces be peeled off one at a time, always leaving a partition?"""
    inner_cells = cells(inner)
    cur = set().union(inner_cells, *pieces)
    left = set(pieces)
    while left:
        for p in left:
            rest = cur - p
            if shape_of(rest) is not None or not rest:
                cur = rest
                left.remove(p)
                break
        else:
            return False
    return cur == inner_cells


def tilings(outer, inner, n):
    """All tilings of outer/inner by n-ribbons, as frozensets of ribbons."""
    skew = cells(outer) - cells(inner)
    if len(skew) % n or not cells(inner) <= cells(outer):
        return []
    out = []

    def rec(pool, acc):
        if not pool:
            out.append(frozenset(acc))
            return
        first = min(pool)
        for rib in _ribbons_containing(first, pool, n):
            rec(pool - rib, acc + [rib])

    rec(frozenset(skew), [])
    return [t for t in out if _orderable(t, inner)]


def top_right(rib):
    top = min(r for r, _ in rib)
    return top, max(c for r, c in rib if r == top)


def is_horizontal_tiling(tiling, inner_cells):
    """Each ribbon's top-right cell has nothing of the strip above it."""
    for rib in tiling:
        r, c = top_right(rib)
        if r > 1 and (r - 1, c) not in inner_cells:
            return False
    return True


def horizontal_strip_spins(outer, inner, n):
    """Spins of the horizontal tilings of outer/inner (expected: at most one)."""
    inner_cells = cells(inner)
    return [sum(ribbon_spin(r) for r in t) for t in tilings(outer, inner, n) if is_horizontal_tiling(t, inner_cells)]


def max_spin(outer, inner, n):
    spins = [sum(ribbon_spin(r) for r in t) for t in tilings(outer, inner, n)]
    return max(spins) if spins else None


def ribbon_tableaux_generating(outer, inner, n, weight):
    """{spin: count} over semistandard ribbon tableaux of the given weight,
    by labelling brute-force tilings."""
    inner_cells = cells(inner)
    out = {}
    m = len(weight)
    for t in tilings(outer, inner, n):
        ribs = sorted(t, key=sorted)
        for labels in product(range(1, m + 1), repeat=len(ribs)):
            if tuple(labels.count(i) for i in range(1, m + 1)) != tuple(weight):
                continue
            ok = True
            below = set(inner_cells)
            for i in range(1, m + 1):
                layer = [rib for rib, lab in zip(ribs, labels) if lab == i]
                new = below.union(*layer) if layer else set(below)
                if shape_of(new) is None and new:
                    ok = False
                    break
                if not is_horizontal_tiling(layer, below):
                    ok = False
                    break
                below = new
            if ok:
                s = sum(ribbon_spin(rib) for rib in ribs)
                out[s] = out.get(s, 0) + 1
    return out


# -- symmetric function oracles ---------------------------------------------------


def ssyt_polynomial(lam, nvars):
    """s_lam(x_1..x_nvars) as {exponent tuple: count}, by enumerating SSYT."""
    cs = sorted(cells(lam))
    out = {}
    filling = {}

    def rec(i):
        if i == len(cs):
            exps = [0] * nvars
            for v in filling.values():
                exps[v - 1] += 1
            key = tuple(exps)
            out[key] = out.get(key, 0) + 1
            return
        r, c = cs[i]
        lo = 1
        if (r, c - 1) in filling:
            lo = max(lo, filling[(r, c - 1)])
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nvars + 1):
            filling[(r, c)] = v
            rec(i + 1)
            del filling[(r, c)]

    rec(0)
    return out


def poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def power_sum_polynomial(lam, nvars):
    out = {(0,) * nvars: 1}
    for k in lam:
        pk = {tuple(k if j == i else 0 for j in range(nvars)): 1 for i in range(nvars)}
        out = poly_mul(out, pk)
    return out


def monomial_coefficient(poly, mu, nvars):
    key = tuple(mu) + (0,) * (nvars - len(mu))
    return poly.get(key, 0)


def standard_tableaux_count(lam):
    """f^lam by the hook length formula."""
    from math import factorial

    conj = conjugate(lam)
    hooks = 1
    for r, row in enumerate(lam, 1):
        for c in range(1, row + 1):
            hooks *= (row - c) + (conj[c - 1] - r) + 1
    return Fraction(factorial(sum(lam)), hooks)
