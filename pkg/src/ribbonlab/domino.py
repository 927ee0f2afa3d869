"""Domino (n = 2) insertion: Garfinkle's bumping, its semistandard
extension, colored-biword RSK and its inverse.

A domino is a frozenset of two cells (row, column), 1-indexed. Colour 0 is
a horizontal domino, colour 1 a vertical one; the spin of a tableau is its
number of vertical dominoes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .partitions import cells, from_cells, horizontal_strip_tiling, n_core


def is_vertical(dom) -> bool:
    (r1, c1), (r2, c2) = sorted(dom)
    return c1 == c2


def _min_col(dom) -> int:
    return min(c for _, c in dom)


def _max_col(dom) -> int:
    return max(c for _, c in dom)


@dataclass(frozen=True)
class DominoTableau:
    """Labelled dominoes placed on top of a 2-core."""

    core: tuple = ()
    dominoes: tuple = ()  # sorted tuple of (label, frozenset of two cells)

    def __post_init__(self):
        object.__setattr__(self, "core", tuple(self.core))
        doms = tuple(sorted(((lab, frozenset(d)) for lab, d in self.dominoes), key=_dom_key))
        object.__setattr__(self, "dominoes", doms)

    @property
    def shape(self) -> tuple:
        cs = set(cells(self.core))
        for _, d in self.dominoes:
            cs |= d
        return from_cells(cs)

    @property
    def spin(self) -> int:
        return sum(1 for _, d in self.dominoes if is_vertical(d))

    @property
    def weight(self) -> tuple:
        if not self.dominoes:
            return ()
        top = max(lab for lab, _ in self.dominoes)
        return tuple(sum(1 for lab, _ in self.dominoes if lab == i) for i in range(1, top + 1))

    def labels(self) -> list:
        return sorted({lab for lab, _ in self.dominoes})

    def chain(self) -> list:
        """Shapes after adding all dominoes with label <= i, i = 0..max."""
        out = [self.core]
        cs = set(cells(self.core))
        for i in range(1, (max(self.labels()) if self.dominoes else 0) + 1):
            for lab, d in self.dominoes:
                if lab == i:
                    cs |= d
            out.append(from_cells(cs))
        return out

    def to_json(self) -> dict:
        return {
            "core": list(self.core),
            "shape": list(self.shape),
            "spin": self.spin,
            "dominoes": [
                {"label": lab, "cells": [list(c) for c in sorted(d)]} for lab, d in self.dominoes
            ],
        }


def _dom_key(item):
    lab, d = item
    return (lab, sorted(d))


def is_semistandard(t: DominoTableau) -> bool:
    """Every label class forms the horizontal 2-ribbon strip tiling of its
    chain step, and the cells are disjoint from each other and the core."""
    if n_core(t.core, 2) != t.core:
        return False
    seen = set(cells(t.core))
    for _, d in t.dominoes:
        if len(d) != 2 or d & seen:
            return False
        (r1, c1), (r2, c2) = sorted(d)
        if not ((r1 == r2 and c2 == c1 + 1) or (c1 == c2 and r2 == r1 + 1)):
            return False
        seen |= d
    try:
        chain = t.chain()
    except ValueError:
        return False
    for i, (a, b) in enumerate(zip(chain, chain[1:]), 1):
        tiling = horizontal_strip_tiling(b, a, 2)
        if tiling is None:
            return False
        if set(tiling) != {d for lab, d in t.dominoes if lab == i}:
            return False
    return True


def from_chain(chain, core=None) -> DominoTableau:
    """The domino tableau whose label-i dominoes tile chain[i]/chain[i-1]."""
    chain = [tuple(c) for c in chain]
    doms = []
    for i, (a, b) in enumerate(zip(chain, chain[1:]), 1):
        tiling = horizontal_strip_tiling(b, a, 2)
        if tiling is None:
            raise ValueError(f"{b}/{a} is not a horizontal domino strip")
        doms.extend((i, d) for d in tiling)
    return DominoTableau(chain[0] if core is None else core, tuple(doms))


# -- standard insertion on refined keys -------------------------------------


def _shape_cells(core, placed) -> set:
    cs = set(cells(core))
    for d in placed.values():
        cs |= d
    return cs


def _row_len(cs, r) -> int:
    return max((c for rr, c in cs if rr == r), default=0)


def _col_len(cs, c) -> int:
    return max((r for r, cc in cs if cc == c), default=0)


def _insert_keys(core, doms: dict, key, colour: int) -> tuple[dict, frozenset]:
    """Garfinkle insertion of a domino with a new distinct key.

    doms maps comparable keys to dominoes. Returns the new map and the
    domino added to the shape."""
    placed = {k: d for k, d in doms.items() if k < key}
    lam = _shape_cells(core, placed)
    if colour == 0:
        c = _row_len(lam, 1)
        new = frozenset({(1, c + 1), (1, c + 2)})
    else:
        r = _col_len(lam, 1)
        new = frozenset({(r + 1, 1), (r + 2, 1)})
    placed[key] = new
    lam |= new
    extra = new
    for k in sorted(k for k in doms if k > key):
        g = doms[k]
        overlap = g & lam
        if not overlap:
            placed[k] = g
            lam |= g
            continue
        if overlap == g:
            if is_vertical(g):
                col = _min_col(g) + 1
                r = _col_len(lam, col)
                moved = frozenset({(r + 1, col), (r + 2, col)})
            else:
                row = min(r for r, _ in g) + 1
                c = _row_len(lam, row)
                moved = frozenset({(row, c + 1), (row, c + 2)})
            extra = moved
        else:
            ((l, m),) = overlap
            corner = (l + 1, m + 1)
            moved = (g - lam) | {corner}
            extra = (extra - g) | {corner}
        placed[k] = moved
        lam |= moved
    return placed, extra


def _reverse_keys(core, doms: dict, extra):
    """Undo one insertion. Returns (previous map, removed key, colour)."""
    doms = dict(doms)
    lam = _shape_cells(core, doms)
    for k in sorted(doms, reverse=True):
        g2 = doms[k]
        shared = g2 & extra
        lam_prev = lam - g2
        if not shared:
            lam = lam_prev
            continue
        if shared == g2:
            if is_vertical(g2):
                col = _min_col(g2)
                if col == 1:
                    del doms[k]
                    return doms, k, 1
                r = _col_len(lam_prev, col - 1)
                g = frozenset({(r - 1, col - 1), (r, col - 1)})
            else:
                row = min(r for r, _ in g2)
                if row == 1:
                    del doms[k]
                    return doms, k, 0
                c = _row_len(lam_prev, row - 1)
                g = frozenset({(row - 1, c - 1), (row - 1, c)})
            doms[k] = g
            extra = g
        else:
            ((a, b),) = shared
            prev = (a - 1, b - 1)
            doms[k] = (g2 - {(a, b)}) | {prev}
            extra = (extra - {(a, b)}) | {prev}
        lam = lam_prev
    raise ValueError("extra domino does not lead back to an inserted domino")


# -- semistandard insertion ---------------------------------------------------


def _refine(t: DominoTableau) -> dict:
    """Key each domino (label, position among equal labels left to right)."""
    out = {}
    by_label = {}
    for lab, d in t.dominoes:
        by_label.setdefault(lab, []).append(d)
    for lab, ds in by_label.items():
        for a, d in enumerate(sorted(ds, key=_min_col), 1):
            out[(lab, a)] = d
    return out


def _collapse(core, doms: dict) -> DominoTableau:
    return DominoTableau(core, tuple((k[0], d) for k, d in doms.items()))


def insert_with_shape(t: DominoTableau, colour: int, label: int) -> tuple[DominoTableau, frozenset]:
    """T <- (colour, label), also returning the domino added to the shape."""
    if colour not in (0, 1):
        raise ValueError("colour must be 0 or 1")
    if label < 1:
        raise ValueError("labels are positive integers")
    doms = _refine(t)
    key = (label, 0) if colour == 1 else (label, len(doms) + 1)
    new, extra = _insert_keys(t.core, doms, key, colour)
    return _collapse(t.core, new), extra


def insert(t: DominoTableau, colour: int, label: int) -> DominoTableau:
    return insert_with_shape(t, colour, label)[0]


def uninsert(t: DominoTableau, extra) -> tuple[DominoTableau, int, int]:
    """Inverse of insert: given the added domino, return (T, colour, label)."""
    doms = _refine(t)
    prev, key, colour = _reverse_keys(t.core, doms, frozenset(extra))
    lab, a = key
    same = [k for k in doms if k[0] == lab]
    expected = min(same) if colour == 1 else max(same)
    if key != expected:
        raise ValueError("tableau is not the result of a semistandard insertion")
    return _collapse(t.core, prev), colour, lab


# -- colored biwords and RSK --------------------------------------------------


@dataclass(frozen=True)
class ColoredBiword:
    """A multiset of triples (c, i, j), stored sorted lexicographically."""

    triples: tuple = ()

    def __post_init__(self):
        trip = tuple(sorted(tuple(int(x) for x in t) for t in self.triples))
        for c, i, j in trip:
            if c not in (0, 1) or i < 1 or j < 1:
                raise ValueError(f"bad triple {(c, i, j)}")
        object.__setattr__(self, "triples", trip)

    def __len__(self):
        return len(self.triples)

    @property
    def tc(self) -> int:
        return 2 * sum(c for c, _, _ in self.triples)

    @classmethod
    def parse(cls, text: str) -> ColoredBiword:
        """Lines "c i j"; blank lines and # comments ignored."""
        out = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 3:
                raise ValueError(f"expected 'c i j', got {line!r}")
            out.append(tuple(int(x) for x in fields))
        return cls(tuple(out))

    def format(self) -> str:
        return "\n".join(f"{c} {i} {j}" for c, i, j in self.triples)


def insertion_key(colour: int, label: int) -> tuple:
    """The domino order: vertical before horizontal, verticals by
    decreasing label, horizontals by increasing label."""
    return (0, -label) if colour == 1 else (1, label)


def rsk(w: ColoredBiword, core=()) -> tuple[DominoTableau, DominoTableau]:
    """Insertion tableau P and recording tableau Q of a colored biword."""
    core = tuple(core)
    if n_core(core, 2) != core:
        raise ValueError(f"{core} is not a 2-core")
    p = DominoTableau(core)
    q_doms = []
    order = sorted(w.triples, key=lambda t: (t[1], insertion_key(t[0], t[2])))
    for c, i, j in order:
        p, added = insert_with_shape(p, c, j)
        q_doms.append((i, added))
    return p, DominoTableau(core, tuple(q_doms))


def inverse_rsk(p: DominoTableau, q: DominoTableau) -> ColoredBiword:
    if p.core != q.core or p.shape != q.shape:
        raise ValueError("P and Q must have the same core and shape")
    triples = []
    q_doms = list(q.dominoes)
    while q_doms:
        top = max(lab for lab, _ in q_doms)
        cand = [item for item in q_doms if item[0] == top]
        item = max(cand, key=lambda it: _max_col(it[1]))
        q_doms.remove(item)
        p, c, j = uninsert(p, item[1])
        triples.append((c, top, j))
    if p.dominoes:
        raise ValueError("P has dominoes left over")
    return ColoredBiword(tuple(triples))


def check_increasing_insertion(t: DominoTableau, d1, d2) -> bool:
    """Does the added domino of T <- d1 lie left of that of (T <- d1) <- d2
    exactly when d1 precedes d2 in the domino order?"""
    t1, a = insert_with_shape(t, *d1)
    _, b = insert_with_shape(t1, *d2)
    left_of = _max_col(a) < _min_col(b)
    return left_of == (insertion_key(*d1) <= insertion_key(*d2))


def all_biwords(length: int, max_i: int, max_j: int):
    """Every colored biword with exactly `length` triples."""
    alphabet = list(product((0, 1), range(1, max_i + 1), range(1, max_j + 1)))
    for combo in combinations_with_replacement(alphabet, length):
        yield ColoredBiword(combo)


def two_cores(max_size: int) -> list:
    out = []
    k = 0
    while k * (k + 1) // 2 <= max_size:
        out.append(tuple(range(k, 0, -1)))
        k += 1
    return out
