"""Partition combinatorics: conjugates, cores and quotients, ribbon strips,
spin, and border ribbon strips.

Partitions are plain tuples of positive ints in weakly decreasing order.
Cells are 1-indexed (row, column) pairs; the content of a cell is
column - row.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

Partition = tuple


# -- basics -----------------------------------------------------------------


def normalize(parts) -> Partition:
    """Strip trailing zeros and validate."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {parts}")
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse "7,6,4,3,1" (empty string or "0" is the empty partition)."""
    text = text.strip().strip("()[]")
    if not text or text in {"0", "-"}:
        return ()
    try:
        parts = [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    if any(p <= 0 for p in parts):
        if all(p >= 0 for p in parts) and parts == sorted(parts, reverse=True):
            return normalize(parts)
        raise ValueError(f"malformed partition {text!r}")
    return normalize(parts)


def parse_skew(text: str) -> tuple[Partition, Partition]:
    """Parse "outer/inner" or just "outer"."""
    if "/" in text:
        a, b = text.split("/", 1)
        outer, inner = parse_partition(a), parse_partition(b)
    else:
        outer, inner = parse_partition(text), ()
    if not contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    return outer, inner


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """lam_i with 1-indexed i, zero past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(b <= a for a, b in zip(outer, inner))


def cells(lam: Partition) -> frozenset:
    return frozenset((r, c) for r, p in enumerate(lam, 1) for c in range(1, p + 1))


def skew_cells(outer: Partition, inner: Partition) -> frozenset:
    return frozenset(
        (r, c)
        for r, p in enumerate(outer, 1)
        for c in range(part(inner, r) + 1, p + 1)
    )


def from_cells(cs) -> Partition:
    """The partition whose diagram is the given cell set (must be a diagram)."""
    rows = {}
    for r, c in cs:
        rows[r] = max(rows.get(r, 0), c)
    lam = normalize([rows.get(r, 0) for r in range(1, max(rows, default=0) + 1)])
    if cells(lam) != frozenset(cs):
        raise ValueError("cell set is not a Young diagram")
    return lam


@lru_cache(maxsize=None)
def partitions_of(m: int, max_part: int | None = None) -> tuple:
    """All partitions of m in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        return ((),)
    out = []
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions_of(m - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(m: int):
    for s in range(m + 1):
        yield from partitions_of(s)


def z_factor(lam: Partition) -> int:
    """z_lam = prod_i i^{m_i} m_i!."""
    from math import factorial

    out = 1
    for v in set(lam):
        mult = lam.count(v)
        out *= v**mult * factorial(mult)
    return out


def is_connected(cs) -> bool:
    return len(components(cs)) <= 1


def components(cs) -> list:
    """Edge-connected components, each a frozenset, sorted by their cells."""
    cs = set(cs)
    out = []
    while cs:
        start = cs.pop()
        comp = {start}
        stack = [start]
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cs:
                    cs.remove(nb)
                    comp.add(nb)
                    stack.append(nb)
        out.append(frozenset(comp))
    return sorted(out, key=sorted)


def is_ribbon(cs) -> bool:
    """Connected, nonempty, no 2x2 square (for a skew shape's cells this is a ribbon)."""
    if not cs or not is_connected(cs):
        return False
    return not any(
        (r + 1, c) in cs and (r, c + 1) in cs and (r + 1, c + 1) in cs for r, c in cs
    )


def ribbon_height(cs) -> int:
    """Number of rows occupied minus one (the spin of a single ribbon)."""
    rows = {r for r, _ in cs}
    return max(rows) - min(rows)


def top_right(cs):
    """The top-right-most cell of a ribbon: its top row, rightmost column."""
    r = min(r for r, _ in cs)
    return (r, max(c for rr, c in cs if rr == r))


# -- beta numbers, cores and quotients ----------------------------------------


def _beta(lam: Partition, length: int) -> list:
    """Beta numbers lam_i - i + length for i = 1..length (all nonnegative)."""
    return [part(lam, i) - i + length for i in range(1, length + 1)]


def _from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return normalize([b + i - length for i, b in enumerate(beta, 1)])


@lru_cache(maxsize=None)
def add_ribbons(lam: Partition, n: int) -> tuple:
    """All (mu, height) with mu/lam a single n-ribbon."""
    length = len(lam) + n
    beta = _beta(lam, length)
    occupied = set(beta)
    out = []
    for b in beta:
        if b + n not in occupied:
            height = sum(1 for x in beta if b < x < b + n)
            new = [x if x != b else b + n for x in beta]
            out.append((_from_beta(new), height))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def remove_ribbons(lam: Partition, n: int) -> tuple:
    """All (mu, height) with lam/mu a single n-ribbon."""
    length = len(lam) + n
    beta = _beta(lam, length)
    occupied = set(beta)
    out = []
    for b in beta:
        if b - n >= 0 and b - n not in occupied:
            height = sum(1 for x in beta if b - n < x < b)
            new = [x if x != b else b - n for x in beta]
            out.append((_from_beta(new), height))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def n_core(lam: Partition, n: int) -> Partition:
    if n < 1:
        raise ValueError("n must be positive")
    length = -(-len(lam) // n) * n
    runners = [0] * n
    for b in _beta(lam, length):
        runners[b % n] += 1
    beta = [r + n * j for r in range(n) for j in range(runners[r])]
    return _from_beta(beta)


@lru_cache(maxsize=None)
def n_quotient(lam: Partition, n: int, length: int | None = None) -> tuple:
    """The n-quotient (lam^(0), ..., lam^(n-1)).

    Runner r of the abacus (bead count a multiple of n) gives lam^(r); this
    matches the convention where a ribbon's quotient index is read off from
    the diagonal it crosses. Pass a common ``length`` to compare the
    quotients of two partitions with the same core.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if length is None:
        length = -(-len(lam) // n) * n
    elif length % n or length < len(lam):
        raise ValueError("length must be a multiple of n and at least len(lam)")
    runners = [[] for _ in range(n)]
    for b in _beta(lam, length):
        runners[b % n].append(b // n)
    return tuple(_from_beta(js) for js in runners)


def n_weight(lam: Partition, n: int) -> int:
    """Number of n-ribbons in any tiling of lam / core(lam)."""
    return (size(lam) - size(n_core(lam, n))) // n


# -- horizontal ribbon strips ------------------------------------------------


@lru_cache(maxsize=None)
def horizontal_strip_tiling(outer: Partition, inner: Partition, n: int):
    """The unique tiling of outer/inner by n-ribbons whose top-right cells
    touch the northern edge of the shape, as a tuple of ribbons (frozensets)
    in a valid addition order, or None if no such tiling exists."""
    if not contains(outer, inner):
        return None
    total = size(outer) - size(inner)
    if total % n:
        return None
    # search over intermediate partitions; each state remembers one path
    seen = {inner: ()}
    queue = deque([inner])
    while queue:
        lam = queue.popleft()
        if lam == outer:
            return seen[lam]
        for mu, _ in add_ribbons(lam, n):
            if mu in seen or not contains(outer, mu):
                continue
            rib = skew_cells(mu, lam)
            r, c = top_right(rib)
            if r == 1 or part(inner, r - 1) >= c:
                seen[mu] = seen[lam] + (rib,)
                queue.append(mu)
    return None


def horizontal_strip_spin(outer: Partition, inner: Partition, n: int):
    """Spin of the horizontal n-ribbon strip outer/inner, or None."""
    tiling = horizontal_strip_tiling(outer, inner, n)
    if tiling is None:
        return None
    return sum(ribbon_height(r) for r in tiling)


def vertical_strip_spin(outer: Partition, inner: Partition, n: int):
    """Spin of the vertical n-ribbon strip outer/inner, or None."""
    s = horizontal_strip_spin(conjugate(outer), conjugate(inner), n)
    if s is None:
        return None
    k = (size(outer) - size(inner)) // n
    return (n - 1) * k - s


@lru_cache(maxsize=None)
def add_horizontal_strips(mu: Partition, n: int, k: int) -> tuple:
    """All (lam, spin) with lam/mu a horizontal n-ribbon strip of k ribbons."""
    level = {mu: 0}
    for _ in range(k):
        nxt = {}
        for lam, spin in level.items():
            for nu, h in add_ribbons(lam, n):
                rib = skew_cells(nu, lam)
                r, c = top_right(rib)
                if r == 1 or part(mu, r - 1) >= c:
                    if nu in nxt:
                        assert nxt[nu] == spin + h, "horizontal strip tiling not unique"
                    else:
                        nxt[nu] = spin + h
        level = nxt
    return tuple(sorted(level.items()))


@lru_cache(maxsize=None)
def add_vertical_strips(mu: Partition, n: int, k: int) -> tuple:
    """All (lam, spin) with lam/mu a vertical n-ribbon strip of k ribbons."""
    out = []
    for lam_c, s in add_horizontal_strips(conjugate(mu), n, k):
        out.append((conjugate(lam_c), (n - 1) * k - s))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def remove_horizontal_strips(lam: Partition, n: int, k: int) -> tuple:
    """All (mu, spin) with lam/mu a horizontal n-ribbon strip of k ribbons."""
    level = {lam}
    for _ in range(k):
        level = {mu for nu in level for mu, _ in remove_ribbons(nu, n)}
    out = []
    for mu in level:
        s = horizontal_strip_spin(lam, mu, n)
        if s is not None:
            out.append((mu, s))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def remove_vertical_strips(lam: Partition, n: int, k: int) -> tuple:
    out = []
    for mu_c, s in remove_horizontal_strips(conjugate(lam), n, k):
        out.append((conjugate(mu_c), (n - 1) * k - s))
    return tuple(sorted(out))


# -- mspin --------------------------------------------------------------------


@lru_cache(maxsize=None)
def mspin(outer: Partition, inner: Partition, n: int):
    """Maximum spin over all n-ribbon tilings of outer/inner, or None."""
    if outer == inner:
        return 0
    if not contains(outer, inner):
        return None
    best = None
    for mu, h in remove_ribbons(outer, n):
        if contains(mu, inner):
            rest = mspin(mu, inner, n)
            if rest is not None and (best is None or rest + h > best):
                best = rest + h
    return best


# -- border ribbon strips -----------------------------------------------------


@dataclass(frozen=True)
class BorderRibbonStrip:
    """A border ribbon strip outer/inner with its distinguished layering.

    ``chain`` is inner = c_0 < c_1 < ... < c_a = outer with each c_i/c_{i-1}
    a horizontal ribbon strip (the layer T_i).
    """

    n: int
    chain: tuple
    height: int
    spin: int

    @property
    def inner(self) -> Partition:
        return self.chain[0]

    @property
    def outer(self) -> Partition:
        return self.chain[-1]

    @property
    def size(self) -> int:
        return (size(self.outer) - size(self.inner)) // self.n

    def layers(self) -> list:
        return [skew_cells(b, a) for a, b in zip(self.chain, self.chain[1:])]


def _touches(rib, prev_cells) -> bool:
    r, c = top_right(rib)
    return (r - 1, c) in prev_cells


def _layer_components_ok(tiling, prev_cells) -> tuple[bool, int]:
    """Check the touching rules for every component of a layer.

    Returns (ok, number of components)."""
    cs = frozenset().union(*tiling)
    comps = components(cs)
    for comp in comps:
        ribs = sorted((r for r in tiling if r <= comp), key=lambda r: top_right(r)[1])
        if not _touches(ribs[-1], prev_cells):
            return False, len(comps)
        if any(_touches(r, prev_cells) for r in ribs[:-1]):
            return False, len(comps)
    return True, len(comps)


def _extend_layers(chain, n, remaining, height, spin, out):
    if remaining == 0:
        out.append(BorderRibbonStrip(n, chain, height - 1, spin))
        return
    cur = chain[-1]
    prev_cells = skew_cells(cur, chain[-2])
    for j in range(1, remaining + 1):
        for nu, s in add_horizontal_strips(cur, n, j):
            tiling = horizontal_strip_tiling(nu, cur, n)
            ok, ncomp = _layer_components_ok(tiling, prev_cells)
            if ok:
                _extend_layers(chain + (nu,), n, remaining - j, height + ncomp, spin + s, out)


@lru_cache(maxsize=None)
def enumerate_border_ribbon_strips(lam: Partition, n: int, k: int) -> tuple:
    """Every border ribbon strip of k n-ribbons on top of lam, one entry per
    distinguished tiling, sorted by outer shape (then construction order)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = []
    for j in range(1, k + 1):
        for nu, s in add_horizontal_strips(lam, n, j):
            if is_connected(skew_cells(nu, lam)):
                _extend_layers((lam, nu), n, k - j, 1, s, out)
    order = {id(b): i for i, b in enumerate(out)}
    return tuple(sorted(out, key=lambda b: (b.outer, order[id(b)])))


@lru_cache(maxsize=None)
def border_strips_between(outer: Partition, inner: Partition, n: int) -> tuple:
    """Border ribbon strips with the given inner and outer shapes."""
    if not contains(outer, inner):
        return ()
    total = size(outer) - size(inner)
    if total == 0 or total % n:
        return ()
    return tuple(
        b for b in enumerate_border_ribbon_strips(inner, n, total // n) if b.outer == outer
    )


def removable_border_strips(lam: Partition, n: int, k: int) -> tuple:
    """All border ribbon strips of size k whose outer shape is lam."""
    level = {lam}
    for _ in range(k):
        level = {mu for nu in level for mu, _ in remove_ribbons(nu, n)}
    out = []
    for mu in sorted(level):
        out.extend(border_strips_between(lam, mu, n))
    return tuple(out)
