import random

import pytest

from ribbonlab.domino import (
    ColoredBiword,
    DominoTableau,
    all_biwords,
    check_increasing_insertion,
    from_chain,
    insert,
    insert_with_shape,
    insertion_key,
    inverse_rsk,
    is_semistandard,
    is_vertical,
    rsk,
    two_cores,
    uninsert,
)
from ribbonlab.partitions import add_horizontal_strips, horizontal_strip_spin

SAMPLE_WORD = [(1, 3), (0, 4), (0, 2), (1, 1)]


def _dom(*cells):
    return frozenset(cells)


def _sample_tableau():
    t = DominoTableau()
    for c, j in SAMPLE_WORD:
        t = insert(t, c, j)
    return t


def test_single_insertions():
    h = insert(DominoTableau(), 0, 1)
    assert h.shape == (2,) and h.spin == 0
    v = insert(DominoTableau(), 1, 1)
    assert v.shape == (1, 1) and v.spin == 1
    with pytest.raises(ValueError):
        insert(DominoTableau(), 2, 1)


def test_four_step_insertion():
    t = _sample_tableau()
    assert t.shape == (3, 3, 2)
    got = {lab: d for lab, d in t.dominoes}
    assert got == {
        1: _dom((1, 1), (2, 1)),
        2: _dom((1, 2), (2, 2)),
        4: _dom((1, 3), (2, 3)),
        3: _dom((3, 1), (3, 2)),
    }
    assert is_vertical(got[1]) and not is_vertical(got[3])
    assert t.spin == 3


def test_four_step_word_rsk():
    w = ColoredBiword(tuple((c, i, j) for i, (c, j) in enumerate(SAMPLE_WORD, 1)))
    p, q = rsk(w)
    assert p == _sample_tableau()
    assert w.tc == 4 and p.spin == 3 and q.spin == 1
    assert inverse_rsk(p, q) == w


def test_empty_biword():
    p, q = rsk(ColoredBiword())
    assert p == DominoTableau() and q == DominoTableau()
    assert inverse_rsk(p, q) == ColoredBiword()


def test_single_triples_round_trip():
    words = list(all_biwords(1, 2, 2))
    assert len(words) == 8 and len(set(words)) == 8
    for w in words:
        assert inverse_rsk(*rsk(w)) == w


@pytest.mark.parametrize("core", two_cores(3))
def test_exhaustive_round_trip_and_color_to_spin(core):
    seen = set()
    for m in range(0, 4):
        for w in all_biwords(m, 2, 2):
            p, q = rsk(w, core)
            assert is_semistandard(p) and is_semistandard(q)
            assert p.shape == q.shape
            assert w.tc == p.spin + q.spin
            assert inverse_rsk(p, q) == w
            seen.add((p, q))
    assert len(seen) == 1 + 8 + 36 + 120


def test_random_round_trip():
    rng = random.Random(12345)
    for _ in range(150):
        m = rng.randint(0, 5)
        w = ColoredBiword(tuple((rng.randint(0, 1), rng.randint(1, 3), rng.randint(1, 3)) for _ in range(m)))
        p, q = rsk(w)
        assert w.tc == p.spin + q.spin
        assert inverse_rsk(p, q) == w


def test_increasing_insertion_examples():
    assert check_increasing_insertion(DominoTableau(), (0, 1), (0, 2))
    assert check_increasing_insertion(DominoTableau(), (1, 2), (1, 1))
    assert insertion_key(1, 2) < insertion_key(1, 1) < insertion_key(0, 1) < insertion_key(0, 2)


def test_uninsert_inverts_insert():
    t = _sample_tableau()
    for c in (0, 1):
        for j in range(1, 6):
            t2, extra = insert_with_shape(t, c, j)
            assert uninsert(t2, extra) == (t, c, j)


def test_combinatorial_pieri():
    # inserting k dominoes with one new largest label adds a horizontal strip
    # whose spin is the number of vertical ones
    base = _sample_tableau()
    for k in range(1, 4):
        for colours in [(0,) * k, (1,) * k, (1,) + (0,) * (k - 1)]:
            t = base
            for c in colours:
                t = insert(t, c, 9)
            assert is_semistandard(t)
            s = horizontal_strip_spin(t.shape, base.shape, 2)
            assert s is not None
            assert (t.shape, s) in add_horizontal_strips(base.shape, 2, k)


def test_from_chain_and_semistandard_check():
    t = from_chain([(), (2,), (2, 2)])
    assert is_semistandard(t)
    assert t.weight == (1, 1)
    bad = DominoTableau((), ((1, _dom((1, 1), (1, 2))), (1, _dom((2, 1), (2, 2)))))
    assert not is_semistandard(bad)
    with pytest.raises(ValueError):
        from_chain([(), (1, 1, 1, 1)])


def test_biword_text_format():
    w = ColoredBiword.parse("# comment\n1 1 1\n0 2 1\n\n")
    assert w.triples == ((0, 2, 1), (1, 1, 1))
    assert ColoredBiword.parse(w.format()) == w
    with pytest.raises(ValueError):
        ColoredBiword.parse("1 1")
    with pytest.raises(ValueError):
        ColoredBiword(((2, 1, 1),))


def test_shape_mismatch_rejected():
    p, _ = rsk(ColoredBiword(((0, 1, 1),)))
    _, q = rsk(ColoredBiword(((1, 1, 1),)))
    with pytest.raises(ValueError):
        inverse_rsk(p, q)
