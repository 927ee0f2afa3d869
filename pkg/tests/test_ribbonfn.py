from itertools import permutations

import pytest
from oracles import partitions as oracle_partitions, ribbon_tableaux_generating

from ribbonlab.partitions import conjugate, n_core, partitions_upto, size
from ribbonlab.qcoeff import ONE, Q, ZERO, LaurentPoly, bar_q
from ribbonlab.ribbonfn import (
    G,
    G_at_one,
    K_poly,
    L_poly,
    RibbonTableau,
    X_poly,
    default_super_order,
    enumerate_tableaux,
    q_lr,
    quotient_schur_product,
    super_G,
)
from ribbonlab.symfunc import SymFunc, convert


def _poly(counts):
    return LaurentPoly(counts)


def test_domino_ribbon_functions():
    h2, e2 = SymFunc.h(2), SymFunc.e(2)
    assert G((4,), 2) == h2
    assert G((3, 1), 2) == h2 * Q
    assert G((2, 1, 1), 2) == e2 * Q
    assert G((2, 2), 2) == h2 * Q**2 + e2
    assert G((1, 1, 1, 1), 2) == e2 * Q**2


def test_qlr_examples():
    assert q_lr((2, 2), 2) == {(2,): Q**2, (1, 1): ONE}
    assert q_lr((4,), 2) == {(2,): ONE}
    assert q_lr((1, 1, 1, 1), 2) == {(1, 1): Q**2}


def test_K_examples():
    assert K_poly((2, 2), (), 2, (1, 1)) == ONE + Q**2
    assert K_poly((2, 2), (), 2, (2,)) == Q**2
    assert K_poly((4,), (), 2, (1, 1)) == ONE


def test_L_examples():
    assert L_poly((2, 2), (), 2, (1, 1)) == Q**2 + ONE
    assert L_poly((1, 1), (), 2, (1,)) == Q
    assert L_poly((2,), (), 2, (1,)) == ONE


def test_tableaux_enumeration():
    tabs = enumerate_tableaux((2, 2), (), 2, 2)
    assert len(tabs) == 4
    by_weight = {}
    for t in tabs:
        by_weight.setdefault(t.weight, []).append(t.spin)
    assert sorted(by_weight[(2, 0)]) == [2]
    assert sorted(by_weight[(1, 1)]) == [0, 2]
    assert sorted(by_weight[(0, 2)]) == [2]
    empty = enumerate_tableaux((), (), 3, 2)
    assert len(empty) == 1 and empty[0].spin == 0
    assert isinstance(empty[0], RibbonTableau)


def test_worked_tableau_weight_and_spin():
    tabs = enumerate_tableaux((7, 6, 4, 3, 1), (), 3, 4)
    assert any(t.weight == (2, 1, 3, 1) and t.spin == 7 for t in tabs)


@pytest.mark.parametrize("n", [2, 3])
def test_K_matches_cell_level_brute_force(n):
    for m in range(0, 10):
        for lam in oracle_partitions(m):
            core = n_core(lam, n)
            d = (size(lam) - size(core)) // n
            if d == 0 or d > 3:
                continue
            for alpha in [(d,), (1,) * d, (d - 1, 1) if d > 1 else (1,)]:
                alpha = tuple(a for a in alpha if a)
                got = K_poly(lam, core, n, alpha)
                want = _poly(ribbon_tableaux_generating(lam, core, n, alpha))
                assert got == want, (lam, alpha)


@pytest.mark.parametrize("n", [2, 3])
def test_K_symmetric_in_weight(n):
    for lam in partitions_upto(9):
        core = n_core(lam, n)
        d = (size(lam) - size(core)) // n
        for mu in oracle_partitions(d):
            base = K_poly(lam, core, n, mu)
            for alpha in set(permutations(mu)):
                assert K_poly(lam, core, n, alpha) == base


def test_X_examples():
    assert X_poly((5, 5, 2), (2,), 2, (5,)) == LaurentPoly({5: 1, 3: -2, 1: 1})
    assert X_poly((2,), (), 2, (1,)) == ONE
    assert X_poly((1, 1), (), 2, (1,)) == Q


def test_super_examples():
    two = super_G((2,), (), 2, 1, 1)
    # one ribbon is both a horizontal and a vertical strip
    assert two[((1,), (0,))] == ONE
    assert two[((0,), (1,))] == ONE
    col = super_G((1, 1), (), 2, 1, 1)
    assert col[((0,), (1,))] == Q
    assert col[((1,), (0,))] == Q


def test_super_symmetry_table():
    table = super_G((2, 2), (), 2, 2, 2)
    for (alpha, beta), c in table.items():
        assert table.get((alpha[::-1], beta), ZERO) == c
        assert table.get((alpha, beta[::-1]), ZERO) == c
    # no primed letters: ordinary ribbon function
    plain = super_G((2, 2), (), 2, 2, 0)
    assert plain[((1, 1), ())] == K_poly((2, 2), (), 2, (1, 1))
    assert default_super_order(2, 1) == [(1, False), (1, True), (2, False)]


@pytest.mark.parametrize("n", [2, 3])
def test_q_equals_one_is_quotient_product(n):
    for lam in partitions_upto(9):
        assert G_at_one(lam, n) == quotient_schur_product(lam, n)
    assert quotient_schur_product((7, 6, 4, 3, 1), 3) == convert(SymFunc.s(3) * SymFunc.s((2, 2)), "s")


@pytest.mark.parametrize("n", [2, 3])
def test_conjugation_reverses_spin(n):
    for lam in partitions_upto(9):
        core = n_core(lam, n)
        d = (size(lam) - size(core)) // n
        for alpha in oracle_partitions(d):
            k = K_poly(lam, core, n, alpha)
            assert L_poly(conjugate(lam), conjugate(core), n, alpha) == bar_q(k).shift((n - 1) * d)


def test_tableau_json():
    t = enumerate_tableaux((2, 2), (), 2, 1)[0]
    assert t.to_json() == {"chain": [[], [2, 2]], "spin": 2, "weight": [2]}


def test_negativity_guard():
    # inner shapes other than the core may give any sign; the guard only
    # applies to straight shapes
    q_lr((4, 2), 2, (2,), check=True)
