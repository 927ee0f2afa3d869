import pytest

from ribbonlab.fock import (
    FockVector,
    N_i,
    apply_B,
    apply_e,
    apply_f,
    apply_qh,
    apply_S,
    apply_U,
    apply_V,
    apply_V_seq,
    apply_Vtilde,
    heisenberg_scalar,
    phi,
    prime,
)
from ribbonlab.partitions import horizontal_strip_spin, n_core, partitions_of, partitions_upto, size
from ribbonlab.qcoeff import ONE, Q, ZERO, LaurentPoly, q_integer, subst_neg_qinv
from ribbonlab.ribbonfn import q_lr
from ribbonlab.symfunc import SymFunc, upsilon

from oracles import horizontal_strip_spins


def vec(n, **kw):
    return FockVector(n, kw)


def basis(n, *lam):
    return FockVector.basis(n, tuple(lam))


def test_f_examples():
    assert apply_f(0, FockVector.vacuum(2)) == basis(2, 1)
    assert apply_f(1, basis(2, 1)) == basis(2, 2) + basis(2, 1, 1) * Q


def test_e_f_relation_on_vacuum():
    v = FockVector.vacuum(2)
    for i in range(2):
        lhs = apply_e(i, apply_f(i, v)) - apply_f(i, apply_e(i, v))
        assert lhs == v * q_integer(N_i((), i, 2))


@pytest.mark.parametrize("n", [2, 3])
def test_quantum_affine_relations(n):
    # [e_i, f_j] = delta_ij [h_i] and q^h e_j q^-h = q^{a_ij} e_j
    cartan = [[2 if i == j else (-1 if (i - j) % n in (1, n - 1) else 0) for j in range(n)] for i in range(n)]
    if n == 2:
        cartan = [[2, -2], [-2, 2]]
    for lam in partitions_upto(5):
        v = FockVector.basis(n, lam)
        for i in range(n):
            for j in range(n):
                comm = apply_e(i, apply_f(j, v)) - apply_f(j, apply_e(i, v))
                want = v * q_integer(N_i(lam, i, n)) if i == j else FockVector(n)
                assert comm == want
                conj = apply_qh(i, apply_e(j, apply_qh(i, v, -1)))
                assert conj == apply_e(j, v) * Q ** cartan[i][j]


def test_V_examples():
    assert apply_V(1, FockVector.vacuum(2)) == basis(2, 2) - basis(2, 1, 1) * Q**-1
    want = (
        basis(3, 9, 1)
        - basis(3, 6, 2, 2) * Q**-1
        + basis(3, 4, 4, 2) * Q**-2
        + basis(3, 6, 1, 1, 1, 1) * Q**-2
        - basis(3, 3, 3, 2, 1, 1) * Q**-3
        + basis(3, 3, 2, 2, 2, 1) * Q**-4
    )
    assert apply_V(2, basis(3, 3, 1)) == want


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_U_V_vacuum_coefficient(n, k):
    got = apply_U(k, apply_V(k, FockVector.vacuum(n))).coeff(())
    want = ZERO
    for lam in partitions_of(n * k):
        spins = horizontal_strip_spins(lam, (), n)
        if spins:
            want = want + Q ** (-2 * spins[0])
    assert got == want


def test_B_examples():
    v = FockVector.vacuum(2)
    assert apply_B(-1, v) == basis(2, 2) - basis(2, 1, 1) * Q**-1
    assert apply_B(1, apply_B(-1, v)) == v * (ONE + Q**-2)
    for k in (1, 2, 3):
        assert apply_B(k, v).is_zero()
    with pytest.raises(ValueError):
        apply_B(0, v)


def test_heisenberg_scalar_formula():
    for n in (1, 2, 3):
        for k in (1, 2, 3):
            # k (1 - q^{-2nk}) / (1 - q^{-2k}), cleared of its denominator
            assert heisenberg_scalar(k, n) * (ONE - Q ** (-2 * k)) == (ONE - Q ** (-2 * n * k)) * k


@pytest.mark.parametrize("n", [2, 3])
def test_heisenberg_relations_small(n):
    for lam in partitions_upto(4):
        v = FockVector.basis(n, lam)
        for k in (1, 2):
            for l in (1, 2):
                comm = apply_B(k, apply_B(-l, v)) - apply_B(-l, apply_B(k, v))
                assert comm == (v * heisenberg_scalar(k, n) if k == l else FockVector(n))
                # same-sign operators commute
                assert apply_B(-k, apply_B(-l, v)) == apply_B(-l, apply_B(-k, v))
                assert apply_B(k, apply_B(l, v)) == apply_B(l, apply_B(k, v))


def test_S_examples():
    v = FockVector.vacuum(2)
    assert apply_S((1,), v) == basis(2, 2) - basis(2, 1, 1) * Q**-1


@pytest.mark.parametrize("n", [2, 3])
def test_S_routes_and_lr_expansion(n):
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        for mu in partitions_upto(2):
            v = FockVector.basis(n, mu)
            a = apply_S(lam, v, route="kostka")
            b = apply_S(lam, v, route="character")
            assert a == b
            for nu, c in a.items():
                assert c == subst_neg_qinv(q_lr(nu, n, mu, check=False).get(lam, ZERO))


@pytest.mark.parametrize("n", [2, 3])
def test_S_vacuum_leading_term(n):
    # S_lam|0> = |n lam> modulo q^{-1} Z[q^{-1}]
    for d in (1, 2, 3):
        for lam in partitions_of(d):
            v = apply_S(lam, FockVector.vacuum(n))
            lead = tuple(n * p for p in lam)
            for mu, c in v.items():
                if mu == lead:
                    assert c.coeff(0) == 1 and all(e <= 0 for e in c.terms)
                else:
                    assert c.max_degree() < 0


def test_prime_examples():
    assert prime(basis(2, 2)) == basis(2, 1, 1)
    assert prime(FockVector.vacuum(2) * Q) == FockVector.vacuum(2) * Q**-1


@pytest.mark.parametrize("n", [2, 3])
def test_prime_intertwines_V_and_Vtilde(n):
    for lam in partitions_upto(3):
        u = FockVector.basis(n, lam)
        for beta in [(1,), (2,), (1, 1), (2, 1)]:
            k = sum(beta)
            lhs = prime(apply_V_seq(beta, u))
            sign = -1 if ((n - 1) * k) % 2 else 1
            rhs = prime(u)
            for b in beta:
                rhs = apply_Vtilde(b, rhs)
            assert lhs == rhs * LaurentPoly.q_power((n - 1) * k, sign)


def test_phi_examples():
    assert phi(basis(2, 2, 2)) == SymFunc.h(2) * Q**2 + SymFunc.e(2)
    assert phi(apply_S((1,), FockVector.vacuum(2))) == SymFunc.s(1) * (ONE + Q**2)


@pytest.mark.parametrize("n", [2, 3])
def test_phi_is_module_map(n):
    for lam in partitions_upto(3):
        v = FockVector.basis(n, lam)
        for k in (1, 2):
            assert phi(apply_B(-k, v)) == upsilon(SymFunc.p(k), n) * phi(v)


def test_vector_json_round_trip():
    v = basis(3, 3, 1) * (Q - 2) + FockVector.vacuum(3)
    assert FockVector.from_json(v.to_json()) == v
    with pytest.raises(ValueError):
        FockVector.vacuum(2) + FockVector.vacuum(3)
