import numpy as np
import pytest
from hypothesis import given

from dirac_tensor import clifford as cl
from dirac_tensor.duality import (Bivector, BranchError, contract, cross3, detect_branch, dot3, hodge,
                                  hodge_dual, spinor_pair_tensor, spinor_tensor, tensor_from_vec3,
                                  tensor_rank, vec3_from_tensor)
from dirac_tensor.numbers import GaussQ, I, exact_array

from conftest import chiral_spinors, gaussq, spinors, vec3s


def _eye():
    return cl.identity()


def test_gamma_shapes_and_chiral_blocks():
    for mu in range(4):
        g = cl.gamma(mu)
        assert g.shape == (4, 4)
        assert all(g[a, b] == 0 for a in range(2) for b in range(2))
    g5 = cl.gamma5()
    assert [g5[k, k] for k in range(4)] == [1, 1, -1, -1]


@pytest.mark.parametrize("mu,nu", [(m, n) for m in range(4) for n in range(4)])
def test_clifford_relation(mu, nu):
    g = cl.gamma
    assert np.all(g(mu) @ g(nu) + g(nu) @ g(mu) == _eye() * (2 * cl.metric(mu, nu)))


def test_gamma5_anticommutes():
    for mu in range(4):
        assert np.all(cl.gamma5() @ cl.gamma(mu) + cl.gamma(mu) @ cl.gamma5() == cl.zero_matrix())


def test_levi_civita_sign_convention():
    eps = cl.levi_civita()
    low = cl.lower_levi_civita()
    assert eps[0, 1, 2, 3] == 1 and eps[1, 0, 2, 3] == -1
    assert low[0, 1, 2, 3] == -1


@given(spinors())
def test_charge_conjugation_involution(psi):
    assert np.all(cl.charge_conjugate(cl.charge_conjugate(psi)) == psi)


@given(spinors())
def test_charge_conjugation_flips_chirality(psi):
    plus = cl.chiral_project(psi, 1)
    pc = cl.charge_conjugate(plus)
    assert np.all(cl.chiral_project(pc, 1) == exact_array([0, 0, 0, 0]))


@given(spinors(), spinors())
def test_sigma_sandwich_symmetric(a, b):
    for mu, nu in [(0, 1), (1, 2), (0, 3)]:
        s = cl.sigma(mu, nu)
        assert cl.sandwich(a, s, b) == cl.sandwich(b, s, a)


def test_four_gamma_expansion_all_tuples():
    g = cl.gamma
    for idx in np.ndindex(4, 4, 4, 4):
        assert np.all(cl.four_gamma_expand(*idx) == g(idx[0]) @ g(idx[1]) @ g(idx[2]) @ g(idx[3]))


def test_float_mode_matches_exact():
    psi = exact_array([1, I, GaussQ(2, -1), 0])
    assert np.allclose(cl.charge_conjugate(psi.astype(complex)), cl.charge_conjugate(psi).astype(complex))


# duality ---------------------------------------------------------------------


def test_builtin_u_is_on_the_plus_branch():
    u = tensor_from_vec3(exact_array([I, 1, 0]), 1)
    assert np.all(hodge(u.t) == u.t * I)
    assert detect_branch(u.t) == 1
    assert hodge_dual(u).branch == 1


@given(vec3s())
def test_double_dual_is_minus_identity(a):
    m = exact_array(np.zeros((4, 4), dtype=int))
    m[0, 1:] = a
    m[1:, 0] = -a
    m[2, 3], m[3, 2] = a[0] * 2, -a[0] * 2
    assert np.all(hodge(hodge(m)) == -m)


@given(vec3s(), vec3s())
def test_contract_is_minus_four_dot(a, b):
    for s in (1, -1):
        assert contract(tensor_from_vec3(a, s), tensor_from_vec3(b, s)) == dot3(a, b) * -4


@given(vec3s())
def test_vec3_roundtrip(a):
    for s in (1, -1):
        assert np.all(vec3_from_tensor(tensor_from_vec3(a, s)) == a)


def test_dot_and_cross_examples():
    assert dot3(exact_array([I, 1, 0]), exact_array([-I, 1, 0])) == 2
    assert np.all(cross3(exact_array([1, 0, 0]), exact_array([0, 1, 0])) == exact_array([0, 0, 1]))
    u = tensor_from_vec3(exact_array([I, 1, 0]), 1)
    assert contract(u, u) == 0


def test_bivector_rejects_wrong_branch():
    t = tensor_from_vec3(exact_array([1, 0, 0]), 1).t
    with pytest.raises(BranchError):
        Bivector(t, -1)
    with pytest.raises(ValueError):
        Bivector(exact_array(np.eye(4, dtype=int)), None)


@given(chiral_spinors(), chiral_spinors())
def test_pair_tensor_branch_and_entry(p, q):
    s, chi = p
    _, zeta = q
    th = spinor_pair_tensor(chi, zeta, s)
    assert th.branch == s
    if s == 1:
        want = I * (chi[0].conjugate() * zeta[0].conjugate() - chi[1].conjugate() * zeta[1].conjugate())
        assert th.t[0, 1] == want


@given(spinors(), gaussq)
def test_spinor_tensor_null_and_quadratic(psi, lam):
    for s in (1, -1):
        t = spinor_tensor(psi, s)
        assert contract(t, t) == 0
        assert t.branch == -s
        assert np.all(spinor_tensor(psi * lam, s).t == t.t * (lam * lam))
        assert np.all(spinor_tensor(-psi, s).t == t.t)


def test_spinor_tensor_zero():
    t = spinor_tensor(exact_array([0, 0, 0, 0]), 1)
    assert np.all(t.t == 0)


def test_branch_spans_three_dimensions(rng):
    from dirac_tensor.poly import random_gaussq

    for s in (1, -1):
        ts = [tensor_from_vec3(exact_array([random_gaussq(rng) for _ in range(3)]), s) for _ in range(5)]
        assert tensor_rank(ts) == 3
