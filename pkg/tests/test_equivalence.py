from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirac_tensor import clifford as cl
from dirac_tensor.basis import builtin_triple, random_chiral_spinor, random_triple
from dirac_tensor.duality import spinor_tensor
from dirac_tensor.equivalence import (FORMS, BranchDiscontinuity, NonPositiveDensity, NonTransversal,
                                      ScalarComponentField, current_direct, current_from_product,
                                      current_from_scalar, current_product_tensor, eliminate,
                                      elimination_identity_rhs, fourth_order_residual, minus_spinor,
                                      phi_from_tensor, phi_squared_from_tensor, plus_tensor_expansion,
                                      plus_tensor_sandwich, reconstruct_spinor, spinor_tensor_field,
                                      triple_spinors, xi_component)
from dirac_tensor.fields import FieldConfig, NonConstantInverse, PolyBackend, dirac_residual
from dirac_tensor.numbers import GaussQ, exact_array
from dirac_tensor.poly import Poly, random_gaussq, random_spinor_poly
from dirac_tensor.verify import transversal_pair

from conftest import seeds

BE = PolyBackend()


def _outer(j):
    return np.einsum("i...,j...->ij...", j, j)


@given(seeds)
def test_elimination_identity_and_form_agreement(seed):
    rng = np.random.default_rng(seed)
    t, cfg = transversal_pair(rng)
    psi = random_spinor_poly(rng, 2, density=0.5)
    xi, _ = triple_spinors(t)
    phi = xi_component(psi, xi, BE)
    res = {f: fourth_order_residual(phi, t, cfg, BE, f) for f in FORMS}
    rhs = elimination_identity_rhs(psi, t, cfg, BE)
    for f in FORMS:
        assert res[f] == rhs


def test_fourth_order_residual_of_zero_field():
    rng = np.random.default_rng(7)
    t, cfg = transversal_pair(rng, 1)
    zero = [Poly() for _ in range(4)]
    assert fourth_order_residual(xi_component(zero, t.xi, BE), t, cfg, BE).is_zero()
    assert elimination_identity_rhs(zero, t, cfg, BE).is_zero()


@pytest.mark.parametrize("form", FORMS)
def test_free_field_is_non_transversal(form):
    t = builtin_triple(1)
    psi = [Poly.coord(0)] * 4
    with pytest.raises(NonTransversal):
        eliminate(psi, t, FieldConfig.zero(), BE, form)
    with pytest.raises(NonTransversal):
        fourth_order_residual(psi[0], t, FieldConfig.zero(), BE, form)


def test_field_orthogonal_to_u_is_non_transversal():
    # u = (i, 1, 0) and E - iH = (1, -i, 0) give u . W = i - i = 0
    cfg = FieldConfig.constant((1, 0, 0), (0, 1, 0))
    with pytest.raises(NonTransversal):
        eliminate([Poly.coord(1)] * 4, builtin_triple(1), cfg, BE)


def test_non_constant_field_strength_needs_pointwise_inverse():
    x0 = Poly.coord(0)
    cfg = FieldConfig.from_potential([Poly(), x0 * x0, Poly(), Poly()])
    with pytest.raises(NonConstantInverse):
        eliminate([x0] * 4, builtin_triple(1), cfg, BE)


@given(seeds, st.sampled_from([1, -1]))
def test_minus_spinor_completeness(seed, sign):
    rng = np.random.default_rng(seed)
    t = random_triple(rng, sign)
    psi = random_spinor_poly(rng, 1)
    sc = ScalarComponentField(xi_component(psi, t.xi, BE), xi_component(psi, t.eta, BE))
    got = minus_spinor(sc, t, BE)
    for a in range(4):
        want = psi[a] if cl.gamma5()[a, a] == -sign else Poly()
        assert got[a] == want


def test_reconstruction_differs_from_psi_by_the_dirac_residual():
    rng = np.random.default_rng(3)
    t, cfg = transversal_pair(rng, 1)
    psi = random_spinor_poly(rng, 2, density=0.5)
    sc = eliminate(psi, t, cfg, BE)
    rec = reconstruct_spinor(ScalarComponentField(sc.phi0, sc.phi1_direct), t, cfg, BE)
    r = dirac_residual(psi, cfg, BE)
    for a in range(4):
        # the chirality -sign part is copied; the other part differs by the residual
        want = psi[a] if a in (2, 3) else psi[a] + r[a]
        assert rec[a] == want, a


# currents ---------------------------------------------------------------------


def test_current_of_basis_spinor():
    j = current_direct(exact_array([1, 0, 0, 0]).reshape(4, 1)).j[:, 0]
    assert list(j) == [1, 0, 0, 1]


@given(seeds, st.sampled_from([1, -1]))
def test_current_factorization(seed, sign):
    p = random_chiral_spinor(np.random.default_rng(seed), sign).reshape(4, 1)
    jj = current_product_tensor(spinor_tensor_field(p))
    assert np.all(jj == _outer(current_direct(p).j))


@given(seeds)
def test_plus_tensor_expansion_matches_sandwich(seed):
    rng = np.random.default_rng(seed)
    t = random_triple(rng, 1 if seed % 2 else -1)
    B = exact_array([random_gaussq(rng) for _ in range(8)]).reshape(4, 2)
    C = exact_array([random_gaussq(rng) for _ in range(8)]).reshape(4, 2)
    assert np.all(plus_tensor_expansion(B, C, t) == plus_tensor_sandwich(B, C, t))


def test_current_from_product_float():
    p = random_chiral_spinor(np.random.default_rng(0), 1, exact=False).reshape(4, 1)
    jj = current_product_tensor(spinor_tensor_field(p))
    assert np.allclose(current_from_product(jj), current_direct(p).j.real)
    bad = jj.copy()
    bad[0, 0] = -abs(bad[0, 0]) - 1
    with pytest.raises(NonPositiveDensity):
        current_from_product(bad)


def test_current_from_scalar_sign_invariant_and_consistent():
    rng = np.random.default_rng(11)
    t, cfg = transversal_pair(rng, -1)
    psi = random_spinor_poly(rng, 2, density=0.5)
    sc = eliminate(psi, t, cfg, BE)
    pts = [(Fraction(1, 2), 1, Fraction(-1, 3), 2), (0, 0, 0, 0)]
    a = current_from_scalar(sc, t, cfg, BE, pts)
    b = current_from_scalar(sc.negated(), t, cfg, BE, pts)
    c = current_from_scalar(sc, t, cfg, BE, pts, path="sandwich")
    assert np.array_equal(a.j, b.j)
    assert np.all(a.jj_plus == c.jj_plus) and np.all(a.jj_minus == c.jj_minus)
    rec = reconstruct_spinor(sc, t, cfg, BE)
    vals = np.array([[f(p) for p in pts] for f in rec], dtype=object)
    d = current_direct(vals)
    assert np.all(a.jj_plus == _outer(d.j_plus))
    assert np.all(a.jj_minus == _outer(d.j_minus))
    assert np.allclose(a.j, d.j.astype(complex).real)


def test_current_from_scalar_needs_points_in_exact_mode():
    t, cfg = transversal_pair(np.random.default_rng(1), 1)
    sc = ScalarComponentField(Poly.coord(0))
    with pytest.raises(ValueError):
        current_from_scalar(sc, t, cfg, BE)


# phi from the tensor ------------------------------------------------------------


@given(seeds, st.sampled_from([1, -1]))
def test_phi_squared_routes(seed, sign):
    rng = np.random.default_rng(seed)
    t = random_triple(rng, sign)
    psi = exact_array([random_gaussq(rng) for _ in range(4)])
    T = spinor_tensor(cl.chiral_project(psi, -sign), -sign).t
    phi = cl.adjoint(t.xi) @ psi
    assert phi_squared_from_tensor(T, t.u) == phi * phi
    assert phi_squared_from_tensor(T, t.u, "vec3") == phi * phi


def test_phi_from_tensor_exact_point():
    t = builtin_triple(1)
    psi = exact_array([0, 0, GaussQ(3, 4), 0])
    T = spinor_tensor(psi, -1).t
    phi = phi_from_tensor(T, t.u).phi0
    want = cl.adjoint(t.xi) @ psi
    assert phi == want or phi == -want


def _grid_tensor(phi, t):
    """Tensor field of psi_mp = phi * eta^c with xi-bar psi = phi."""
    ec = cl.charge_conjugate(t.eta).astype(complex)
    psi = np.stack([phi * ec[a] for a in range(4)])
    return spinor_tensor_field(psi)


def test_phi_from_tensor_continues_the_sign():
    t = builtin_triple(1)
    x = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    phi = np.exp(1j * x) * (1.5 + np.cos(x))  # no zeros; phi^2 winds twice around 0
    phi = np.tile(phi, (3, 1))
    principal = np.sqrt(phi * phi)
    assert not (np.allclose(principal, phi) or np.allclose(principal, -phi))
    sc = phi_from_tensor(_grid_tensor(phi, t), t.u)
    assert sc.branch.clean
    assert np.allclose(sc.phi0, phi) or np.allclose(sc.phi0, -phi)


def test_phi_from_tensor_reports_zero_crossings():
    t = builtin_triple(1)
    x = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    phi = np.tile(np.sin(x) + 0j, (2, 1))
    sc = phi_from_tensor(_grid_tensor(phi, t), t.u, strict=False)
    assert sc.branch.zero_points > 0
    with pytest.raises(BranchDiscontinuity):
        phi_from_tensor(_grid_tensor(np.tile(np.sin(x) + 0j, (2, 1)), t), t.u, zero_tol=0.5)


# grid ------------------------------------------------------------------------


def test_gauge_covariance_on_grid():
    from dirac_tensor.grid import GridSpec, integrate_dirac

    # L = 8 pi makes lambda = x^1 / 4 periodic-compatible with a rational gradient
    grid = GridSpec(64, 8 * np.pi, 0.0625, 1.0, "spectral")
    cfg = FieldConfig.constant((Fraction(1, 4), 0, 0))
    shifted = cfg.gauge_shift([0, Fraction(1, 4), 0, 0])
    sol = integrate_dirac(cfg, grid, {"kind": "packet", "seed": 2, "modes": 2})
    be = sol.backend()
    phase = np.exp(-0.25j * be.X)
    psi = sol.fields()
    moved = [f * phase for f in psi]
    t = builtin_triple(1)
    r0 = dirac_residual(psi, cfg, be)
    r1 = dirac_residual(moved, shifted, be)
    rows = slice(2, -2)
    for a in range(4):
        assert np.allclose(r1[a][rows], (r0[a] * phase)[rows], atol=1e-9)
    f0 = fourth_order_residual(xi_component(psi, t.xi, be), t, cfg, be)
    f1 = fourth_order_residual(xi_component(moved, t.xi, be), t, shifted, be)
    assert np.allclose(f1[4:-4], (f0 * phase)[4:-4], atol=1e-9)


def test_current_from_product_keeps_nan_edges():
    p = random_chiral_spinor(np.random.default_rng(2), 1, exact=False)
    vals = np.stack([p, p * np.nan], axis=1)
    j = current_from_product(current_product_tensor(spinor_tensor_field(vals)))
    assert np.all(np.isfinite(j[:, 0])) and np.all(np.isnan(j[:, 1]))
