import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirac_tensor.basis import builtin_triple, random_triple
from dirac_tensor.fields import (BackendMismatch, FieldConfig, GridBackend, NonConstantInverse, PolyBackend,
                                 dirac_residual, f_sandwich, f_scalar, f_vec3, faraday_from_potential,
                                 periodic_derivative, second_order_lhs, second_order_residual,
                                 weber_contraction, weber_rhs)
from dirac_tensor.numbers import GaussQ, I
from dirac_tensor.poly import Poly, random_poly, random_spinor_poly
from dirac_tensor.verify import random_constant_field, random_poly_field

from conftest import seeds

BE = PolyBackend()


@given(seeds)
def test_second_order_identity_exact(seed):
    rng = np.random.default_rng(seed)
    psi = random_spinor_poly(rng, 2, density=0.5)
    cfg = random_poly_field(rng)
    assert all(r.is_zero() for r in second_order_residual(psi, cfg, BE))


def test_second_order_identity_higher_degree(rng):
    psi = random_spinor_poly(rng, 3, density=0.3)
    cfg = random_poly_field(rng, degree=3, density=0.3)
    assert all(r.is_zero() for r in second_order_residual(psi, cfg, BE))


def test_constant_field_gauges_share_field_strength():
    E, H = (Fraction(1, 2), 0, Fraction(-1, 3)), (0, 0, 0)
    a = faraday_from_potential(FieldConfig.constant(E, H, gauge="temporal"))
    b = faraday_from_potential(FieldConfig.constant(E, H, gauge="symmetric"))
    assert np.all(a.constant_matrix() == b.constant_matrix())
    assert [x == Fraction(e) for x, e in zip(a.constant_EH()[0], E)] == [True] * 3


def test_temporal_gauge_rejects_magnetic_field():
    with pytest.raises(ValueError):
        FieldConfig.constant((1, 0, 0), (0, 0, 1), gauge="temporal")


def test_symmetric_gauge_recovers_E_and_H():
    E, H = (1, 2, 3), (Fraction(1, 2), -1, 4)
    far = faraday_from_potential(FieldConfig.constant(E, H))
    gotE, gotH = far.constant_EH()
    assert list(gotE) == list(map(Fraction, E))
    assert list(gotH) == list(map(Fraction, H))


@given(seeds)
def test_gauge_shift_keeps_field_strength(seed):
    rng = np.random.default_rng(seed)
    cfg = random_constant_field(rng)
    shifted = cfg.gauge_shift([GaussQ(1, 0), GaussQ(-2, 0), GaussQ(0), GaussQ(3, 0)])
    a, b = faraday_from_potential(cfg), faraday_from_potential(shifted)
    assert np.all(a.constant_matrix() == b.constant_matrix())
    t = random_triple(rng, 1)
    assert f_scalar(a, t.u) == f_scalar(b, t.u)


@given(seeds, st.sampled_from([1, -1]))
def test_f_scalar_routes_agree(seed, sign):
    rng = np.random.default_rng(seed)
    cfg = random_constant_field(rng)
    far = faraday_from_potential(cfg)
    t = random_triple(rng, sign)
    E, H = far.constant_EH()
    for a, (al, be) in ((t.u, (t.xi, t.xi)), (t.v, (t.xi, t.eta)), (t.w, (t.eta, t.eta))):
        f = f_scalar(far, a)
        assert f_sandwich(far, al, be) == f
        assert f_vec3(far, a.vec, sign) == f
        assert weber_contraction(E, H, a) == weber_rhs(E, H, a) == f * 2


def test_f_scalar_builtin_value():
    far = faraday_from_potential(FieldConfig.constant((Fraction(1, 4), 0, 0)))
    u = builtin_triple(1).u
    assert f_scalar(far, u) == I / 4


def test_field_config_json_roundtrip(rng):
    for cfg in (FieldConfig.constant((1, 0, Fraction(1, 3)), (0, 2, 0)), FieldConfig.zero(),
                random_poly_field(rng)):
        back = FieldConfig.from_json(json.loads(json.dumps(cfg.to_json())))
        assert all(a == b for a, b in zip(back.A, cfg.A))


def test_poly_backend_recip():
    assert BE.recip(Poly.const(GaussQ(2))) == Poly.const(GaussQ(1, 0) / 2)
    with pytest.raises(NonConstantInverse):
        BE.recip(Poly.coord(0))


def test_backend_mismatch():
    be = GridBackend(np.arange(5) * 0.1, np.arange(8) * 0.5, 4.0)
    with pytest.raises(BackendMismatch):
        be.d(Poly.coord(0), 1)
    with pytest.raises(BackendMismatch):
        be.d(np.zeros((3, 3)), 1)
    with pytest.raises(BackendMismatch):
        BE.d(np.zeros(3), 0)
    with pytest.raises(BackendMismatch):
        be.lift(Poly.coord(2))


@pytest.mark.parametrize("stencil,order", [("central-2", 2), ("central-4", 4)])
def test_periodic_derivative_order(stencil, order):
    errs = []
    for n in (32, 64):
        x = np.arange(n) * 2 * np.pi / n
        f = np.exp(np.sin(x))
        exact = np.cos(x) * f
        errs.append(np.max(np.abs(periodic_derivative(f, 2 * np.pi / n, stencil) - exact)))
    assert np.log2(errs[0] / errs[1]) > order - 0.3


def test_spectral_derivative_is_exact_for_band_limited():
    n = 16
    x = np.arange(n) * 2 * np.pi / n
    f = np.sin(3 * x)
    assert np.allclose(periodic_derivative(f, 2 * np.pi / n, "spectral"), 3 * np.cos(3 * x))
    assert np.allclose(periodic_derivative(f, 2 * np.pi / n, "spectral", 2), -9 * np.sin(3 * x))


def test_grid_time_derivative_marks_edges():
    t = np.linspace(0, 1, 11)
    be = GridBackend(t, np.arange(8) * 0.5, 4.0)
    f = np.repeat((t ** 3)[:, None], 8, axis=1).astype(complex)
    d = be.d(f, 0)
    assert np.all(np.isnan(d[:2])) and np.all(np.isnan(d[-2:]))
    assert np.allclose(d[2:-2], 3 * t[2:-2, None] ** 2)


def test_grid_and_poly_residuals_agree():
    # psi(t, x) polynomial in t only, constant in x: the grid result is exact up to rounding
    rng = np.random.default_rng(4)
    psi = [random_poly(rng, 2, nvars=1) for _ in range(4)]
    cfg = FieldConfig.constant((Fraction(1, 3), 0, 0))
    t = np.linspace(0, 1, 9)
    x = np.arange(8) * 0.5
    be = GridBackend(t, x, 4.0)
    grid_psi = [be.lift(p) for p in psi]
    exact = dirac_residual(psi, cfg, BE)
    num = dirac_residual(grid_psi, cfg, be)
    for a in range(4):
        ref = be.lift(exact[a])
        assert np.allclose(num[a][2:-2], ref[2:-2], atol=1e-10)


def test_second_order_lhs_vanishes_on_poly_solution_free():
    # (box' + F) psi for constant psi and A = 0 is psi itself (mass term)
    psi = [Poly.const(GaussQ(k + 1)) for k in range(4)]
    lhs = second_order_lhs(psi, FieldConfig.zero(), BE)
    assert all(lhs[a] == psi[a] for a in range(4))
