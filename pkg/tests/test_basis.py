import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirac_tensor import clifford as cl
from dirac_tensor.basis import (BasisTriple, DegenerateU, NotChiral, NotNormalized, PreconditionViolated,
                                builtin_triple, canonical_k, eta_from_uv, random_admissible_k,
                                random_chiral_spinor, random_triple, solve_w, spinor_from_u,
                                triple_from_spinors, validate_uv)
from dirac_tensor.duality import spinor_pair_tensor, tensor_from_vec3
from dirac_tensor.numbers import GaussQ, I, exact_array

from conftest import chiral_spinors, seeds

REQUIRED = {"uu": 0, "uv": 0, "vv": 4, "uw": -8, "vw": 0, "ww": 0}


def test_builtin_upper_triple_vectors():
    t = builtin_triple(1)
    assert list(t.u.vec) == [I, 1, 0]
    assert list(t.v.vec) == [0, 0, -I]
    assert list(t.w.vec) == [-I, 1, 0]
    assert t.contractions() == REQUIRED


def test_builtin_lower_triple():
    t = builtin_triple(-1)
    assert list(t.v.vec) == [0, 0, I]
    assert t.contractions() == REQUIRED
    assert t.u.branch == t.v.branch == t.w.branch == -1


def test_builtin_spinors_generate_the_triple():
    for s in (1, -1):
        b = builtin_triple(s)
        t = triple_from_spinors(b.xi, b.eta)
        for x, y in ((t.u, b.u), (t.v, b.v), (t.w, b.w)):
            assert np.all(x.t == y.t)
        assert cl.sandwich(b.xi, cl.identity(), b.eta) == 1


@given(seeds, st.sampled_from([1, -1]))
def test_random_triples_satisfy_the_table(seed, sign):
    t = random_triple(np.random.default_rng(seed), sign)
    assert all(v == 0 for v in t.invariant_errors().values())
    assert validate_uv(t.u, t.v).ok


def test_float_triple_within_tolerance(rng):
    t = random_triple(rng, 1, exact=False)
    assert t.satisfies_invariants()
    assert validate_uv(t.u, t.v).ok


def test_triple_from_spinors_errors():
    with pytest.raises(NotChiral):
        triple_from_spinors(exact_array([1, 0, 1, 0]), exact_array([0, 1, 0, 0]))
    with pytest.raises(NotNormalized):
        triple_from_spinors(exact_array([1, 0, 0, 0]), exact_array([0, 2, 0, 0]))


# solve_w -----------------------------------------------------------------------


@given(seeds, st.sampled_from([1, -1]))
def test_solve_w_matches_spinor_w(seed, sign):
    rng = np.random.default_rng(seed)
    t = random_triple(rng, sign)
    assert np.all(solve_w(t.u, t.v).t == t.w.t)
    assert np.all(solve_w(t.u, t.v, random_admissible_k(rng, t.u, t.v)).t == t.w.t)


def test_solve_w_builtin_and_canonical_k():
    t = builtin_triple(1)
    assert np.all(solve_w(t.u, t.v).t == t.w.t)
    assert canonical_k(t.u).branch == 1


def test_solve_w_rejects_bad_input():
    t = builtin_triple(1)
    with pytest.raises(PreconditionViolated):
        solve_w(t.u, builtin_triple(-1).v)
    with pytest.raises(PreconditionViolated):
        solve_w(t.u, t.v.scale(2))
    with pytest.raises(DegenerateU):
        solve_w(t.u.scale(0), t.v)


def test_validate_uv_reports_failures():
    t = builtin_triple(1)
    rep = validate_uv(t.u, t.v.scale(2))
    assert not rep.ok
    assert {name for name, _, _ in rep.failures} >= {"v.v = 4", "(v.v) = -1"}


# spinor recovery -------------------------------------------------------------


def _same_up_to_sign(a, b):
    return np.all(a == b) or np.all(a == -b)


@given(chiral_spinors())
def test_spinor_from_u_roundtrip(p):
    s, xi = p
    u = spinor_pair_tensor(xi, xi, s)
    assert _same_up_to_sign(spinor_from_u(u), xi)


@pytest.mark.parametrize("sign", [1, -1])
def test_spinor_from_u_degenerate_path(sign):
    # first chiral component zero: -i u1 + u2 vanishes
    b = GaussQ(2, -3) / 7
    xi = exact_array([0, b, 0, 0] if sign == 1 else [0, 0, 0, b])
    u = spinor_pair_tensor(xi, xi, sign)
    u1, u2, _ = u.vec
    assert -I * u1 + u2 == 0
    assert _same_up_to_sign(spinor_from_u(u), xi)


def test_spinor_from_u_builtin():
    t = builtin_triple(1)
    assert _same_up_to_sign(spinor_from_u(t.u), t.xi)


def test_spinor_from_u_errors():
    with pytest.raises(DegenerateU):
        spinor_from_u(builtin_triple(1).u.scale(0))
    with pytest.raises(PreconditionViolated):
        spinor_from_u(tensor_from_vec3(exact_array([1, 0, 0]), 1))


@given(seeds, st.sampled_from([1, -1]))
def test_eta_from_uv_normalization(seed, sign):
    t = random_triple(np.random.default_rng(seed), sign)
    xi = spinor_from_u(t.u)
    eta = eta_from_uv(t.u, t.v, xi)
    assert cl.sandwich(xi, cl.identity(), eta) == 1
    assert np.all(spinor_pair_tensor(xi, eta, sign).t == t.v.t)


def test_eta_from_uv_when_one_xi_component_vanishes():
    t = builtin_triple(1)  # xi = (1, 0, 0, 0)
    eta = eta_from_uv(t.u, t.v, t.xi)
    assert np.all(eta == t.eta)


def test_random_chiral_spinor_is_chiral(rng):
    for s in (1, -1):
        assert cl.chirality(random_chiral_spinor(rng, s)) == s
        assert cl.chirality(random_chiral_spinor(rng, s, exact=False)) == s


# serialisation ---------------------------------------------------------------


def test_triple_json_roundtrip(rng):
    for t in (builtin_triple(1), random_triple(rng, -1), random_triple(rng, 1, exact=False)):
        back = BasisTriple.from_json(json.loads(json.dumps(t.to_json())))
        assert back.sign == t.sign
        for a, b in ((back.u, t.u), (back.v, t.v), (back.w, t.w)):
            assert np.all(a.t == b.t)


def test_triple_json_accepts_three_vectors():
    data = {"sign": 1, "u": [["0", "1"], ["1", "0"], ["0", "0"]], "v": [["0", "0"], ["0", "0"], ["0", "-1"]],
            "w": [["0", "-1"], ["1", "0"], ["0", "0"]]}
    t = BasisTriple.from_json(data)
    assert np.all(t.u.t == builtin_triple(1).u.t)
    assert t.contractions() == REQUIRED
