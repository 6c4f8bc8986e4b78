from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirac_tensor.numbers import GaussQ, I, exact_array, is_exact, isclose, max_abs, principal_sqrt
from dirac_tensor.poly import Poly, monomials, random_poly

from conftest import gaussq, nonzero_gaussq


@given(gaussq, gaussq, gaussq)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(nonzero_gaussq)
def test_inverse(a):
    assert a * a.inverse() == 1
    assert a / a == 1


@given(gaussq)
def test_conjugate_and_abs2(a):
    assert a * a.conjugate() == a.abs2()
    assert a.conjugate().conjugate() == a


@given(gaussq)
def test_sqrt_of_square_is_plus_or_minus(a):
    r = (a * a).sqrt()
    assert r == a or r == -a
    assert r.re > 0 or (r.re == 0 and r.im >= 0)


def test_sqrt_principal_branch():
    assert GaussQ(-4).sqrt() == GaussQ(0, 2)
    assert GaussQ(0, 2).sqrt() == GaussQ(1, 1)
    with pytest.raises(ValueError):
        GaussQ(2).sqrt()


def test_complex_agrees_with_exact():
    z = GaussQ(Fraction(1, 3), Fraction(-2, 5))
    w = GaussQ(2, 7)
    assert complex(z * w) == pytest.approx(complex(z) * complex(w))
    assert complex(principal_sqrt(GaussQ(3, 4))) == pytest.approx(np.sqrt(3 + 4j))


def test_parse_roundtrip():
    z = GaussQ(Fraction(-7, 3), Fraction(5, 2))
    assert GaussQ.parse(z.to_pair()) == z


def test_mode_helpers():
    a = exact_array([1, I, 0])
    assert is_exact(a) and not is_exact(np.zeros(3))
    assert isclose(a, np.array([1, 1j, 0]))
    assert max_abs(a) == 1.0
    assert max_abs(np.array([])) == 0.0


# polynomials -----------------------------------------------------------------

polys = st.builds(lambda seed, deg: random_poly(np.random.default_rng(seed), deg, density=0.6),
                  st.integers(0, 10_000), st.integers(0, 3))
points = st.tuples(*[st.fractions(-3, 3, max_denominator=4)] * 4)


@given(polys, polys, points)
def test_poly_ring_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(polys, polys, st.integers(0, 3))
def test_leibniz(p, q, mu):
    assert (p * q).diff(mu) == p.diff(mu) * q + p * q.diff(mu)


@given(polys, st.integers(0, 3), st.integers(0, 3))
def test_mixed_partials_commute(p, a, b):
    assert p.diff(a).diff(b) == p.diff(b).diff(a)


@given(polys)
def test_json_roundtrip(p):
    assert Poly.from_json(p.to_json()) == p


def test_monomial_count():
    assert len(monomials(2, 4)) == 15
    assert len(monomials(3, 2)) == 10


def test_derivative_of_monomial():
    p = Poly({(2, 1, 0, 0): 3})
    assert p.diff(0) == Poly({(1, 1, 0, 0): 6})
    assert p.diff(2).is_zero()


def test_evaluate_grid_matches_exact():
    p = random_poly(np.random.default_rng(0), 3, density=0.7)
    t, x = np.meshgrid([0.5, 1.0], [-1.0, 0.25], indexing="ij")
    vals = p.evaluate_grid((t, x))
    for i in range(2):
        for j in range(2):
            exact = p((Fraction(t[i, j]), Fraction(x[i, j]), 0, 0))
            assert vals[i, j] == pytest.approx(complex(exact))
