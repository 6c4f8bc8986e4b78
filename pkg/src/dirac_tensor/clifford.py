"""Gamma-matrix algebra in the chiral basis.

Everything here returns exact object arrays of :class:`GaussQ`.  Spinors are
shape ``(4,)`` arrays and matrices shape ``(4, 4)``; the functions that take
spinors accept float (complex128) arrays as well and then compute in float
mode.

Conventions
-----------
* metric ``diag(+1, -1, -1, -1)``; all tensors are stored with upper indices
* ``gamma^0 = [[0, -I], [-I, 0]]``, ``gamma^k = [[0, s_k], [-s_k, 0]]``,
  ``gamma^5 = diag(I, -I)``, ``C = diag(-i s_2, i s_2)``
* the Dirac adjoint is ``psi^dagger gamma^0`` and the charge conjugate is
  ``psi^c = C (psi-bar)^T = C gamma^0 psi^*``
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import numpy as np

from .numbers import ONE, ZERO, GaussQ, exact_array, is_exact, to_complex

METRIC = (1, -1, -1, -1)

_PAULI = (
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((0, -1j), (1j, 0)),
    ((1, 0), (0, -1)),
)


def _check_index(mu) -> int:
    if not isinstance(mu, (int, np.integer)) or not 0 <= mu <= 3:
        raise IndexError(f"Lorentz index must be 0..3, got {mu!r}")
    return int(mu)


def _block(a, b, c, d) -> np.ndarray:
    """4x4 exact matrix from four 2x2 blocks [[a, b], [c, d]]."""
    rows = [list(a[0]) + list(b[0]), list(a[1]) + list(b[1]),
            list(c[0]) + list(d[0]), list(c[1]) + list(d[1])]
    return exact_array(rows)


def _scale2(m, s):
    return tuple(tuple(s * x for x in row) for row in m)


_Z2 = ((0, 0), (0, 0))


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def _gamma(mu: int) -> np.ndarray:
    if mu == 0:
        return _frozen(_block(_Z2, _scale2(_PAULI[0], -1), _scale2(_PAULI[0], -1), _Z2))
    s = _PAULI[mu]
    return _frozen(_block(_Z2, s, _scale2(s, -1), _Z2))


def gamma(mu: int) -> np.ndarray:
    """``gamma^mu`` (upper index) in the chiral basis."""
    return _gamma(_check_index(mu))


@lru_cache(maxsize=None)
def gamma5() -> np.ndarray:
    return _frozen(_block(_PAULI[0], _Z2, _Z2, _scale2(_PAULI[0], -1)))


@lru_cache(maxsize=None)
def charge_matrix() -> np.ndarray:
    """The charge conjugation matrix ``C``."""
    is2 = _scale2(_PAULI[2], 1j)
    return _frozen(_block(_scale2(is2, -1), _Z2, _Z2, is2))


@lru_cache(maxsize=None)
def identity() -> np.ndarray:
    return _frozen(exact_array(np.eye(4, dtype=int)))


@lru_cache(maxsize=None)
def zero_matrix() -> np.ndarray:
    return _frozen(exact_array(np.zeros((4, 4), dtype=int)))


@lru_cache(maxsize=None)
def _sigma(mu: int, nu: int) -> np.ndarray:
    g1, g2 = gamma(mu), gamma(nu)
    return _frozen((g1 @ g2 - g2 @ g1) * GaussQ(0, Fraction(1, 2)))


def sigma(mu: int, nu: int) -> np.ndarray:
    """``sigma^{mu nu} = (i/2)[gamma^mu, gamma^nu]``."""
    return _sigma(_check_index(mu), _check_index(nu))


def metric(mu: int, nu: int) -> int:
    """``g^{mu nu}`` (numerically equal to ``g_{mu nu}``)."""
    return METRIC[mu] if mu == nu else 0


@lru_cache(maxsize=None)
def _levi_civita_table() -> np.ndarray:
    eps = np.zeros((4, 4, 4, 4), dtype=int)
    for perm in permutations(range(4)):
        inversions = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
        eps[perm] = -1 if inversions % 2 else 1
    eps.setflags(write=False)
    return eps


def levi_civita() -> np.ndarray:
    """``epsilon^{abcd}`` with ``epsilon^{0123} = +1`` as an int array."""
    return _levi_civita_table()


def lower_levi_civita() -> np.ndarray:
    """``epsilon_{abcd}``, obtained by lowering all four indices with the metric."""
    g = np.array(METRIC)
    return np.einsum("abcd,a,b,c,d->abcd", levi_civita(), g, g, g, g)


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


# spinor operations -------------------------------------------------------

def _as_mode(*arrays):
    """Bring arrays to a common mode: exact if all exact, else complex."""
    if all(is_exact(a) for a in arrays):
        return arrays
    return tuple(to_complex(a) for a in arrays)


def adjoint(psi: np.ndarray) -> np.ndarray:
    """Dirac adjoint ``psi^dagger gamma^0`` as a row vector."""
    (psi, g0) = _as_mode(np.asarray(psi), gamma(0))
    return np.conj(psi) @ g0


def charge_conjugate(psi: np.ndarray) -> np.ndarray:
    """``psi^c = C (psi-bar)^T``."""
    psi = np.asarray(psi)
    (psi, c, g0) = _as_mode(psi, charge_matrix(), gamma(0))
    return c @ (g0 @ np.conj(psi))


def sandwich(alpha: np.ndarray, m: np.ndarray, beta: np.ndarray):
    """``alpha-bar M beta^c``; bilinear in ``M``."""
    alpha, m, beta = _as_mode(np.asarray(alpha), np.asarray(m), np.asarray(beta))
    return adjoint(alpha) @ m @ charge_conjugate(beta)


def chiral_project(psi: np.ndarray, sign: int) -> np.ndarray:
    """``(1 + sign*gamma^5)/2 psi``: keeps the upper pair for +1, lower pair for -1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    psi = np.asarray(psi)
    out = psi.copy()
    if sign == 1:
        out[2:] = ZERO if is_exact(psi) else 0
    else:
        out[:2] = ZERO if is_exact(psi) else 0
    return out


def chirality(psi: np.ndarray) -> int | None:
    """+1 / -1 if ``psi`` is a nonzero gamma^5 eigenvector, else None."""
    psi = np.asarray(psi)
    top = any(bool(x) for x in psi[:2])
    bottom = any(bool(x) for x in psi[2:])
    if top and not bottom:
        return 1
    if bottom and not top:
        return -1
    return None


def slash(a) -> np.ndarray:
    """``a_mu gamma^mu`` for a covariant 4-vector ``a`` (exact or float)."""
    out = sum(gamma(mu) * a[mu] for mu in range(4))
    return out


# four-gamma expansion ----------------------------------------------------

def gamma2(mu: int, nu: int) -> np.ndarray:
    """Antisymmetrised product: ``gamma^mu gamma^nu`` if mu != nu, else 0."""
    if mu == nu:
        return zero_matrix()
    return gamma(mu) @ gamma(nu)


def gamma4(mu: int, nu: int, s: int, lam: int) -> np.ndarray:
    """Antisymmetrised product of four: the plain product for permutations of 0123, else 0."""
    if len({mu, nu, s, lam}) < 4:
        return zero_matrix()
    return gamma(mu) @ gamma(nu) @ gamma(s) @ gamma(lam)


def four_gamma_expand(mu: int, nu: int, s: int, lam: int) -> np.ndarray:
    """``gamma^mu gamma^nu gamma^s gamma^lam`` rebuilt from metric terms and
    antisymmetrised products.  Must agree with the direct product."""
    for i in (mu, nu, s, lam):
        _check_index(i)
    g = metric
    scalar = g(mu, nu) * g(s, lam) - g(mu, s) * g(nu, lam) + g(mu, lam) * g(nu, s)
    out = identity() * scalar
    out = out + gamma2(s, lam) * g(mu, nu) - gamma2(nu, lam) * g(mu, s)
    out = out + gamma2(nu, s) * g(mu, lam) + gamma2(mu, lam) * g(nu, s)
    out = out - gamma2(mu, s) * g(nu, lam) + gamma2(mu, nu) * g(s, lam)
    return out + gamma4(mu, nu, s, lam)


def gamma_sigma_gamma(mu: int, nu: int, s: int, lam: int) -> np.ndarray:
    """Expansion of ``gamma^mu sigma^{nu s} gamma^lam`` for ``nu != s``."""
    if nu == s:
        raise ValueError("expansion only holds for nu != s")
    g = metric
    i = GaussQ(0, 1)
    out = identity() * (g(mu, nu) * g(s, lam) - g(mu, s) * g(nu, lam))
    out = out + gamma2(s, lam) * g(mu, nu) - gamma2(nu, lam) * g(mu, s)
    out = out + gamma2(nu, s) * g(mu, lam) - gamma2(mu, s) * g(nu, lam)
    out = out + gamma2(mu, nu) * g(s, lam) + gamma4(mu, nu, s, lam)
    return out * i


__all__ = [
    "METRIC", "gamma", "gamma5", "charge_matrix", "identity", "zero_matrix",
    "sigma", "metric", "levi_civita", "lower_levi_civita", "dagger", "adjoint",
    "charge_conjugate", "sandwich", "chiral_project", "chirality", "slash",
    "gamma2", "gamma4", "four_gamma_expand", "gamma_sigma_gamma", "ONE",
]
