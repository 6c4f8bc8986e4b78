"""SL(2, C) spinor maps and the Lorentz matrices they induce on tensors.

A spinor map ``s`` acts on Dirac spinors as ``diag(s, (s^dagger)^{-1})`` in
the chiral basis and on vectors through the explicit 4x4 product
``Lambda = 1/2 M(s) N(s^*)``.  Tensors transform as ``Lambda T Lambda^T``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import clifford as cl
from .duality import Bivector
from .numbers import GaussQ, exact_array, is_exact, isclose, to_complex
from .poly import random_gaussq

I = GaussQ(0, 1)


class Singular(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SpinHalfMap:
    """2x2 complex matrix of unit determinant."""

    s: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.s)
        if s.shape != (2, 2):
            raise ValueError("spin map must be 2x2")
        if not isclose(self.det, 1, rtol=1e-12, atol=1e-12):
            raise ValueError(f"det(s) = {self.det}, expected 1")
        object.__setattr__(self, "s", s)

    @property
    def det(self):
        s = np.asarray(self.s)
        return s[0, 0] * s[1, 1] - s[0, 1] * s[1, 0]

    @property
    def exact(self) -> bool:
        return is_exact(self.s)

    def __matmul__(self, other: "SpinHalfMap") -> "SpinHalfMap":
        return SpinHalfMap(self.s @ other.s)

    def __neg__(self) -> "SpinHalfMap":
        return SpinHalfMap(-self.s)

    def inverse_dagger(self) -> np.ndarray:
        """``(s^dagger)^{-1}`` in adjugate form (uses det = 1)."""
        (a, b), (c, d) = self.s
        return np.array([[np.conj(d), -np.conj(c)], [-np.conj(b), np.conj(a)]],
                        dtype=self.s.dtype)


def identity_map(exact: bool = True) -> SpinHalfMap:
    return SpinHalfMap(exact_array([[1, 0], [0, 1]]) if exact else np.eye(2, dtype=complex))


def random_sl2c(seed, exact: bool = False, num: int = 3, den: int = 3) -> SpinHalfMap:
    """Reproducible random element of SL(2, C).

    Float mode draws normal entries and divides by a square root of the
    determinant.  Exact mode draws ``s11, s12, s21`` as small Gaussian
    rationals and solves ``s22 = (1 + s12 s21) / s11``, so no root is needed.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for _ in range(1000):
        if exact:
            a, b, c = (random_gaussq(rng, num, den) for _ in range(3))
            if not a:
                continue
            d = (b * c + 1) / a
            return SpinHalfMap(np.array([[a, b], [c, d]], dtype=object))
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(det) > 1e-8:
            return SpinHalfMap(m / np.sqrt(det))
    raise Singular("could not draw a non-singular matrix")


def boost_z(lam) -> SpinHalfMap:
    """``diag(lam, 1/lam)``: a boost along x^3 for real positive ``lam``."""
    lam = GaussQ.coerce(lam) if not isinstance(lam, (float, complex)) else lam
    inv = lam.inverse() if isinstance(lam, GaussQ) else 1 / lam
    return SpinHalfMap(np.array([[lam, 0 * lam], [0 * lam, inv]],
                                dtype=object if isinstance(lam, GaussQ) else complex))


def rotation_z(phase=GaussQ(3, 4) / 5) -> SpinHalfMap:
    """``diag(c, c^*)`` for a unit-modulus ``c``: a rotation about x^3."""
    c = GaussQ.coerce(phase) if not isinstance(phase, (float, complex)) else complex(phase)
    return SpinHalfMap(np.array([[c, 0 * c], [0 * c, np.conj(c)]],
                                dtype=object if isinstance(c, GaussQ) else complex))


def spinor_rep(s: SpinHalfMap) -> np.ndarray:
    """``diag(s, (s^dagger)^{-1})`` acting on Dirac spinors."""
    out = exact_array(np.zeros((4, 4), dtype=int)) if s.exact else np.zeros((4, 4), dtype=complex)
    out[:2, :2] = s.s
    out[2:, 2:] = s.inverse_dagger()
    return out


def vector_rep(s: SpinHalfMap) -> np.ndarray:
    """``Lambda^mu_nu`` induced by ``s``, transcribed as a product of two 4x4 matrices."""
    (a, b), (c, d) = s.s
    i = I if s.exact else 1j
    left = np.array([
        [a, b, c, d],
        [c, d, a, b],
        [-i * c, -i * d, i * a, i * b],
        [a, b, -c, -d],
    ], dtype=s.s.dtype)
    ac, bc, cc, dc = (np.conj(z) for z in (a, b, c, d))
    right = np.array([
        [ac, bc, -i * bc, ac],
        [bc, ac, i * ac, -bc],
        [cc, dc, -i * dc, cc],
        [dc, cc, i * cc, -dc],
    ], dtype=s.s.dtype)
    half = GaussQ(1, 0) / 2 if s.exact else 0.5
    return (left @ right) * half


def metric_defect(lam: np.ndarray):
    """``Lambda^T g Lambda - g`` (exact or float)."""
    if lam.dtype == object:
        g = exact_array(np.diag(cl.METRIC))
    else:
        g = np.diag(cl.METRIC).astype(complex)
    return lam.T @ g @ lam - g


def transform_tensor(lam: np.ndarray, t: Bivector) -> Bivector:
    """``Lambda T Lambda^T``; the duality branch is kept."""
    tt = t.t
    if lam.dtype != tt.dtype:
        lam, tt = to_complex(lam), to_complex(tt)
    return Bivector(lam @ tt @ lam.T, t.branch)


def transform_spinor(s: SpinHalfMap, psi) -> np.ndarray:
    psi = np.asarray(psi)
    rep = spinor_rep(s)
    if rep.dtype != psi.dtype:
        rep, psi = to_complex(rep), to_complex(psi)
    return rep @ psi


__all__ = [
    "SpinHalfMap", "Singular", "identity_map", "random_sl2c", "boost_z", "rotation_z",
    "spinor_rep", "vector_rep", "metric_defect", "transform_tensor", "transform_spinor",
]
