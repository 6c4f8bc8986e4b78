"""Antisymmetric rank-2 tensors, Hodge duality and spinor-pair tensors.

Branch convention: a bivector on branch ``+1`` ("plus", upper signs)
satisfies ``T = -i *T``, i.e. ``*T = +i T``; branch ``-1`` satisfies
``*T = -i T``.  On branch ``s`` the tensor is fixed by its 3-vector
``a_k = T^{0k}`` through ``T^{jk} = s i eps_{jkl} a_l``.

Tensors may carry trailing dimensions (``t.shape == (4, 4, ...)``) so the
same code handles grid fields.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import clifford as cl
from .numbers import ATOL, ZERO, GaussQ, is_exact, isclose, max_abs, to_complex

_G = cl.METRIC
I = GaussQ(0, 1)
_CYCLIC = ((1, 2, 3), (2, 3, 1), (3, 1, 2))  # (l, j, k): T^{jk} <-> a_l


class BranchError(ValueError):
    pass


def _i(exact: bool):
    return I if exact else 1j


def _zero_like(t):
    if isinstance(t, np.ndarray) and t.ndim > 2:
        return np.zeros(t.shape[2:], dtype=t.dtype)
    return ZERO if is_exact(t) else 0j


def _new(shape_tail, exact: bool):
    out = np.empty((4, 4) + tuple(shape_tail), dtype=object if exact else complex)
    if exact:
        out.fill(ZERO)
    else:
        out.fill(0)
    return out


def hodge(t: np.ndarray) -> np.ndarray:
    """``(*T)^{ab} = 1/2 eps^{abcd} T_{cd}`` for a raw 4x4 array."""
    t = np.asarray(t)
    exact = t.dtype == object
    out = _new(t.shape[2:], exact)
    eps = cl.levi_civita()
    for a in range(4):
        for b in range(4):
            if a == b:
                continue
            acc = None
            for c in range(4):
                for d in range(4):
                    e = eps[a, b, c, d]
                    if e == 0:
                        continue
                    term = t[c, d] * (e * _G[c] * _G[d])
                    acc = term if acc is None else acc + term
            out[a, b] = acc * (GaussQ(1, 0) / 2 if exact else 0.5)
    return out


def _atol(t) -> float:
    """Absolute floor for float comparisons, proportional to the tensor's size."""
    return max(ATOL, 1e-12 * max_abs(t))


def is_antisymmetric(t) -> bool:
    t = np.asarray(t)
    return isclose(t, -np.swapaxes(t, 0, 1), atol=_atol(t))


def detect_branch(t) -> int | None:
    """Branch (+1 or -1) the tensor satisfies, None if neither (or zero)."""
    t = np.asarray(t)
    if max_abs(t) == 0:
        return None
    star = hodge(t)
    i = _i(t.dtype == object)
    for s in (1, -1):
        if isclose(star, t * (i * s), atol=_atol(t)):
            return s
    return None


@dataclass(frozen=True, eq=False)
class Bivector:
    """Antisymmetric complex tensor ``t^{mu nu}`` with an optional duality branch tag.

    The tag is checked against the Hodge dual on construction.  The zero
    tensor is accepted on either branch.
    """

    t: np.ndarray
    branch: int | None = None

    def __post_init__(self):
        t = np.asarray(self.t)
        if t.shape[:2] != (4, 4):
            raise ValueError(f"bivector needs a (4, 4, ...) array, got {t.shape}")
        if not is_antisymmetric(t):
            raise ValueError("tensor is not antisymmetric")
        if self.branch not in (None, 1, -1):
            raise ValueError("branch must be +1, -1 or None")
        if self.branch is not None and max_abs(t) != 0:
            star = hodge(t)
            if not isclose(star, t * (_i(t.dtype == object) * self.branch), atol=_atol(t)):
                raise BranchError(f"tensor is not on duality branch {self.branch:+d}")
        object.__setattr__(self, "t", t)

    @property
    def exact(self) -> bool:
        return self.t.dtype == object

    @property
    def vec(self) -> np.ndarray:
        return vec3_from_tensor(self)

    def lower(self) -> np.ndarray:
        """``t_{mu nu}``."""
        g = np.array(_G)
        scale = np.multiply.outer(g, g).reshape((4, 4) + (1,) * (self.t.ndim - 2))
        return self.t * scale

    def conj_tensor(self) -> "Bivector":
        """Entrywise complex conjugate (lands on the opposite branch)."""
        return Bivector(np.conj(self.t), None if self.branch is None else -self.branch)

    def to_float(self) -> "Bivector":
        return Bivector(to_complex(self.t), self.branch)

    def __add__(self, other: "Bivector") -> "Bivector":
        br = self.branch if self.branch == other.branch else None
        return Bivector(self.t + other.t, br)

    def __sub__(self, other: "Bivector") -> "Bivector":
        br = self.branch if self.branch == other.branch else None
        return Bivector(self.t - other.t, br)

    def scale(self, c) -> "Bivector":
        return Bivector(self.t * c, self.branch)

    def equals(self, other: "Bivector") -> bool:
        return isclose(self.t, other.t, atol=max(_atol(self.t), _atol(other.t)))

    def __repr__(self):
        return f"Bivector(branch={self.branch}, vec={list(self.vec)})"


def hodge_dual(t: Bivector) -> Bivector:
    """Hodge dual; a tagged tensor keeps its tag (``*T`` is ``+-iT``)."""
    return Bivector(hodge(t.t), t.branch)


def tensor_from_vec3(a, sign: int) -> Bivector:
    """The branch-``sign`` tensor whose ``0k`` entries are ``a``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    a = np.asarray(a)
    exact = a.dtype == object
    out = _new(a.shape[1:], exact)
    i = _i(exact) * sign
    for k in range(3):
        out[0, k + 1] = a[k]
        out[k + 1, 0] = -a[k]
    for l, j, k in _CYCLIC:
        out[j, k] = a[l - 1] * i
        out[k, j] = -(a[l - 1] * i)
    return Bivector(out, sign)


def vec3_from_tensor(t: Bivector) -> np.ndarray:
    return np.array([t.t[0, 1], t.t[0, 2], t.t[0, 3]], dtype=t.t.dtype)


def contract(t: Bivector, s: Bivector):
    """``T^{mu nu} S_{mu nu}``."""
    tt, ss = t.t, s.t
    if tt.dtype != ss.dtype:
        tt, ss = to_complex(tt), to_complex(ss)
    acc = None
    for m in range(4):
        for n in range(4):
            if m == n:
                continue
            term = tt[m, n] * ss[m, n]
            if _G[m] * _G[n] < 0:
                term = -term
            acc = term if acc is None else acc + term
    return acc


def dot3(a, b):
    """Unconjugated bilinear ``a^i b^i``."""
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross3(a, b) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    out = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
    dtype = object if (a.dtype == object and b.dtype == object) else complex
    if dtype is complex:
        out = [to_complex(x) if not isinstance(x, np.ndarray) else x for x in out]
    return np.array(out, dtype=dtype)


def sigma_sandwich_tensor(alpha, beta) -> np.ndarray:
    """Raw ``alpha-bar sigma^{mu nu} beta^c`` for constant spinors."""
    alpha = np.asarray(alpha)
    beta = np.asarray(beta)
    exact = is_exact(alpha) and is_exact(beta)
    out = _new((), exact)
    if not exact:
        alpha, beta = to_complex(alpha), to_complex(beta)
    row = cl.adjoint(alpha)
    col = cl.charge_conjugate(beta)
    for m in range(4):
        for n in range(m + 1, 4):
            s = cl.sigma(m, n) if exact else to_complex(cl.sigma(m, n))
            val = row @ s @ col
            out[m, n] = val
            out[n, m] = -val
    return out


def spinor_pair_tensor(chi, zeta, chirality: int) -> Bivector:
    """``theta^{mu nu} = (chi_s)-bar sigma^{mu nu} (zeta_s)^c`` with ``s = chirality``.

    Inputs are projected onto the requested chirality first.  The result is
    on branch ``chirality``.
    """
    chi_s = cl.chiral_project(np.asarray(chi), chirality)
    zeta_s = cl.chiral_project(np.asarray(zeta), chirality)
    return Bivector(sigma_sandwich_tensor(chi_s, zeta_s), chirality)


def spinor_tensor(psi, chirality: int) -> Bivector:
    """``psi_s^T C sigma^{mu nu} psi_s`` with ``s = chirality``; on branch ``-chirality``."""
    psi_s = cl.chiral_project(np.asarray(psi), chirality)
    exact = is_exact(psi_s)
    c = cl.charge_matrix() if exact else to_complex(cl.charge_matrix())
    row = psi_s @ c
    out = _new((), exact)
    for m in range(4):
        for n in range(m + 1, 4):
            s = cl.sigma(m, n) if exact else to_complex(cl.sigma(m, n))
            val = row @ s @ psi_s
            out[m, n] = val
            out[n, m] = -val
    return Bivector(out, -chirality)


def tensor_rank(tensors) -> int:
    """Numerical rank of a family of bivectors viewed as 16-vectors."""
    mat = np.array([to_complex(np.asarray(t.t)).ravel() for t in tensors])
    return int(np.linalg.matrix_rank(mat, tol=1e-9))


__all__ = [
    "Bivector", "BranchError", "hodge", "hodge_dual", "detect_branch",
    "tensor_from_vec3", "vec3_from_tensor", "contract", "dot3", "cross3",
    "spinor_pair_tensor", "spinor_tensor", "sigma_sandwich_tensor", "tensor_rank",
]
