"""Electromagnetic potentials, field strengths and the Dirac-type operators.

Units hbar = c = m = 1 with the charge absorbed into ``A``.  Potentials are
stored with an upper index, ``A^mu``, always as exact polynomials; a
derivative *backend* decides how fields are represented and differentiated:

``PolyBackend``
    fields are :class:`~dirac_tensor.poly.Poly`; derivatives are exact.
``GridBackend``
    fields are complex arrays over a uniform ``(t, x^1)`` grid, periodic in
    ``x^1``; derivatives are finite differences (or spectral in space).

There is no silent fallback between the two: every derivative-bearing
function takes the backend explicitly.  Spinor fields are sequences of four
scalar fields.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import clifford as cl
from .duality import Bivector, dot3
from .numbers import ZERO, GaussQ, to_complex
from .poly import Poly

G = cl.METRIC
I = GaussQ(0, 1)


class BackendMismatch(TypeError):
    pass


class NonConstantInverse(ValueError):
    """A polynomial field was inverted pointwise but is not a constant."""


# ---------------------------------------------------------------------------
# field configurations


def faraday_matrix(E, H) -> np.ndarray:
    """``F^{mu nu}`` from E and H laid out as F^{0k} = -E^k, F^{12} = -H^3, ..."""
    E = [GaussQ.coerce(e) for e in E]
    H = [GaussQ.coerce(h) for h in H]
    z = ZERO
    rows = [
        [z, -E[0], -E[1], -E[2]],
        [E[0], z, -H[2], H[1]],
        [E[1], H[2], z, -H[0]],
        [E[2], -H[1], H[0], z],
    ]
    out = np.empty((4, 4), dtype=object)
    for a in range(4):
        for b in range(4):
            out[a, b] = rows[a][b]
    return out


def _frac(v) -> Fraction:
    return Fraction(str(v)) if not isinstance(v, Fraction) else v


@dataclass(frozen=True)
class FieldConfig:
    """An external field given by its potential ``A^mu`` (exact polynomials).

    ``family`` is ``"constant-F"`` (then ``E``/``H`` are set and ``A`` is the
    linear potential in the chosen gauge) or ``"poly"``.
    """

    A: tuple
    family: str = "poly"
    E: tuple | None = None
    H: tuple | None = None
    gauge: str | None = None
    description: str = ""

    def __post_init__(self):
        if len(self.A) != 4:
            raise ValueError("A needs four components")
        object.__setattr__(self, "A", tuple(a if isinstance(a, Poly) else Poly.const(a) for a in self.A))

    @classmethod
    def zero(cls) -> "FieldConfig":
        return cls((Poly(),) * 4, family="constant-F", E=(Fraction(0),) * 3,
                   H=(Fraction(0),) * 3, gauge="temporal", description="free particle, A = 0")

    @classmethod
    def constant(cls, E, H=(0, 0, 0), gauge: str | None = None, description: str = "") -> "FieldConfig":
        """Constant field strength.

        ``gauge="temporal"`` gives ``A = (0, -E t)`` (needs H = 0, periodic
        in space); ``gauge="symmetric"`` gives ``A^nu = F^{mu nu} x_mu / 2``.
        The default is temporal when H vanishes.
        """
        E = tuple(_frac(e) for e in E)
        H = tuple(_frac(h) for h in H)
        if gauge is None:
            gauge = "temporal" if not any(H) else "symmetric"
        if gauge == "temporal":
            if any(H):
                raise ValueError("temporal gauge cannot represent a magnetic field")
            A = (Poly(),) + tuple(Poly.coord(0, -e) for e in E)
        elif gauge == "symmetric":
            F = faraday_matrix(E, H)
            A = []
            for nu in range(4):
                acc = Poly()
                for mu in range(4):
                    if F[mu, nu]:
                        acc = acc + Poly.coord(mu, F[mu, nu] * G[mu] * Fraction(1, 2))
                A.append(acc)
            A = tuple(A)
        else:
            raise ValueError(f"unknown gauge {gauge!r}")
        return cls(A, family="constant-F", E=E, H=H, gauge=gauge,
                   description=description or f"constant field E={list(map(str, E))} H={list(map(str, H))}")

    @classmethod
    def from_potential(cls, A: Sequence[Poly], description: str = "") -> "FieldConfig":
        return cls(tuple(A), family="poly", description=description)

    def lowered(self) -> tuple:
        """``A_mu``."""
        return tuple(self.A[mu] if G[mu] > 0 else -self.A[mu] for mu in range(4))

    def gauge_shift(self, grad_chi: Sequence) -> "FieldConfig":
        """``A_mu -> A_mu + d_mu chi`` for a given covariant gradient ``d_mu chi``."""
        new = tuple(self.A[mu] + Poly.const(GaussQ.coerce(grad_chi[mu]) * G[mu]) for mu in range(4))
        return FieldConfig(new, family="poly", description=f"{self.description} (gauge shifted)")

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.A)

    def depends_only_on_t_x(self) -> bool:
        return not any(a.depends_on(2) or a.depends_on(3) for a in self.A)

    # json ------------------------------------------------------------------
    def to_json(self) -> dict:
        out: dict = {"family": self.family, "description": self.description}
        if self.family == "constant-F":
            out["E"] = [_fstr(e) for e in self.E]
            out["H"] = [_fstr(h) for h in self.H]
            out["gauge"] = self.gauge
        out["A_coeffs"] = {str(mu): self.A[mu].to_json() for mu in range(4)}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FieldConfig":
        family = data.get("family")
        if family == "constant-F":
            return cls.constant(data.get("E", [0, 0, 0]), data.get("H", [0, 0, 0]),
                                gauge=data.get("gauge"), description=data.get("description", ""))
        if family == "poly":
            coeffs = data.get("A_coeffs", {})
            A = tuple(Poly.from_json(coeffs.get(str(mu), {})) for mu in range(4))
            return cls.from_potential(A, description=data.get("description", ""))
        raise ValueError(f"unknown field family {family!r}")


def _fstr(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Faraday:
    """``F^{mu nu} = d^mu A^nu - d^nu A^mu`` as exact polynomial entries."""

    F: np.ndarray
    E: tuple = field(default=None)
    H: tuple = field(default=None)

    @property
    def is_constant(self) -> bool:
        return all(p.is_constant() for p in self.F.ravel())

    def constant_matrix(self) -> np.ndarray:
        out = np.empty((4, 4), dtype=object)
        for idx, p in np.ndenumerate(self.F):
            out[idx] = p.constant_value()
        return out

    def constant_EH(self) -> tuple[np.ndarray, np.ndarray]:
        m = self.constant_matrix()
        E = np.array([-m[0, 1], -m[0, 2], -m[0, 3]], dtype=object)
        H = np.array([-m[2, 3], m[1, 3], -m[1, 2]], dtype=object)
        return E, H

    def weber(self, branch: int):
        """``E - i H`` on branch +1, ``E + i H`` on branch -1, as polynomial fields."""
        E = [-self.F[0, 1], -self.F[0, 2], -self.F[0, 3]]
        H = [-self.F[2, 3], self.F[1, 3], -self.F[1, 2]]
        return [E[k] - H[k] * (I * branch) for k in range(3)]


def faraday_from_potential(config: FieldConfig) -> Faraday:
    A = config.A
    F = np.empty((4, 4), dtype=object)
    for mu in range(4):
        for nu in range(4):
            F[mu, nu] = A[nu].diff(mu) * G[mu] - A[mu].diff(nu) * G[nu]
    far = Faraday(F)
    if far.is_constant:
        E, H = far.constant_EH()
        far = Faraday(F, tuple(E), tuple(H))
    return far


# ---------------------------------------------------------------------------
# backends


class PolyBackend:
    """Exact polynomial fields."""

    name = "poly"
    exact = True
    axes = (0, 1, 2, 3)

    def lift(self, p: Poly) -> Poly:
        return p

    def c(self, z):
        return GaussQ.coerce(z)

    def scale(self, f, z):
        return f.scale(z)

    def d(self, f: Poly, mu: int) -> Poly:
        if not isinstance(f, Poly):
            raise BackendMismatch(f"poly backend got {type(f).__name__}")
        return f.diff(mu)

    def d2(self, f: Poly, mu: int) -> Poly:
        return self.d(self.d(f, mu), mu)

    def zero(self) -> Poly:
        return Poly()

    def const_field(self, z) -> Poly:
        return Poly.const(z)

    def recip(self, f):
        if isinstance(f, Poly):
            if not f.is_constant():
                raise NonConstantInverse("pointwise inverse of a non-constant polynomial")
            f = f.constant_value()
        return Poly.const(GaussQ.coerce(f).inverse())

    def is_identically_zero(self, f, scale: float = 1.0) -> bool:
        if isinstance(f, Poly):
            return f.is_zero()
        return not f

    def conj(self, f):
        return f.conjugate()


_D1 = {
    "central-2": (np.array([-0.5, 0.0, 0.5]), 1),
    "central-4": (np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0, 2),
}
_D2 = {
    "central-2": (np.array([1.0, -2.0, 1.0]), 1),
    "central-4": (np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0, 2),
}
STENCIL_ORDER = {"central-2": 2, "central-4": 4, "spectral": 8}
STENCILS = tuple(STENCIL_ORDER)
# largest |symbol| * h of the first-derivative stencil, for the step-size bound
STENCIL_SPECTRAL_RADIUS = {"central-2": 1.0, "central-4": 1.3722, "spectral": np.pi}


def periodic_derivative(f: np.ndarray, h: float, stencil: str, order: int = 1, axis: int = -1):
    """First or second derivative along a periodic axis with spacing ``h``."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if stencil == "spectral":
        k = 2 * np.pi * np.fft.fftfreq(f.shape[axis], d=h)
        shape = [1] * f.ndim
        shape[axis] = -1
        fk = np.fft.fft(f, axis=axis)
        return np.fft.ifft((1j * k.reshape(shape)) ** order * fk, axis=axis)
    coef, half = (_D1 if order == 1 else _D2)[stencil]
    acc = np.zeros_like(f, dtype=complex)
    for k, ck in enumerate(coef):
        if ck:
            acc = acc + ck * np.roll(f, half - k, axis=axis)
    return acc / h ** order


class GridBackend:
    """Fields sampled on ``t[i], x[j]`` (arrays of shape ``(len(t), len(x))``).

    Space is periodic with period ``L``; time derivatives use a central
    stencil of order ``time_order`` and leave NaN in the rows they cannot
    reach, so invalid edges propagate visibly.
    """

    name = "grid"
    exact = False
    axes = (0, 1)

    def __init__(self, t, x, L: float, stencil: str = "central-4", time_order: int = 4):
        if stencil not in STENCIL_ORDER:
            raise ValueError(f"unknown stencil {stencil!r}")
        self.t = np.asarray(t, dtype=float)
        self.x = np.asarray(x, dtype=float)
        self.L = float(L)
        self.h = self.L / len(self.x)
        self.dt = float(self.t[1] - self.t[0]) if len(self.t) > 1 else np.nan
        self.stencil = stencil
        self.time_stencil = f"central-{time_order}"
        self.T, self.X = np.meshgrid(self.t, self.x, indexing="ij")
        self._cache: dict = {}

    @property
    def shape(self):
        return self.T.shape

    def lift(self, p: Poly) -> np.ndarray:
        if not isinstance(p, Poly):
            raise BackendMismatch("grid backend lifts polynomials only")
        if p.depends_on(2) or p.depends_on(3):
            raise BackendMismatch("grid fields cannot depend on x^2 or x^3")
        key = id(p)
        hit = self._cache.get(key)
        if hit is not None and hit[0] is p:
            return hit[1]
        val = p.evaluate_grid((self.T, self.X))
        self._cache[key] = (p, val)
        return val

    def c(self, z):
        return complex(z)

    def scale(self, f, z):
        return f * complex(z)

    def zero(self):
        return np.zeros(self.shape, dtype=complex)

    def const_field(self, z):
        return np.full(self.shape, complex(z))

    def recip(self, f):
        return 1.0 / f

    def conj(self, f):
        return np.conj(f)

    def is_identically_zero(self, f, scale: float = 1.0) -> bool:
        f = np.asarray(f)
        return bool(np.nanmax(np.abs(f)) <= 1e-8 * max(1.0, scale)) if f.size else True

    def _check(self, f):
        if isinstance(f, Poly):
            raise BackendMismatch("grid backend got a polynomial field")
        f = np.asarray(f)
        if f.shape != self.shape:
            raise BackendMismatch(f"field shape {f.shape} does not match grid {self.shape}")
        return f

    def _time(self, f, table):
        coef, half = table[self.time_stencil]
        out = np.full(f.shape, np.nan + 0j)
        n = f.shape[0]
        if n <= 2 * half:
            return out
        acc = np.zeros((n - 2 * half,) + f.shape[1:], dtype=complex)
        for k, ck in enumerate(coef):
            if ck:
                acc = acc + ck * f[k: n - 2 * half + k]
        out[half: n - half] = acc
        return out

    def d(self, f, mu: int):
        f = self._check(f)
        if mu == 0:
            return self._time(f, _D1) / self.dt
        if mu == 1:
            return periodic_derivative(f, self.h, self.stencil, 1, axis=1)
        return np.zeros_like(f)

    def d2(self, f, mu: int):
        f = self._check(f)
        if mu == 0:
            return self._time(f, _D2) / self.dt ** 2
        if mu == 1:
            return periodic_derivative(f, self.h, self.stencil, 2, axis=1)
        return np.zeros_like(f)


Backend = PolyBackend | GridBackend


# ---------------------------------------------------------------------------
# operators


def _add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def _mul_const(backend, f, z):
    """``z * f`` for a constant ``z``; returns None when ``z`` is exactly zero."""
    if isinstance(z, GaussQ):
        if not z:
            return None
    elif z == 0:
        return None
    if z == 1:
        return f
    if z == -1:
        return -f
    return backend.scale(f, z)


def apply_matrix(M, psi: Sequence, backend) -> list:
    """``M psi`` for a constant 4x4 matrix ``M`` and a spinor field."""
    out = []
    for a in range(4):
        acc = None
        for b in range(4):
            acc = _add(acc, _mul_const(backend, psi[b], M[a][b]))
        out.append(backend.zero() if acc is None else acc)
    return out


def apply_field_matrix(M, psi: Sequence, backend) -> list:
    """``M psi`` where ``M`` entries are fields (or None for zero)."""
    out = []
    for a in range(4):
        acc = None
        for b in range(4):
            if M[a][b] is not None:
                acc = _add(acc, M[a][b] * psi[b])
        out.append(backend.zero() if acc is None else acc)
    return out


def row_apply(row, psi: Sequence, backend):
    """``row . psi`` for a constant row spinor and a spinor field."""
    acc = None
    for b in range(4):
        acc = _add(acc, _mul_const(backend, psi[b], row[b]))
    return backend.zero() if acc is None else acc


def const_spinor_times(backend, f, spinor) -> list:
    """Spinor field ``f * spinor`` for a scalar field and a constant spinor."""
    return [(_mul_const(backend, f, s) if _mul_const(backend, f, s) is not None else backend.zero())
            for s in spinor]


def _lifted_A(config: FieldConfig, backend):
    Alow = config.lowered()
    return [backend.lift(Alow[mu]) if not Alow[mu].is_zero() else None for mu in range(4)]


def covariant(f, mu: int, config: FieldConfig, backend, Alow=None):
    """``(i d_mu - A_mu) f``."""
    if Alow is None:
        Alow = _lifted_A(config, backend)
    out = backend.scale(backend.d(f, mu), I)
    if Alow[mu] is not None:
        out = out - Alow[mu] * f
    return out


def dirac_operator(psi: Sequence, config: FieldConfig, backend) -> list:
    """``(i dslash - Aslash) psi = gamma^mu (i d_mu - A_mu) psi``."""
    Alow = _lifted_A(config, backend)
    out = [None] * 4
    for mu in range(4):
        if mu not in backend.axes and Alow[mu] is None:
            continue
        g = cl.gamma(mu)
        pis = [None] * 4
        for b in range(4):
            if mu in backend.axes:
                pis[b] = covariant(psi[b], mu, config, backend, Alow)
            else:
                pis[b] = -(Alow[mu] * psi[b])
        term = apply_matrix(g, pis, backend)
        out = [_add(o, t) for o, t in zip(out, term)]
    return [backend.zero() if o is None else o for o in out]


def dirac_residual(psi: Sequence, config: FieldConfig, backend) -> list:
    """``(i dslash - Aslash) psi - psi``; zero iff psi solves the Dirac equation."""
    d = dirac_operator(psi, config, backend)
    return [d[a] - psi[a] for a in range(4)]


def box_prime(phi, config: FieldConfig, backend):
    """Modified d'Alembertian
    ``d^mu d_mu phi + 2i A^mu d_mu phi + i (d_mu A^mu) phi - A^mu A_mu phi + phi``.
    """
    A = config.A
    Alow = config.lowered()
    out = phi
    a2 = None
    div = None
    for mu in range(4):
        if mu in backend.axes:
            out = out + backend.scale(backend.d2(phi, mu), G[mu])
            if not A[mu].is_zero():
                out = out + backend.lift(A[mu]) * backend.scale(backend.d(phi, mu), 2 * I)
        if not A[mu].is_zero():
            a2 = _add(a2, A[mu] * Alow[mu])
            dA = A[mu].diff(mu)
            if not dA.is_zero():
                div = _add(div, dA)
    if div is not None:
        out = out + backend.scale(backend.lift(div) * phi, I)
    if a2 is not None and not a2.is_zero():
        out = out - backend.lift(a2) * phi
    return out


def f_matrix(faraday: Faraday, backend) -> list:
    """``F = 1/2 F_{nu mu} sigma^{nu mu}`` as a 4x4 nested list of fields (None = 0)."""
    acc = [[None] * 4 for _ in range(4)]
    for m in range(4):
        for n in range(4):
            if m == n or faraday.F[m, n].is_zero():
                continue
            low = faraday.F[m, n].scale(GaussQ(Fraction(G[m] * G[n], 2)))
            s = cl.sigma(m, n)
            for a in range(4):
                for b in range(4):
                    if s[a, b]:
                        acc[a][b] = _add(acc[a][b], low.scale(s[a, b]))
    return [[backend.lift(e) if e is not None and not e.is_zero() else None for e in row] for row in acc]


def f_matrix_constant(faraday: Faraday) -> np.ndarray:
    """Exact constant F-matrix (requires a constant field strength)."""
    Fc = faraday.constant_matrix()
    out = cl.zero_matrix().copy()
    for m in range(4):
        for n in range(4):
            if m != n and Fc[m, n]:
                out = out + cl.sigma(m, n) * (Fc[m, n] * G[m] * G[n] * Fraction(1, 2))
    return out


def second_order_residual(psi: Sequence, config: FieldConfig, backend) -> list:
    """``D^2 psi - (1 - box' - F) psi`` with ``D = i dslash - Aslash``.

    Vanishes identically for every psi and A (operator identity).
    """
    d2 = dirac_operator(dirac_operator(psi, config, backend), config, backend)
    bp = [box_prime(p, config, backend) for p in psi]
    fpsi = apply_field_matrix(f_matrix(faraday_from_potential(config), backend), psi, backend)
    return [d2[a] - psi[a] + bp[a] + fpsi[a] for a in range(4)]


def second_order_lhs(psi: Sequence, config: FieldConfig, backend) -> list:
    """``(box' + F) psi``."""
    bp = [box_prime(p, config, backend) for p in psi]
    fpsi = apply_field_matrix(f_matrix(faraday_from_potential(config), backend), psi, backend)
    return [bp[a] + fpsi[a] for a in range(4)]


# ---------------------------------------------------------------------------
# f-scalars


def f_scalar(faraday: Faraday, a: Bivector, backend=None):
    """``1/2 F_{mu nu} a^{mu nu}``.

    With ``backend=None`` the field strength must be constant and an exact
    (or float, for float ``a``) number is returned; otherwise a field.
    """
    if backend is None:
        Fc = faraday.constant_matrix()
        acc = ZERO
        for m in range(4):
            for n in range(4):
                if m != n and Fc[m, n]:
                    acc = acc + a.t[m, n] * (Fc[m, n] * G[m] * G[n])
        return acc * Fraction(1, 2) if a.exact else complex(acc) * 0.5
    acc = None
    for m in range(4):
        for n in range(4):
            if m == n or faraday.F[m, n].is_zero() or not a.t[m, n]:
                continue
            acc = _add(acc, faraday.F[m, n].scale(GaussQ.coerce(a.t[m, n]) * G[m] * G[n]))
    if acc is None:
        return backend.zero()
    return backend.lift(acc.scale(Fraction(1, 2)))


def f_sandwich(faraday: Faraday, alpha, beta, backend=None):
    """``alpha-bar F beta^c`` using the F-matrix."""
    if backend is None:
        return cl.sandwich(alpha, f_matrix_constant(faraday), beta)
    M = f_matrix(faraday, backend)
    row = cl.adjoint(alpha)
    col = cl.charge_conjugate(beta)
    acc = None
    for a in range(4):
        for b in range(4):
            if M[a][b] is None:
                continue
            z = row[a] * col[b]
            if z:
                acc = _add(acc, backend.scale(M[a][b], z))
    return backend.zero() if acc is None else acc


def f_vec3(faraday: Faraday, avec, branch: int, backend=None):
    """``(a . (E -+ i H))``: the 3-vector route to the f-scalars."""
    W = faraday.weber(branch)
    acc = None
    for k in range(3):
        if not W[k].is_zero() and avec[k]:
            acc = _add(acc, W[k].scale(GaussQ.coerce(avec[k])))
    if acc is None:
        acc = Poly()
    if backend is None:
        val = acc.constant_value()
        return val if np.asarray(avec).dtype == object else complex(val)
    return backend.lift(acc)


def weber_contraction(E, H, a: Bivector):
    """``F_{mu nu} a^{mu nu}`` for constant E, H (exact)."""
    Fm = faraday_matrix(E, H)
    acc = ZERO
    for m in range(4):
        for n in range(4):
            if m != n:
                acc = acc + a.t[m, n] * Fm[m, n] * (G[m] * G[n])
    return acc


def weber_vector(E, H, branch: int) -> np.ndarray:
    E = [GaussQ.coerce(e) for e in E]
    H = [GaussQ.coerce(h) for h in H]
    return np.array([E[k] - H[k] * (I * branch) for k in range(3)], dtype=object)


def weber_rhs(E, H, a: Bivector):
    """``2 (a . (E -+ i H))`` on the tensor's branch."""
    return dot3(a.vec, weber_vector(E, H, a.branch)) * 2


def to_float_field(f):
    return to_complex(f)
