"""One-component form of the Dirac equation and reconstruction from it.

Given a basis triple (xi, eta; u, v, w) the scalar ``phi = xi-bar psi``
obeys a fourth-order linear equation

    (box' - f_xe) f_xx^{-1} (box' + f_xe) phi + f_ee phi = 0,

with ``f_xx = xi-bar F xi^c``, ``f_xe = xi-bar F eta^c``, ``f_ee = eta-bar F eta^c``.
The same f-scalars can be written as ``F_{mu nu} a^{mu nu} / 2`` for
``a = u, v, w`` or as ``a . (E -+ i H)``, giving three forms of the
residual.  From ``phi`` alone one recovers ``eta-bar psi``, the whole
spinor, and the Dirac current.

All functions take a derivative backend from :mod:`dirac_tensor.fields`.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import clifford as cl
from .basis import BasisTriple, eta_from_uv, spinor_from_u
from .duality import Bivector
from .fields import (FieldConfig, GridBackend, NonConstantInverse, PolyBackend,
                     _lifted_A, covariant, dirac_operator, f_sandwich, f_scalar,
                     f_vec3, faraday_from_potential, row_apply, second_order_lhs,
                     box_prime)
from .numbers import GaussQ, is_exact, to_complex
from .poly import Poly

FORMS = ("spinor", "tensor", "vec3")
_G = cl.METRIC


class NonTransversal(ValueError):
    """``f_xx`` vanishes (to tolerance): the one-component reduction does not apply."""


class NonPositiveDensity(ValueError):
    """The extracted ``(j^0)^2`` is negative beyond tolerance."""


class BranchDiscontinuity(ValueError):
    """Square-root continuation of phi could not be made unambiguous."""

    def __init__(self, msg, record=None):
        super().__init__(msg)
        self.record = record


@dataclass
class BranchRecord:
    anchor: tuple | None = None
    zero_points: int = 0
    ambiguous: list = field(default_factory=list)
    unreached: int = 0

    @property
    def clean(self) -> bool:
        return not self.ambiguous and not self.unreached


@dataclass
class ScalarComponentField:
    """``phi0 = xi-bar psi`` and ``phi1 = eta-bar psi`` (derived or given)."""

    phi0: object
    phi1: object = None
    phi1_direct: object = None
    branch: BranchRecord | None = None

    def negated(self) -> "ScalarComponentField":
        return ScalarComponentField(-self.phi0, None if self.phi1 is None else -self.phi1,
                                    None if self.phi1_direct is None else -self.phi1_direct,
                                    self.branch)


@dataclass
class CurrentField:
    """Current ``j^mu`` (first axis) with chiral parts; ``jj_*`` hold ``j^mu j^nu``."""

    j: np.ndarray
    j_plus: np.ndarray
    j_minus: np.ndarray
    jj_plus: np.ndarray | None = None
    jj_minus: np.ndarray | None = None


# ---------------------------------------------------------------------------
# helpers


def triple_spinors(triple: BasisTriple) -> tuple[np.ndarray, np.ndarray]:
    """``(xi, eta)`` of a triple, recovered from (u, v) if not cached."""
    if triple.xi is not None and triple.eta is not None:
        return triple.xi, triple.eta
    xi = spinor_from_u(triple.u)
    return xi, eta_from_uv(triple.u, triple.v, xi)


def _fnorm(faraday, backend) -> float:
    vals = [np.nanmax(np.abs(np.asarray(to_complex(backend.lift(p)) if not backend.exact
                                        else complex(p.constant_value()) if p.is_constant() else 1.0)))
            for p in faraday.F.ravel() if not p.is_zero()]
    return max(vals, default=0.0)


def f_scalars(triple: BasisTriple, config: FieldConfig, backend, form: str = "tensor") -> tuple:
    """``(f_xx, f_xe, f_ee)`` as backend fields, computed by the named route.

    ``"tensor"`` returns ``F_{mu nu} a^{mu nu}`` (twice the f-scalar) to
    match the literal tensor form of the equation; the other routes return
    the f-scalars themselves.
    """
    far = faraday_from_potential(config)
    if form == "spinor":
        xi, eta = triple_spinors(triple)
        return (f_sandwich(far, xi, xi, backend), f_sandwich(far, xi, eta, backend),
                f_sandwich(far, eta, eta, backend))
    if form == "tensor":
        return tuple(backend.scale(f_scalar(far, a, backend), 2) for a in (triple.u, triple.v, triple.w))
    if form == "vec3":
        return tuple(f_vec3(far, a.vec, triple.sign, backend) for a in (triple.u, triple.v, triple.w))
    raise ValueError(f"unknown form {form!r}; expected one of {FORMS}")


def _check_transversal(fxx, config: FieldConfig, backend):
    if backend.exact:
        if isinstance(fxx, Poly) and fxx.is_zero():
            raise NonTransversal("f_xx vanishes identically")
        return
    far = faraday_from_potential(config)
    eps = 1e-8 * max(1.0, _fnorm(far, backend))
    vals = np.abs(np.asarray(fxx))
    if not np.isfinite(vals).any() or np.nanmax(vals) <= eps:
        raise NonTransversal(f"max |f_xx| <= {eps:g}")


def _recip(backend, f):
    try:
        return backend.recip(f)
    except NonConstantInverse:
        raise
    except ZeroDivisionError as exc:
        raise NonTransversal("f_xx vanishes") from exc


# ---------------------------------------------------------------------------
# elimination and the fourth-order equation


def xi_component(psi: Sequence, xi, backend):
    """``xi-bar psi`` for a spinor field."""
    return row_apply(cl.adjoint(xi), psi, backend)


def eliminate(psi: Sequence, triple: BasisTriple, config: FieldConfig, backend,
              form: str = "spinor") -> ScalarComponentField:
    """``phi0 = xi-bar psi`` and ``phi1 = f_xx^{-1}(box' phi0 + f_xe phi0)``."""
    xi, eta = triple_spinors(triple)
    fxx, fxe, _ = f_scalars(triple, config, backend, form)
    _check_transversal(fxx, config, backend)
    phi0 = xi_component(psi, xi, backend)
    bp = box_prime(phi0, config, backend)
    if form == "tensor":  # F.a = 2 f_a
        phi1 = _recip(backend, fxx) * (backend.scale(bp, 2) + fxe * phi0)
    else:
        phi1 = _recip(backend, fxx) * (bp + fxe * phi0)
    return ScalarComponentField(phi0, phi1, xi_component(psi, eta, backend))


def eta_component_from_phi(phi0, triple: BasisTriple, config: FieldConfig, backend,
                           form: str = "spinor"):
    """``eta-bar psi`` from ``xi-bar psi`` alone."""
    fxx, fxe, _ = f_scalars(triple, config, backend, form)
    _check_transversal(fxx, config, backend)
    bp = box_prime(phi0, config, backend)
    if form == "tensor":
        return _recip(backend, fxx) * (backend.scale(bp, 2) + fxe * phi0)
    return _recip(backend, fxx) * (bp + fxe * phi0)


def fourth_order_residual(phi0, triple: BasisTriple, config: FieldConfig, backend,
                          form: str = "spinor"):
    """Residual of the one-component equation in the chosen form.

    The tensor form ``(2box' - F.v)(F.u)^{-1}(2box' + F.v) + F.w`` is twice
    the other two; it is halved so that all forms return the same field.
    """
    fxx, fxe, fee = f_scalars(triple, config, backend, form)
    _check_transversal(fxx, config, backend)
    inv = _recip(backend, fxx)
    if form == "tensor":
        inner = inv * (backend.scale(box_prime(phi0, config, backend), 2) + fxe * phi0)
        outer = backend.scale(box_prime(inner, config, backend), 2) - fxe * inner
        return backend.scale(outer + fee * phi0, GaussQ(1, 0) / 2 if backend.exact else 0.5)
    inner = inv * (box_prime(phi0, config, backend) + fxe * phi0)
    return box_prime(inner, config, backend) - fxe * inner + fee * phi0


def elimination_identity_rhs(psi: Sequence, triple: BasisTriple, config: FieldConfig, backend):
    """``eta-bar d + (box' - f_xe)(f_xx^{-1} xi-bar d)`` with ``d = (box' + F) psi``.

    Equals ``fourth_order_residual(xi-bar psi)`` for every psi when the
    field strength is constant; vanishes when psi solves the Dirac equation.
    """
    xi, eta = triple_spinors(triple)
    fxx, fxe, _ = f_scalars(triple, config, backend, "spinor")
    _check_transversal(fxx, config, backend)
    d = second_order_lhs(psi, config, backend)
    g = _recip(backend, fxx) * xi_component(d, xi, backend)
    return xi_component(d, eta, backend) + box_prime(g, config, backend) - fxe * g


# ---------------------------------------------------------------------------
# spinor reconstruction


def minus_spinor(sc: ScalarComponentField, triple: BasisTriple, backend) -> list:
    """``(xi-bar psi) eta^c - (eta-bar psi) xi^c``: the chirality ``-sign`` part of psi."""
    xi, eta = triple_spinors(triple)
    xc, ec = cl.charge_conjugate(xi), cl.charge_conjugate(eta)
    if not backend.exact:
        xc, ec = to_complex(xc), to_complex(ec)
    out = []
    for a in range(4):
        acc = None
        for f, s in ((sc.phi0, ec[a]), (sc.phi1, -xc[a])):
            if s:
                term = backend.scale(f, s)
                acc = term if acc is None else acc + term
        out.append(backend.zero() if acc is None else acc)
    return out


def reconstruct_spinor(sc: ScalarComponentField, triple: BasisTriple, config: FieldConfig,
                       backend) -> list:
    """``psi = psi_mp + (i dslash - Aslash) psi_mp``."""
    if sc.phi1 is None:
        sc = ScalarComponentField(sc.phi0, eta_component_from_phi(sc.phi0, triple, config, backend))
    pm = minus_spinor(sc, triple, backend)
    pp = dirac_operator(pm, config, backend)
    return [pm[a] + pp[a] for a in range(4)]


# ---------------------------------------------------------------------------
# currents


def _bc(t: np.ndarray, tail: tuple) -> np.ndarray:
    return t.reshape(t.shape + (1,) * len(tail))


def _zeros(shape, exact: bool):
    if exact:
        out = np.empty(shape, dtype=object)
        out.fill(GaussQ(0))
        return out
    return np.zeros(shape, dtype=complex)


def current_direct(psi) -> CurrentField:
    """``j^mu = psi-bar gamma^mu psi`` for spinor values of shape ``(4, ...)``."""
    psi = np.asarray(psi)
    exact = is_exact(psi)
    if not exact:
        psi = psi.astype(complex)

    def cur(p):
        out = _zeros((4,) + p.shape[1:], exact)
        for mu in range(4):
            m = cl.gamma(0) @ cl.gamma(mu)
            if not exact:
                m = to_complex(m)
            acc = None
            for a in range(4):
                for b in range(4):
                    if m[a, b]:
                        term = np.conj(p[a]) * p[b] * m[a, b]
                        acc = term if acc is None else acc + term
            out[mu] = acc
        return out

    plus = cur(cl.chiral_project(psi, 1))
    minus = cur(cl.chiral_project(psi, -1))
    return CurrentField(plus + minus, plus, minus)


def current_product_tensor(T: np.ndarray) -> np.ndarray:
    """``j^mu j^nu = -1/2 g_{sl} T^{s mu} (T^{l nu})^*`` for a chiral-spinor tensor field."""
    exact = T.dtype == object
    half = GaussQ(-1, 0) / 2 if exact else -0.5
    out = _zeros(T.shape, exact)
    for mu in range(4):
        for nu in range(4):
            acc = None
            for s in range(4):
                term = T[s, mu] * np.conj(T[s, nu])
                term = term if _G[s] > 0 else -term
                acc = term if acc is None else acc + term
            out[mu, nu] = acc * half
    return out


def current_from_product(jj: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """``j^mu = (j^mu j^0) / sqrt((j^0)^2)`` with the non-negative root (float)."""
    jjf = to_complex(jj) if jj.dtype == object else jj
    d = jjf[0, 0].real
    scale = np.max(np.abs(jjf), axis=(0, 1)) if jjf.ndim > 2 else np.max(np.abs(jjf))
    floor = tol * np.maximum(scale, 1e-300)
    if np.any(d < -floor):
        raise NonPositiveDensity("(j^0)^2 < 0 beyond tolerance")
    root = np.sqrt(np.maximum(d, 0.0))
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(root > np.sqrt(floor), jjf[:, 0].real / np.where(root > 0, root, 1.0), 0.0)
    return np.where(np.isnan(d), np.nan, out)  # keep invalid (NaN) points visible


def minus_tensor_from_scalars(phi, chi, triple: BasisTriple) -> np.ndarray:
    """``phi^2 w - 2 chi phi v + chi^2 u`` pointwise."""
    phi = np.asarray(phi)
    chi = np.asarray(chi)
    tail = phi.shape
    return (_bc(triple.w.t, tail) * (phi * phi) - _bc(triple.v.t, tail) * (chi * phi * 2)
            + _bc(triple.u.t, tail) * (chi * chi))


def _raise(vec, exact):
    return np.stack([vec[m] if _G[m] > 0 else -vec[m] for m in range(4)])


def plus_tensor_expansion(B, C, triple: BasisTriple) -> np.ndarray:
    """The chirality ``sign`` tensor from ``B_mu, C_mu`` via the four-gamma expansion.

    Implements, for nu != sigma,
    ``-2 B^nu (u B)^s + 2 B^s (u B)^nu - (B.B) u^{nu s} - 2i (B^nu C^s - B^s C^nu)
    - 2 B^nu (v C)^s + 2 B^s (v C)^nu - 2 (B.C) v^{nu s} + 2 B_m C^nu v^{m s}
    - 2 B_m C^s v^{m nu} + 2 sign B_m C_l eps^{m nu s l}
    - 2 C^nu (w C)^s + 2 C^s (w C)^nu - (C.C) w^{nu s}``
    where ``(a X)^s = a^{s l} X_l``.
    """
    B = np.asarray(B)
    C = np.asarray(C)
    exact = B.dtype == object
    tail = B.shape[1:]
    i = GaussQ(0, 1) if exact else 1j
    Bu, Cu = _raise(B, exact), _raise(C, exact)
    u, v, w = (_bc(a.t, tail) for a in (triple.u, triple.v, triple.w))

    def act(t, X):  # (t X)^s = t^{s l} X_l
        return np.stack([sum(t[s, l] * X[l] for l in range(4)) for s in range(4)])

    def left(X, t):  # X_m t^{m s}
        return np.stack([sum(X[m] * t[m, s] for m in range(4)) for s in range(4)])

    def dot(X, Y):
        return sum(X[m] * Y[m] * _G[m] for m in range(4))

    uB, vC, wC, Bv = act(u, B), act(v, C), act(w, C), left(B, v)
    BB, BC, CC = dot(B, B), dot(B, C), dot(C, C)
    eps = cl.levi_civita()
    out = _zeros((4, 4) + tail, exact)
    sgn = triple.sign
    for n in range(4):
        for s in range(4):
            if n == s:
                continue
            t = (-2 * (Bu[n] * uB[s]) + 2 * (Bu[s] * uB[n]) - BB * u[n, s]
                 - (Bu[n] * Cu[s] - Bu[s] * Cu[n]) * (2 * i)
                 - 2 * (Bu[n] * vC[s]) + 2 * (Bu[s] * vC[n]) - 2 * (BC * v[n, s])
                 + 2 * (Bv[s] * Cu[n]) - 2 * (Bv[n] * Cu[s])
                 - 2 * (Cu[n] * wC[s]) + 2 * (Cu[s] * wC[n]) - CC * w[n, s])
            for m in range(4):
                for l in range(4):
                    e = eps[m, n, s, l]
                    if e:
                        t = t + B[m] * C[l] * (2 * sgn * int(e))
            out[n, s] = t
    return out


def plus_spinor_from_BC(B, C, triple: BasisTriple) -> np.ndarray:
    """``gamma^mu (B_mu xi^c + C_mu eta^c)`` pointwise; shape ``(4, ...)``."""
    xi, eta = triple_spinors(triple)
    B = np.asarray(B)
    exact = B.dtype == object
    xc, ec = cl.charge_conjugate(xi), cl.charge_conjugate(eta)
    if not exact:
        xc, ec = to_complex(xc), to_complex(ec)
    tail = B.shape[1:]
    out = _zeros((4,) + tail, exact)
    for mu in range(4):
        g = cl.gamma(mu) if exact else to_complex(cl.gamma(mu))
        gx, ge = g @ xc, g @ ec
        for a in range(4):
            if gx[a]:
                out[a] = out[a] + B[mu] * gx[a]
            if ge[a]:
                out[a] = out[a] + C[mu] * ge[a]
    return out


def spinor_tensor_field(psi) -> np.ndarray:
    """``psi^T C sigma^{mu nu} psi`` pointwise for values of shape ``(4, ...)``."""
    psi = np.asarray(psi)
    exact = psi.dtype == object
    cmat = cl.charge_matrix() if exact else to_complex(cl.charge_matrix())
    out = _zeros((4, 4) + psi.shape[1:], exact)
    for m in range(4):
        for n in range(m + 1, 4):
            s = cl.sigma(m, n) if exact else to_complex(cl.sigma(m, n))
            k = cmat @ s
            acc = None
            for a in range(4):
                for b in range(4):
                    if k[a, b]:
                        term = psi[a] * psi[b] * k[a, b]
                        acc = term if acc is None else acc + term
            out[m, n] = acc
            out[n, m] = -acc
    return out


def plus_tensor_sandwich(B, C, triple: BasisTriple) -> np.ndarray:
    """Reference path: build the spinor and form its tensor directly."""
    return spinor_tensor_field(plus_spinor_from_BC(B, C, triple))


def _scalar_inputs(sc: ScalarComponentField, triple: BasisTriple, config: FieldConfig,
                   backend, points=None):
    phi = sc.phi0
    chi = sc.phi1 if sc.phi1 is not None else eta_component_from_phi(phi, triple, config, backend)
    Alow = _lifted_A(config, backend)
    B = [-covariant(chi, mu, config, backend, Alow) for mu in range(4)]
    C = [covariant(phi, mu, config, backend, Alow) for mu in range(4)]
    if backend.exact:
        if points is None:
            raise ValueError("polynomial backend needs sample points for pointwise current algebra")
        pts = [tuple(p) for p in points]

        def ev(f):
            out = np.empty(len(pts), dtype=object)
            for k, p in enumerate(pts):
                out[k] = f(p)
            return out

        return ev(phi), ev(chi), np.stack([ev(b) for b in B]), np.stack([ev(c) for c in C])
    return (np.asarray(phi), np.asarray(chi), np.stack([np.asarray(b) for b in B]),
            np.stack([np.asarray(c) for c in C]))


def current_from_scalar(sc: ScalarComponentField, triple: BasisTriple, config: FieldConfig,
                        backend, points=None, path: str = "expansion") -> CurrentField:
    """Dirac current from ``phi0`` (and its derivatives) only.

    ``path="expansion"`` uses the four-gamma expansion for the ``sign``
    chirality tensor, ``path="sandwich"`` the direct spinor route.  With the
    polynomial backend, ``points`` (rational 4-tuples) select where the
    pointwise algebra is evaluated.
    """
    if not backend.exact:
        triple = triple.to_float()
    phi, chi, B, C = _scalar_inputs(sc, triple, config, backend, points)
    t_minus = minus_tensor_from_scalars(phi, chi, triple)
    if path == "expansion":
        t_plus = plus_tensor_expansion(B, C, triple)
    elif path == "sandwich":
        t_plus = plus_tensor_sandwich(B, C, triple)
    else:
        raise ValueError(f"unknown path {path!r}")
    jj_m = current_product_tensor(t_minus)
    jj_p = current_product_tensor(t_plus)
    j_m = current_from_product(jj_m)
    j_p = current_from_product(jj_p)
    # t_minus belongs to chirality -sign, t_plus to chirality +sign
    if triple.sign == 1:
        jp, jm, jjp, jjm = j_p, j_m, jj_p, jj_m
    else:
        jp, jm, jjp, jjm = j_m, j_p, jj_m, jj_p
    return CurrentField(jp + jm, jp, jm, jjp, jjm)


# ---------------------------------------------------------------------------
# phi from the tensor


def phi_squared_from_tensor(T: np.ndarray, u: Bivector, route: str = "tensor"):
    """``-T^{mu nu} u_{mu nu} / 8`` (tensor route) or ``(T . u)/2`` (vec3 route)."""
    T = np.asarray(T)
    T.shape[2:]
    ut = u.t if T.dtype == object else to_complex(u.t)
    if route == "tensor":
        acc = None
        for m in range(4):
            for n in range(4):
                if m == n:
                    continue
                term = T[m, n] * ut[m, n] * (_G[m] * _G[n])
                acc = term if acc is None else acc + term
        return acc * (GaussQ(-1, 0) / 8 if T.dtype == object else -0.125)
    if route == "vec3":
        acc = sum(T[0, k] * ut[0, k] for k in (1, 2, 3))
        return acc * (GaussQ(1, 0) / 2 if T.dtype == object else 0.5)
    raise ValueError(f"unknown route {route!r}")


def phi_from_tensor(T: np.ndarray, u: Bivector, zero_tol: float = 1e-10, strict: bool = True,
                    periodic_axes: tuple = (1,)) -> ScalarComponentField:
    """``phi = sqrt(-T.u / 8)`` with the sign continued smoothly over a grid.

    The anchor is the point of largest ``|phi^2|`` (principal root there);
    the sign then spreads to neighbours in order of decreasing ``|phi^2|``,
    each time picking the root closer to the already-fixed neighbour.
    Points with ``|phi^2|`` below ``zero_tol * max`` are set but do not
    propagate.  With ``strict`` an ambiguous or unreachable region raises
    :class:`BranchDiscontinuity`; otherwise it is only recorded.
    """
    sq = phi_squared_from_tensor(T, u)
    if not isinstance(sq, np.ndarray) or sq.ndim == 0:
        if isinstance(sq, GaussQ):
            try:
                return ScalarComponentField(sq.sqrt(), branch=BranchRecord(anchor=()))
            except ValueError:
                sq = complex(sq)
        return ScalarComponentField(np.sqrt(complex(sq)), branch=BranchRecord(anchor=()))
    sqf = to_complex(sq) if sq.dtype == object else sq
    mag = np.abs(sqf)
    rec = BranchRecord()
    out = np.sqrt(sqf)  # principal
    top = float(np.nanmax(mag)) if mag.size else 0.0
    if top == 0.0:
        rec.zero_points = int(mag.size)
        return ScalarComponentField(np.zeros_like(sqf), branch=rec)
    small = mag <= zero_tol * top
    rec.zero_points = int(small.sum())
    anchor = np.unravel_index(int(np.nanargmax(mag)), mag.shape)
    rec.anchor = tuple(int(a) for a in anchor)
    done = np.zeros(mag.shape, dtype=bool)
    done[anchor] = True
    heap = [(-mag[anchor], anchor)]
    shape = mag.shape
    while heap:
        _, p = heapq.heappop(heap)
        for ax in range(len(shape)):
            for step in (-1, 1):
                q = list(p)
                q[ax] += step
                if ax in periodic_axes:
                    q[ax] %= shape[ax]
                elif not 0 <= q[ax] < shape[ax]:
                    continue
                q = tuple(q)
                if done[q]:
                    continue
                done[q] = True
                if small[q]:
                    continue
                r = out[q]
                ref = out[p]
                a, b = abs(r - ref), abs(-r - ref)
                if abs(a - b) <= 0.1 * abs(ref):
                    rec.ambiguous.append(q)
                if b < a:
                    out[q] = -r
                heapq.heappush(heap, (-mag[q], q))
    rec.unreached = int((~done).sum())
    if strict and not rec.clean:
        raise BranchDiscontinuity(
            f"{len(rec.ambiguous)} ambiguous, {rec.unreached} unreachable points", rec)
    return ScalarComponentField(out, branch=rec)


__all__ = [
    "FORMS", "NonTransversal", "NonPositiveDensity", "BranchDiscontinuity", "BranchRecord",
    "ScalarComponentField", "CurrentField", "triple_spinors", "f_scalars", "eliminate",
    "eta_component_from_phi", "fourth_order_residual", "elimination_identity_rhs",
    "minus_spinor", "reconstruct_spinor", "current_direct", "current_product_tensor",
    "current_from_product", "minus_tensor_from_scalars", "plus_tensor_expansion",
    "plus_spinor_from_BC", "spinor_tensor_field", "plus_tensor_sandwich",
    "current_from_scalar", "phi_squared_from_tensor", "phi_from_tensor", "xi_component",
    "PolyBackend", "GridBackend",
]
