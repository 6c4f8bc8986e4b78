"""Constant basis tensors u, v, w and the spinors xi, eta behind them.

``u = xi-bar sigma xi^c``, ``v = xi-bar sigma eta^c``, ``w = eta-bar sigma eta^c``
for chiral spinors of common chirality ``s`` normalised by ``xi-bar eta^c = 1``.
All three live on duality branch ``s``.  The functions here go both ways:
spinors to tensors, and tensors (u, v) back to spinors and to the unique w.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import clifford as cl
from .duality import (Bivector, contract, cross3, spinor_pair_tensor,
                      tensor_from_vec3)
from .numbers import ZERO, GaussQ, exact_array, is_exact, isclose, max_abs, to_complex

_G = cl.METRIC
I = GaussQ(0, 1)


class BasisError(ValueError):
    pass


class NotChiral(BasisError):
    pass


class NotNormalized(BasisError):
    pass


class DegenerateU(BasisError):
    pass


class PreconditionViolated(BasisError):
    pass


class BranchUnknown(BasisError):
    pass


def _near(val, want, scale: float = 1.0) -> bool:
    """Equality with an absolute floor proportional to the magnitude of the operands."""
    return isclose(val, want, atol=1e-13 * max(1.0, scale))


def _zero_test(z, ref: float) -> bool:
    if isinstance(z, GaussQ):
        return not z
    return abs(z) <= 1e-12 * max(ref, 1e-300)


@dataclass(frozen=True, eq=False)
class BasisTriple:
    u: Bivector
    v: Bivector
    w: Bivector
    sign: int
    xi: np.ndarray | None = field(default=None)
    eta: np.ndarray | None = field(default=None)

    @property
    def exact(self) -> bool:
        return self.u.exact

    def contractions(self) -> dict:
        pairs = {"uu": (self.u, self.u), "uv": (self.u, self.v), "vv": (self.v, self.v),
                 "uw": (self.u, self.w), "vw": (self.v, self.w), "ww": (self.w, self.w)}
        return {k: contract(a, b) for k, (a, b) in pairs.items()}

    def invariant_errors(self) -> dict:
        """Deviation of each contraction from its required value (0, 0, 4, -8, 0, 0)."""
        want = {"uu": 0, "uv": 0, "vv": 4, "uw": -8, "vw": 0, "ww": 0}
        got = self.contractions()
        return {k: got[k] - want[k] for k in want}

    def satisfies_invariants(self) -> bool:
        if not (self.u.branch == self.v.branch == self.w.branch == self.sign):
            return False
        scale = max(max_abs(b.t) for b in (self.u, self.v, self.w)) ** 2
        return all(_near(e, 0, scale) for e in self.invariant_errors().values())

    def to_float(self) -> "BasisTriple":
        return BasisTriple(self.u.to_float(), self.v.to_float(), self.w.to_float(), self.sign,
                           None if self.xi is None else to_complex(self.xi),
                           None if self.eta is None else to_complex(self.eta))

    # json --------------------------------------------------------------
    def to_json(self) -> dict:
        def enc(z):
            return z.to_pair() if isinstance(z, GaussQ) else [complex(z).real, complex(z).imag]

        def mat(b: Bivector):
            return [[enc(b.t[m, n]) for n in range(4)] for m in range(4)]

        out = {"sign": self.sign, "u": mat(self.u), "v": mat(self.v), "w": mat(self.w)}
        if self.xi is not None:
            out["xi"] = [enc(z) for z in self.xi]
            out["eta"] = [enc(z) for z in self.eta]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "BasisTriple":
        sign = int(data["sign"])

        def dec(pair):
            if isinstance(pair[0], str) or isinstance(pair[1], str):
                return GaussQ.parse(pair)
            return complex(pair[0], pair[1])

        def arr(rows):
            a = np.array(rows, dtype=object)
            flat = [dec(p) for p in a.reshape(-1, 2)]
            exact = all(isinstance(z, GaussQ) for z in flat)
            out = np.array(flat, dtype=object if exact else complex)
            return out.reshape(a.shape[:-1])

        def biv(rows):
            a = arr(rows)
            if a.shape == (3,):
                return tensor_from_vec3(a, sign)
            return Bivector(a, sign)

        xi = arr(data["xi"]) if "xi" in data else None
        eta = arr(data["eta"]) if "eta" in data else None
        return cls(biv(data["u"]), biv(data["v"]), biv(data["w"]), sign, xi, eta)


# ---------------------------------------------------------------------------


def triple_from_spinors(xi, eta) -> BasisTriple:
    xi = np.asarray(xi)
    eta = np.asarray(eta)
    s_xi, s_eta = cl.chirality(xi), cl.chirality(eta)
    if s_xi is None or s_xi != s_eta:
        raise NotChiral("xi and eta must be gamma^5 eigenvectors with a common eigenvalue")
    norm = cl.sandwich(xi, cl.identity(), eta)
    if not isclose(norm, 1):
        raise NotNormalized(f"xi-bar eta^c = {norm}, expected 1")
    u = spinor_pair_tensor(xi, xi, s_xi)
    if max_abs(u.t) == 0:
        raise DegenerateU("u vanishes")
    v = spinor_pair_tensor(xi, eta, s_xi)
    w = spinor_pair_tensor(eta, eta, s_xi)
    return BasisTriple(u, v, w, s_xi, xi, eta)


def canonical_k(u: Bivector) -> Bivector:
    """Same-branch tensor built from the conjugate 3-vector; ``u.k = -4 |u|^2``."""
    return tensor_from_vec3(np.conj(u.vec), u.branch)


def admissible_k(u: Bivector, v: Bivector, t: Bivector) -> Bivector:
    """Null tensor ``alpha u + v + t`` for a same-branch ``t`` with ``u.t != 0``."""
    ut = contract(u, t)
    if not ut:
        raise PreconditionViolated("u.t vanishes; choose another t")
    alpha = -(contract(v, v) + contract(t, t) + contract(v, t) * 2) / (ut * 2)
    return u.scale(alpha) + v + t


def random_admissible_k(rng: np.random.Generator, u: Bivector, v: Bivector) -> Bivector:
    """Random null same-branch k with ``u.k != 0`` (exact when u, v are exact)."""
    from .poly import random_gaussq

    while True:
        if u.exact and v.exact:
            a = exact_array([random_gaussq(rng, 5, 4) for _ in range(3)])
        else:
            a = rng.normal(size=3) + 1j * rng.normal(size=3)
        t = tensor_from_vec3(a, u.branch)
        if contract(u, t) != 0:
            return admissible_k(u, v, t)


def solve_w(u: Bivector, v: Bivector, k: Bivector | None = None) -> Bivector:
    """The unique same-branch w with ``u.w = -8``, ``v.w = w.w = 0``.

    ``k`` may be any null same-branch tensor with ``u.k != 0``; the default
    is :func:`canonical_k`.
    """
    if u.branch is None or u.branch != v.branch:
        raise PreconditionViolated("u and v must carry the same duality branch")
    if max_abs(u.t) == 0:
        raise DegenerateU("u vanishes")
    scale = max(max_abs(u.t), max_abs(v.t)) ** 2
    for name, val, want in (("u.u", contract(u, u), 0), ("u.v", contract(u, v), 0),
                            ("v.v", contract(v, v), 4)):
        if not _near(val, want, scale):
            raise PreconditionViolated(f"{name} = {val}, expected {want}")
    if k is None:
        k = canonical_k(u)
    uk = contract(u, k)
    if uk == 0:
        raise DegenerateU("u.k vanishes")
    vk = contract(v, k)
    a1 = -(vk * vk) / (uk * uk)
    a2 = vk * 2 / uk
    a3 = GaussQ(-8) / uk
    return Bivector(u.t * a1 + v.t * a2 + k.t * a3, u.branch)


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(c[1] for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c[1]]


def mixed_product(u: Bivector, v: Bivector) -> np.ndarray:
    """``u^mu_sigma v^{sigma nu}``."""
    g = np.array(_G)
    if u.exact and v.exact:
        return (u.t * np.array([GaussQ(int(x)) for x in g], dtype=object)) @ v.t
    return (to_complex(u.t) * g) @ to_complex(v.t)


def validate_uv(u: Bivector, v: Bivector) -> ValidationReport:
    """Check the axioms for a (u, v) pair.  Never raises."""
    rep = ValidationReport()
    try:
        br = u.branch
        sc = max(max_abs(u.t), max_abs(v.t)) ** 2
        rep.add("u tagged", br is not None, f"branch {br}")
        rep.add("common branch", br is not None and v.branch == br, f"{u.branch} vs {v.branch}")
        rep.add("u nonzero", max_abs(u.t) != 0)
        rep.add("u.u = 0", _near(contract(u, u), 0, sc), str(contract(u, u)))
        rep.add("v.u = 0", _near(contract(v, u), 0, sc), str(contract(v, u)))
        mp = mixed_product(u, v)
        i = I if (u.exact and v.exact) else 1j
        rep.add("u^mu_s v^{s nu} = -i u", _near(mp, u.t * (-i) if u.exact else to_complex(u.t) * -1j, sc))
        uv, vv = u.vec, v.vec
        v3 = vv[0] * vv[0] + vv[1] * vv[1] + vv[2] * vv[2]
        rep.add("(v.v) = -1", _near(v3, -1, sc), str(v3))
        rep.add("v.v = 4", _near(contract(v, v), 4, sc), str(contract(v, v)))
        if br is not None:
            rep.add("u = -s u x v", _near(uv, cross3(uv, vv) * (-br), sc))
            if uv[0]:
                lhs = uv[2] * vv[1] - uv[1] * vv[2]
                rep.add("u3 v2 - u2 v3 = s u1", _near(lhs, uv[0] * br, sc), str(lhs))
    except Exception as exc:  # the report is the error channel
        rep.add("evaluation", False, repr(exc))
    return rep


# ---------------------------------------------------------------------------
# spinor recovery


def _pair_indices(branch: int) -> tuple[int, int]:
    return (0, 1) if branch == 1 else (2, 3)


def spinor_from_u(u: Bivector) -> np.ndarray:
    """A chiral xi with ``xi-bar sigma xi^c = u``; the only other answer is ``-xi``."""
    if u.branch is None:
        raise BranchUnknown("u carries no duality branch")
    if max_abs(u.t) == 0:
        raise DegenerateU("u vanishes")
    if not _near(contract(u, u), 0, max_abs(u.t) ** 2):
        raise PreconditionViolated("u is not null")
    exact = u.exact
    i = I if exact else 1j
    u1, u2, u3 = u.vec
    minus = -i * u1 + u2   # 2 (xi_1^*)^2
    plus = i * u1 + u2     # 2 (xi_2^*)^2
    half = GaussQ(1, 0) / 2 if exact else 0.5
    if _abs2(minus) >= _abs2(plus):
        c1 = _sqrt(minus * half)
        c2 = u3 / (-2 * i * c1)
    else:
        c2 = _sqrt(plus * half)
        c1 = u3 / (-2 * i * c2)
    out = _spinor(exact)
    a, b = _pair_indices(u.branch)
    out[a] = np.conj(c1)
    out[b] = np.conj(c2)
    return out


def eta_from_uv(u: Bivector, v: Bivector, xi) -> np.ndarray:
    """The chiral eta with ``xi-bar sigma eta^c = v`` (then ``xi-bar eta^c = 1``)."""
    rep = validate_uv(u, v)
    if not rep.ok:
        raise PreconditionViolated("; ".join(n for n, _, _ in rep.failures))
    xi = np.asarray(xi)
    exact = u.exact and v.exact and is_exact(xi)
    if not exact:
        xi = to_complex(xi)
    i = I if exact else 1j
    a, b = _pair_indices(u.branch)
    if cl.chirality(xi) != u.branch:
        raise PreconditionViolated("xi is not chiral on the branch of u")
    x1, x2 = np.conj(xi[a]), np.conj(xi[b])
    v1, v2, v3 = v.vec if exact else to_complex(v.vec)
    ref = float(np.sqrt(abs(complex(x1)) ** 2 + abs(complex(x2)) ** 2))
    z1, z2 = _zero_test(x1, ref), _zero_test(x2, ref)
    if z1 and z2:
        raise PreconditionViolated("xi vanishes")
    if z1:
        e1 = v3 / (-i * x2)
        e2 = v1 / (-i * x2)
    elif z2:
        e1 = v1 / (i * x1)
        e2 = v3 / (-i * x1)
    else:
        e1 = (-i * v1 + v2) / (x1 * 2)
        e2 = (i * v1 + v2) / (x2 * 2)
    out = _spinor(exact)
    out[a] = np.conj(e1)
    out[b] = np.conj(e2)
    return out


def _abs2(z):
    return z.abs2() if isinstance(z, GaussQ) else abs(z) ** 2


def _sqrt(z):
    return z.sqrt() if isinstance(z, GaussQ) else np.sqrt(complex(z))


def _spinor(exact: bool) -> np.ndarray:
    return exact_array([0, 0, 0, 0]) if exact else np.zeros(4, dtype=complex)


# ---------------------------------------------------------------------------
# built-in triples

_BUILTIN_SPINORS = {
    1: ([1, 0, 0, 0], [0, 1, 0, 0]),
    -1: ([0, 0, 1, 0], [0, 0, 0, -1]),
}
BUILTIN_VECTORS = {
    1: ((I, 1, 0), (0, 0, -I), (-I, 1, 0)),
    -1: ((I, 1, 0), (0, 0, I), (-I, 1, 0)),
}


def builtin_triple(sign: int) -> BasisTriple:
    """The textbook triple ``u = (i, 1, 0)``, ``v = (0, 0, -+i)``, ``w = (-i, 1, 0)``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    vecs = [exact_array(list(vv)) for vv in BUILTIN_VECTORS[sign]]
    u, v, w = (tensor_from_vec3(a, sign) for a in vecs)
    xi, eta = (exact_array(s) for s in _BUILTIN_SPINORS[sign])
    return BasisTriple(u, v, w, sign, xi, eta)


def random_chiral_spinor(rng: np.random.Generator, sign: int, num: int = 4, den: int = 3,
                         exact: bool = True) -> np.ndarray:
    """Random nonzero chiral spinor (Gaussian-rational entries in exact mode)."""
    from .poly import random_gaussq

    a, b = _pair_indices(sign)
    while True:
        out = _spinor(exact)
        if exact:
            out[a], out[b] = random_gaussq(rng, num, den), random_gaussq(rng, num, den)
        else:
            z = rng.normal(size=4)
            out[a], out[b] = complex(z[0], z[1]), complex(z[2], z[3])
        if out[a] or out[b]:
            return out


def random_triple(rng: np.random.Generator, sign: int, exact: bool = True) -> BasisTriple:
    """Random valid triple: random chiral xi, eta rescaled so that xi-bar eta^c = 1."""
    while True:
        xi = random_chiral_spinor(rng, sign, exact=exact)
        eta = random_chiral_spinor(rng, sign, exact=exact)
        n = cl.sandwich(xi, cl.identity(), eta)
        if (n if exact else abs(n) > 1e-3):
            eta = eta * (n.conjugate().inverse() if exact else 1 / np.conj(n))  # eta^c is antilinear
            return triple_from_spinors(xi, eta)


__all__ = [
    "BasisTriple", "BasisError", "NotChiral", "NotNormalized", "DegenerateU",
    "PreconditionViolated", "BranchUnknown", "ValidationReport", "triple_from_spinors",
    "solve_w", "canonical_k", "admissible_k", "random_admissible_k", "validate_uv", "mixed_product",
    "spinor_from_u", "eta_from_uv", "builtin_triple", "random_chiral_spinor",
    "random_triple", "BUILTIN_VECTORS", "ZERO",
]
