"""Exact multivariate polynomials in the spacetime coordinates x^0..x^3.

Coefficients are :class:`~dirac_tensor.numbers.GaussQ`.  The coordinates are
real, so conjugation acts on coefficients only.  Used as the exact
derivative oracle: every identity involving derivatives is checked on
polynomial inputs with zero rounding.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import numpy as np

from .numbers import ZERO, GaussQ

Exps = tuple[int, int, int, int]
_ZERO_EXP: Exps = (0, 0, 0, 0)


class Poly:
    """Scalar polynomial field ``sum c_e x^e``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = GaussQ.coerce(c)
                if c:
                    clean[tuple(e)] = c
        self.terms: dict[Exps, GaussQ] = clean

    @classmethod
    def _raw(cls, terms):
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def coord(cls, mu: int, scale=1) -> "Poly":
        e = [0, 0, 0, 0]
        e[mu] = 1
        return cls({tuple(e): scale})

    # structure -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXP for e in self.terms)

    def constant_value(self) -> GaussQ:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(_ZERO_EXP, ZERO)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def depends_on(self, mu: int) -> bool:
        return any(e[mu] for e in self.terms)

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, np.ndarray):
                return NotImplemented
            other = Poly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = GaussQ.coerce(c)
        if not c:
            return Poly._raw({})
        return Poly._raw({e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            if len(self.terms) < len(other.terms):
                a, b = self.terms, other.terms
            else:
                a, b = other.terms, self.terms
            out: dict = {}
            for ea, ca in a.items():
                for eb, cb in b.items():
                    e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3])
                    c = ca * cb
                    if e in out:
                        out[e] = out[e] + c
                    else:
                        out[e] = c
            return Poly._raw({e: c for e, c in out.items() if c})
        if isinstance(other, np.ndarray):
            return NotImplemented
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, c) -> "Poly":
        return self.scale(GaussQ.coerce(c).inverse())

    def conjugate(self) -> "Poly":
        return Poly._raw({e: c.conjugate() for e, c in self.terms.items()})

    def diff(self, mu: int) -> "Poly":
        """Exact partial derivative ``d/dx^mu`` (lower-index derivative)."""
        out = {}
        for e, c in self.terms.items():
            k = e[mu]
            if k:
                ne = list(e)
                ne[mu] = k - 1
                out[tuple(ne)] = c * k
        return Poly._raw(out)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussQ)):
            return self == Poly.const(other)
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    # evaluation ------------------------------------------------------------
    def __call__(self, x) -> GaussQ:
        """Exact value at a point (4 rational coordinates)."""
        x = [GaussQ.coerce(v) for v in x]
        acc = ZERO
        for e, c in self.terms.items():
            term = c
            for mu in range(4):
                if e[mu]:
                    term = term * x[mu] ** e[mu]
            acc = acc + term
        return acc

    def evaluate_grid(self, coords: Iterable) -> np.ndarray:
        """Float evaluation on broadcastable coordinate arrays ``(x0, x1, x2, x3)``.

        Missing trailing coordinates are taken as 0.
        """
        coords = [np.asarray(c, dtype=float) for c in coords]
        while len(coords) < 4:
            coords.append(np.zeros(()))
        shape = np.broadcast_shapes(*(c.shape for c in coords))
        out = np.zeros(shape, dtype=complex)
        for e, c in self.terms.items():
            term = np.full(shape, complex(c))
            for mu in range(4):
                if e[mu]:
                    term = term * coords[mu] ** e[mu]
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"x{mu}^{k}" if k > 1 else f"x{mu}" for mu, k in enumerate(e) if k)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # serialisation ----------------------------------------------------------
    def to_json(self) -> dict:
        return {",".join(map(str, e)): c.to_pair() for e, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data: dict) -> "Poly":
        terms = {}
        for key, pair in data.items():
            e = tuple(int(k) for k in key.split(","))
            if len(e) != 4:
                raise ValueError(f"monomial key {key!r} needs four exponents")
            terms[e] = GaussQ.parse(pair)
        return cls(terms)


def monomials(degree: int, nvars: int = 4) -> list[Exps]:
    """All exponent tuples of total degree <= ``degree`` in the first ``nvars`` variables."""
    out = []

    def rec(prefix, left, k):
        if k == nvars:
            out.append(tuple(prefix) + (0,) * (4 - nvars))
            return
        for p in range(left + 1):
            rec(prefix + [p], left - p, k + 1)

    rec([], degree, 0)
    return out


def random_gaussq(rng: np.random.Generator, num: int = 3, den: int = 3) -> GaussQ:
    """Small random Gaussian rational with numerators in [-num, num]."""
    a, b = rng.integers(-num, num + 1, size=2)
    c, d = rng.integers(1, den + 1, size=2)
    return GaussQ(Fraction(int(a), int(c)), Fraction(int(b), int(d)))


def random_poly(rng: np.random.Generator, degree: int, nvars: int = 4,
                density: float = 1.0, num: int = 3, den: int = 3) -> Poly:
    terms = {}
    for e in monomials(degree, nvars):
        if density >= 1.0 or rng.random() < density:
            terms[e] = random_gaussq(rng, num, den)
    return Poly(terms)


def random_spinor_poly(rng, degree: int, nvars: int = 4, **kw) -> list[Poly]:
    return [random_poly(rng, degree, nvars, **kw) for _ in range(4)]
