"""Complex scalars in two arithmetic modes.

Exact mode uses :class:`GaussQ`, a Gaussian rational ``re + i*im`` with
arbitrary-precision rational parts.  Float mode uses plain Python/numpy
``complex``.  Code that has to work in both modes goes through
:func:`is_exact`, :func:`to_complex` and :func:`isclose`.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import numpy as np

try:  # gmpy2 is an order of magnitude faster than Fraction for this workload
    from gmpy2 import mpq as Q
    from gmpy2 import isqrt as _isqrt
    from gmpy2 import is_square as _is_square
except ImportError:  # pragma: no cover
    from math import isqrt as _isqrt

    Q = Fraction

    def _is_square(n):
        return n >= 0 and _isqrt(n) ** 2 == n


RTOL = 1e-10
ATOL = 1e-13

_Q_TYPES = (int, Rational, type(Q(0)))


def _q(x):
    if isinstance(x, float):
        return Q(Fraction(x))
    return Q(x)


class GaussQ:
    """Gaussian rational number.  Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _q(re))
        object.__setattr__(self, "im", _q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussQ is immutable")

    @classmethod
    def _raw(cls, re, im):
        z = object.__new__(cls)
        object.__setattr__(z, "re", re)
        object.__setattr__(z, "im", im)
        return z

    @classmethod
    def coerce(cls, x) -> "GaussQ":
        if isinstance(x, GaussQ):
            return x
        if isinstance(x, _Q_TYPES):
            return cls._raw(Q(x), Q(0))
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, (float, np.floating)):
            return cls(Fraction(float(x)))
        if isinstance(x, np.integer):
            return cls(int(x))
        raise TypeError(f"cannot convert {type(x).__name__} to GaussQ")

    @classmethod
    def parse(cls, pair) -> "GaussQ":
        """Build from ``[re, im]`` where each part is a ``"p/q"`` string or number."""
        re, im = pair
        return cls(Fraction(str(re)), Fraction(str(im)))

    def to_pair(self) -> list[str]:
        return [_qstr(self.re), _qstr(self.im)]

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, GaussQ):
            return GaussQ._raw(self.re + other.re, self.im + other.im)
        if isinstance(other, _Q_TYPES):
            return GaussQ._raw(self.re + other, self.im)
        if isinstance(other, (complex, float)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussQ._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, GaussQ):
            return GaussQ._raw(self.re - other.re, self.im - other.im)
        if isinstance(other, _Q_TYPES):
            return GaussQ._raw(self.re - other, self.im)
        if isinstance(other, (complex, float)):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _Q_TYPES):
            return GaussQ._raw(other - self.re, -self.im)
        if isinstance(other, (complex, float)):
            return other - complex(self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussQ):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussQ._raw(a * c - b * d, a * d + b * c)
        if isinstance(other, _Q_TYPES):
            return GaussQ._raw(self.re * other, self.im * other)
        if isinstance(other, (complex, float)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussQ":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("GaussQ division by zero")
        return GaussQ._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussQ):
            return self * other.inverse()
        if isinstance(other, _Q_TYPES):
            if other == 0:
                raise ZeroDivisionError("GaussQ division by zero")
            return GaussQ._raw(self.re / other, self.im / other)
        if isinstance(other, (complex, float)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _Q_TYPES):
            return GaussQ.coerce(other) * self.inverse()
        if isinstance(other, (complex, float)):
            return other / complex(self)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussQ":
        return GaussQ._raw(self.re, -self.im)

    def abs2(self):
        """``|z|**2`` as an exact rational."""
        return self.re * self.re + self.im * self.im

    def __abs__(self):
        return abs(complex(self))

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def sqrt(self) -> "GaussQ":
        """Exact principal square root; ``ValueError`` if it is not a Gaussian rational.

        Principal means non-negative real part, and non-negative imaginary
        part when the real part vanishes.
        """
        a, b = self.re, self.im
        if b == 0:
            if a >= 0:
                return GaussQ._raw(_qsqrt(a), Q(0))
            return GaussQ._raw(Q(0), _qsqrt(-a))
        m = _qsqrt(a * a + b * b)
        x = _qsqrt((m + a) / 2)
        y = b / (2 * x)
        return GaussQ._raw(x, y)

    # comparison / conversion ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _Q_TYPES):
            return self.im == 0 and self.re == other
        if isinstance(other, (complex, float)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GaussQ({_qstr(self.re)})"
        return f"GaussQ({_qstr(self.re)}, {_qstr(self.im)})"

    def __str__(self):
        if self.im == 0:
            return _qstr(self.re)
        if self.re == 0:
            return f"{_qstr(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{_qstr(self.re)}{sign}{_qstr(abs(self.im))}i"


def _qstr(x) -> str:
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _qsqrt(x):
    x = Q(x)
    if x < 0:
        raise ValueError("negative rational has no real square root")
    p, q = int(x.numerator), int(x.denominator)
    if not (_is_square(p) and _is_square(q)):
        raise ValueError(f"{_qstr(x)} is not a rational square")
    return Q(int(_isqrt(p)), int(_isqrt(q)))


ZERO = GaussQ(0)
ONE = GaussQ(1)
I = GaussQ(0, 1)


def is_exact(x) -> bool:
    """True if ``x`` (scalar or array) holds exact numbers."""
    if isinstance(x, np.ndarray):
        return x.dtype == object
    return isinstance(x, (GaussQ,) + _Q_TYPES)


def exact_array(values) -> np.ndarray:
    """Object array of :class:`GaussQ` from nested numbers."""
    arr = np.array(values, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = GaussQ.coerce(v)
    return out


def to_complex(x):
    """Float-mode view of a scalar or array (no-op for float inputs)."""
    if isinstance(x, np.ndarray):
        if x.dtype == object:
            return x.astype(complex)
        return x.astype(complex, copy=False)
    return complex(x)


def principal_sqrt(z):
    """Principal branch square root in either mode."""
    if isinstance(z, GaussQ):
        return z.sqrt()
    return np.sqrt(complex(z))


def isclose(a, b, rtol: float = RTOL, atol: float = ATOL) -> bool:
    """Mode-aware equality: exact comparison for exact inputs, tolerant otherwise."""
    if is_exact(a) and is_exact(b):
        if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
            return bool(np.all(np.asarray(a, dtype=object) == np.asarray(b, dtype=object)))
        return a == b
    a = np.asarray(to_complex(a) if is_exact(a) else a, dtype=complex)
    b = np.asarray(to_complex(b) if is_exact(b) else b, dtype=complex)
    return bool(np.allclose(a, b, rtol=rtol, atol=atol))


def max_abs(x) -> float:
    """``max |x|`` as a float, 0 for empty input.  Works for exact arrays."""
    arr = np.asarray(x)
    if arr.size == 0:
        return 0.0
    if arr.dtype == object:
        arr = arr.astype(complex)
    return float(np.max(np.abs(arr)))
