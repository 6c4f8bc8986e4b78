"""1+1D periodic Dirac integrator and the on-disk solution format.

Fields depend on ``(t, x^1)`` only while all four spinor components are
kept.  The equation is stepped in Hamiltonian form

    i d_0 psi = A_0 psi + gamma^0 psi - gamma^0 gamma^1 (i d_1 - A_1) psi
                + gamma^0 (gamma^2 A_2 + gamma^3 A_3) psi

with classical RK4 in time and a periodic stencil in space.  Every step is
stored so time derivatives can later be taken by finite differences.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__
from . import clifford as cl
from .fields import (STENCIL_ORDER, STENCIL_SPECTRAL_RADIUS, FieldConfig, GridBackend,
                     periodic_derivative)
from .numbers import to_complex

FORMAT_VERSION = 1
_RK4_LIMIT = 2.8  # just inside RK4's imaginary-axis stability bound 2*sqrt(2)


class UnstableStep(ValueError):
    pass


class NonPeriodicInit(ValueError):
    pass


class GridFormatError(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    Nx: int
    L: float
    dt: float
    T: float
    stencil: str = "central-4"

    def __post_init__(self):
        if self.Nx < 8:
            raise ValueError("Nx must be at least 8")
        if self.stencil not in STENCIL_ORDER:
            raise ValueError(f"unknown stencil {self.stencil!r}")
        if self.L <= 0 or self.dt <= 0 or self.T < 0:
            raise ValueError("L and dt must be positive, T non-negative")
        n = self.T / self.dt
        if abs(n - round(n)) > 1e-9 * max(1.0, n):
            raise ValueError("T must be an integer multiple of dt")

    @property
    def h(self) -> float:
        return self.L / self.Nx

    @property
    def steps(self) -> int:
        return int(round(self.T / self.dt))

    @property
    def x(self) -> np.ndarray:
        return np.arange(self.Nx) * self.h

    def refined(self, factor: int = 2) -> "GridSpec":
        """Joint refinement: ``h`` and ``dt`` both divided by ``factor``."""
        return GridSpec(self.Nx * factor, self.L, self.dt / factor, self.T, self.stencil)

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "GridSpec":
        known = {k: data[k] for k in ("Nx", "L", "dt", "T", "stencil") if k in data}
        return cls(int(known.pop("Nx")), float(known.pop("L")), float(known.pop("dt")),
                   float(known.pop("T")), **known)


@dataclass
class GridSolution:
    """``psi[t_index, x_index, component]`` with its provenance."""

    psi: np.ndarray
    config: FieldConfig
    grid: GridSpec
    t0: float = 0.0
    seed: int | None = None
    init: dict = field(default_factory=dict)
    code_version: str = __version__

    def __post_init__(self):
        self.psi = np.asarray(self.psi, dtype=complex)
        if self.psi.ndim != 3 or self.psi.shape[1:] != (self.grid.Nx, 4):
            raise GridFormatError(f"psi shape {self.psi.shape} does not match Nx={self.grid.Nx}")

    @property
    def t(self) -> np.ndarray:
        return self.t0 + np.arange(self.psi.shape[0]) * self.grid.dt

    @property
    def x(self) -> np.ndarray:
        return self.grid.x

    def backend(self, stencil: str | None = None) -> GridBackend:
        return GridBackend(self.t, self.x, self.grid.L, stencil or self.grid.stencil)

    def fields(self) -> list:
        """The four components as ``(Nt, Nx)`` arrays."""
        return [self.psi[:, :, a] for a in range(4)]

    def sidecar(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "shape": list(self.psi.shape),
            "dtype": "<c16",
            "layout": "[t][x][component], interleaved (re, im)",
            "t0": self.t0,
            "dt": self.grid.dt,
            "grid": self.grid.to_json(),
            "config": self.config.to_json(),
            "seed": self.seed,
            "init": self.init,
            "code_version": self.code_version,
        }

    def write(self, directory) -> Path:
        d = Path(directory)
        if not np.all(np.isfinite(self.psi)):
            raise GridFormatError("refusing to write NaN/Inf values")
        d.mkdir(parents=True, exist_ok=True)
        self.psi.astype("<c16").tofile(d / "psi.bin")
        (d / "psi.json").write_text(json.dumps(self.sidecar(), indent=2))
        return d

    @classmethod
    def read(cls, directory) -> "GridSolution":
        d = Path(directory)
        try:
            meta = json.loads((d / "psi.json").read_text())
        except FileNotFoundError as exc:
            raise GridFormatError(f"no psi.json in {d}") from exc
        if meta.get("format_version") != FORMAT_VERSION:
            raise GridFormatError(f"unsupported format version {meta.get('format_version')}")
        shape = tuple(meta["shape"])
        raw = np.fromfile(d / "psi.bin", dtype="<c16")
        if raw.size != int(np.prod(shape)):
            raise GridFormatError(f"psi.bin holds {raw.size} values, sidecar says {shape}")
        return cls(raw.reshape(shape).astype(complex), FieldConfig.from_json(meta["config"]),
                   GridSpec.from_json(meta["grid"]), t0=float(meta.get("t0", 0.0)),
                   seed=meta.get("seed"), init=meta.get("init", {}),
                   code_version=meta.get("code_version", "unknown"))


# ---------------------------------------------------------------------------
# initial data


def free_spinor(p1: float, energy_sign: int = 1) -> np.ndarray:
    """Unit spinor ``u`` with ``(pslash - 1) u = 0`` for ``p = (E, p1, 0, 0)``.

    ``exp(-i p.x) u`` then solves the free equation.
    """
    E = energy_sign * np.sqrt(1.0 + p1 * p1)
    g0, g1 = to_complex(cl.gamma(0)), to_complex(cl.gamma(1))
    m = E * g0 - p1 * g1 - np.eye(4)  # p_mu gamma^mu with p_1 = -p1
    _, _, vh = np.linalg.svd(m)
    u = np.conj(vh[-1])
    return u / np.linalg.norm(u)


def plane_wave(grid: GridSpec, mode: int = 1, t=0.0, energy_sign: int = 1) -> np.ndarray:
    """Free plane wave of wavenumber ``2 pi mode / L`` sampled at time(s) ``t``.

    Returns shape ``(Nx, 4)`` for scalar ``t`` and ``(len(t), Nx, 4)`` otherwise.
    """
    k = 2 * np.pi * mode / grid.L
    E = energy_sign * np.sqrt(1 + k * k)
    u = free_spinor(k, energy_sign)
    t = np.asarray(t, dtype=float)
    phase = np.exp(-1j * (E * t[..., None] - k * grid.x))
    return phase[..., None] * u


def packet(grid: GridSpec, seed: int = 0, modes: int = 3) -> np.ndarray:
    """Smooth periodic data: a few low Fourier modes with random spinor amplitudes."""
    rng = np.random.default_rng(seed)
    out = np.zeros((grid.Nx, 4), dtype=complex)
    for n in range(-modes, modes + 1):
        amp = (rng.normal(size=4) + 1j * rng.normal(size=4)) / (1 + abs(n))
        out += np.exp(2j * np.pi * n * grid.x / grid.L)[:, None] * amp
    return out / np.sqrt(np.mean(np.sum(np.abs(out) ** 2, axis=1)))


def initial_profile(grid: GridSpec, init: dict | Callable | np.ndarray | None, seed: int = 0):
    """Resolve an init description into ``(Nx, 4)`` values and a JSON-able record."""
    if init is None:
        init = {"kind": "packet"}
    if callable(init):
        a, b = np.asarray(init(np.array([0.0]))), np.asarray(init(np.array([grid.L])))
        if not np.allclose(a, b, atol=1e-8):
            raise NonPeriodicInit("init(0) != init(L)")
        return np.asarray(init(grid.x), dtype=complex).reshape(grid.Nx, 4), {"kind": "callable"}
    if isinstance(init, np.ndarray):
        if init.shape != (grid.Nx, 4):
            raise ValueError(f"init array must have shape ({grid.Nx}, 4)")
        return init.astype(complex), {"kind": "array"}
    kind = init.get("kind", "packet")
    if kind == "packet":
        s = int(init.get("seed", seed))
        m = int(init.get("modes", 3))
        return packet(grid, s, m), {"kind": "packet", "seed": s, "modes": m}
    if kind == "plane-wave":
        m = int(init.get("mode", 1))
        sgn = int(init.get("energy_sign", 1))
        return plane_wave(grid, m, 0.0, sgn), {"kind": "plane-wave", "mode": m, "energy_sign": sgn}
    if kind == "zero":
        return np.zeros((grid.Nx, 4), dtype=complex), {"kind": "zero"}
    raise ValueError(f"unknown init kind {kind!r}")


# ---------------------------------------------------------------------------
# integration


class _Rhs:
    def __init__(self, config: FieldConfig, grid: GridSpec):
        if not config.depends_only_on_t_x():
            raise ValueError("the grid solver needs A independent of x^2 and x^3")
        g = [to_complex(cl.gamma(mu)) for mu in range(4)]
        self.g0 = g[0]
        self.k1 = g[0] @ g[1]
        self.kk = [None, None, g[0] @ g[2], g[0] @ g[3]]
        self.Alow = [a if not a.is_zero() else None for a in config.lowered()]
        self.x = grid.x
        self.h = grid.h
        self.stencil = grid.stencil

    def potential(self, t: float, mu: int):
        a = self.Alow[mu]
        return None if a is None else a.evaluate_grid((np.full_like(self.x, t), self.x))

    def __call__(self, t: float, psi: np.ndarray) -> np.ndarray:
        dpsi = periodic_derivative(psi, self.h, self.stencil, 1, axis=0)
        pi1 = 1j * dpsi
        a1 = self.potential(t, 1)
        if a1 is not None:
            pi1 = pi1 - a1[:, None] * psi
        rhs = psi @ self.g0.T - pi1 @ self.k1.T
        a0 = self.potential(t, 0)
        if a0 is not None:
            rhs = rhs + a0[:, None] * psi
        for mu in (2, 3):
            a = self.potential(t, mu)
            if a is not None:
                rhs = rhs + a[:, None] * (psi @ self.kk[mu].T)
        return -1j * rhs


def max_potential(config: FieldConfig, grid: GridSpec, samples: int = 17) -> float:
    ts = np.linspace(0.0, grid.T, samples)
    T, X = np.meshgrid(ts, grid.x, indexing="ij")
    return max((float(np.max(np.abs(a.evaluate_grid((T, X))))) for a in config.A if not a.is_zero()),
               default=0.0)


def check_step(config: FieldConfig, grid: GridSpec) -> float:
    """Stability number ``dt (rho/h + 1 + max|A|)``; raises above the RK4 limit."""
    val = grid.dt * (STENCIL_SPECTRAL_RADIUS[grid.stencil] / grid.h + 1.0
                     + max_potential(config, grid))
    if val > _RK4_LIMIT:
        raise UnstableStep(f"dt * spectral radius = {val:.3f} exceeds {_RK4_LIMIT}")
    return val


def integrate_dirac(config: FieldConfig, grid: GridSpec, init=None, seed: int = 0) -> GridSolution:
    """Classical RK4 in time, storing every step."""
    check_step(config, grid)
    psi0, record = initial_profile(grid, init, seed)
    rhs = _Rhs(config, grid)
    n = grid.steps
    out = np.empty((n + 1, grid.Nx, 4), dtype=complex)
    out[0] = psi = psi0
    dt = grid.dt
    for k in range(n):
        t = k * dt
        k1 = rhs(t, psi)
        k2 = rhs(t + dt / 2, psi + dt / 2 * k1)
        k3 = rhs(t + dt / 2, psi + dt / 2 * k2)
        k4 = rhs(t + dt, psi + dt * k3)
        psi = psi + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        out[k + 1] = psi
    return GridSolution(out, config, grid, 0.0, seed, record)


# ---------------------------------------------------------------------------
# csv


def write_csv(path, t: np.ndarray, x: np.ndarray, values: np.ndarray) -> None:
    """Columns ``t, x, value_re, value_im``; NaN rows (invalid edges) are skipped."""
    T, X = np.meshgrid(t, x, indexing="ij")
    v = np.asarray(values, dtype=complex)
    keep = np.isfinite(v)
    data = np.column_stack([T[keep], X[keep], v[keep].real, v[keep].imag])
    np.savetxt(path, data, delimiter=",", header="t,x,value_re,value_im", comments="",
               fmt="%.17g")


__all__ = [
    "GridSpec", "GridSolution", "UnstableStep", "NonPeriodicInit", "GridFormatError",
    "integrate_dirac", "check_step", "plane_wave", "free_spinor", "packet",
    "initial_profile", "write_csv", "FORMAT_VERSION",
]
