"""Verification suites and grid convergence studies.

Each suite runs a list of identity checks and returns a :class:`Report`.
Checks on exact data have tolerance 0; every check carries an ``anchor``
string naming the identity it exercises.  Runs are deterministic per seed.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import clifford as cl
from .basis import (builtin_triple, eta_from_uv, random_admissible_k, random_chiral_spinor,
                    random_triple, solve_w, spinor_from_u, validate_uv)
from .duality import (contract, detect_branch, dot3, hodge, spinor_pair_tensor,
                      spinor_tensor, tensor_from_vec3, tensor_rank)
from .equivalence import (FORMS, ScalarComponentField, current_direct, current_from_scalar,
                          current_product_tensor, eliminate, elimination_identity_rhs,
                          fourth_order_residual, phi_squared_from_tensor,
                          plus_tensor_expansion, plus_tensor_sandwich, reconstruct_spinor,
                          spinor_tensor_field, triple_spinors, xi_component)
from .fields import (STENCIL_ORDER, FieldConfig, PolyBackend, dirac_operator, dirac_residual,
                     f_sandwich, f_scalar, faraday_from_potential, second_order_lhs,
                     second_order_residual, weber_contraction, weber_rhs)
from .grid import GridSolution, GridSpec, integrate_dirac
from .lorentz import (metric_defect, random_sl2c, spinor_rep, transform_spinor,
                      transform_tensor, vector_rep)
from .numbers import GaussQ, exact_array, max_abs
from .poly import Poly, random_gaussq, random_poly, random_spinor_poly

SUITES = ("algebra", "duality", "basis", "lorentz", "oracle")
OBSERVABLES = ("dirac-residual", "fourth-order-residual", "reconstruction-error", "current-mismatch")


class NonMonotoneErrors(ValueError):
    pass


@dataclass
class Check:
    id: str
    paper_anchor: str
    status: str
    max_error: float
    tolerance: float
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def summary(self) -> dict:
        n_pass = sum(c.passed for c in self.checks)
        return {"total": len(self.checks), "passed": n_pass, "failed": len(self.checks) - n_pass,
                "status": "pass" if self.ok else "fail"}

    def sorted(self) -> "Report":
        return Report(self.suite, sorted(self.checks, key=lambda c: c.id))

    def to_json(self) -> dict:
        checks = []
        for c in self.checks:
            d = asdict(c)
            if not d["data"]:
                d.pop("data")
            checks.append(d)
        return {"suite": self.suite, "checks": checks, "summary": self.summary}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, default=_json_default)

    def lines(self) -> list[str]:
        out = [f"{'PASS' if c.passed else 'FAIL'}  {c.id:<44} err={c.max_error:.3g} "
               f"tol={c.tolerance:.3g}  [{c.paper_anchor}]" for c in self.checks]
        s = self.summary
        out.append(f"{self.suite}: {s['passed']}/{s['total']} passed")
        return out


def _json_default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    return str(o)


class _Collector:
    def __init__(self, suite: str):
        self.report = Report(suite)

    def exact(self, cid: str, anchor: str, deviations: Iterable):
        """Record a zero-tolerance check; ``deviations`` yields exact residuals."""
        worst = 0.0
        try:
            for d in deviations:
                worst = max(worst, _size(d))
            status = "pass" if worst == 0.0 else "fail"
        except Exception as exc:  # failures are data
            status, worst = "fail", float("inf")
            anchor = f"{anchor} (raised {type(exc).__name__}: {exc})"
        self.report.checks.append(Check(cid, anchor, status, worst, 0.0))

    def tolerant(self, cid: str, anchor: str, deviations: Iterable, tol: float):
        worst = 0.0
        try:
            for d in deviations:
                worst = max(worst, _size(d))
            status = "pass" if worst <= tol else "fail"
        except Exception as exc:
            status, worst = "fail", float("inf")
            anchor = f"{anchor} (raised {type(exc).__name__}: {exc})"
        self.report.checks.append(Check(cid, anchor, status, worst, tol))

    def flag(self, cid: str, anchor: str, ok_fn: Callable[[], bool]):
        try:
            ok = bool(ok_fn())
        except Exception as exc:
            ok, anchor = False, f"{anchor} (raised {type(exc).__name__}: {exc})"
        self.report.checks.append(Check(cid, anchor, "pass" if ok else "fail", 0.0 if ok else 1.0, 0.0))


def _size(d) -> float:
    if isinstance(d, Poly):
        return 0.0 if d.is_zero() else max(abs(complex(c)) for c in d.terms.values())
    if isinstance(d, (list, tuple)):
        return max((_size(x) for x in d), default=0.0)
    if isinstance(d, bool):
        return 0.0 if d else 1.0
    return max_abs(d)


def _rng(seed: int, suite: str) -> np.random.Generator:
    key = sum((i + 1) * ord(c) for i, c in enumerate(suite))
    return np.random.default_rng([seed, key])


# ---------------------------------------------------------------------------
# suites


def suite_algebra(seed: int = 0, n: int = 50) -> Report:
    col = _Collector("algebra")
    rng = _rng(seed, "algebra")
    g = [cl.gamma(m) for m in range(4)]
    g5 = cl.gamma5()
    C = cl.charge_matrix()
    Cinv = -C  # C^2 = -1
    one = cl.identity()
    col.exact("clifford.anticommutator", "gamma^mu gamma^nu + gamma^nu gamma^mu = 2 g^{mu nu}",
              (g[a] @ g[b] + g[b] @ g[a] - one * (2 * cl.metric(a, b))
               for a in range(4) for b in range(4)))
    col.exact("hermiticity.gamma", "gamma^mu dagger = gamma^0 gamma^mu gamma^0",
              (cl.dagger(g[m]) - g[0] @ g[m] @ g[0] for m in range(4)))
    col.exact("hermiticity.gamma5", "gamma^5 dagger = gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3",
              [cl.dagger(g5) - g5, g5 - (g[0] @ g[1] @ g[2] @ g[3]) * GaussQ(0, 1)])
    col.exact("charge.gamma", "C gamma^mu C^-1 = -gamma^mu T",
              (C @ g[m] @ Cinv + g[m].T for m in range(4)))
    col.exact("charge.gamma5", "C gamma^5 C^-1 = gamma^5 T", [C @ g5 @ Cinv - g5.T])
    col.exact("charge.sigma", "C sigma^{mu nu} C^-1 = -sigma^{mu nu} T",
              (C @ cl.sigma(a, b) @ Cinv + cl.sigma(a, b).T for a in range(4) for b in range(4)))
    col.exact("charge.matrix", "C^T = C dagger = -C, C^2 = -1",
              [C.T + C, cl.dagger(C) + C, C @ C + one])
    col.exact("four_gamma.expansion", "four-gamma product expansion (256 index tuples)",
              (cl.four_gamma_expand(a, b, c, d) - g[a] @ g[b] @ g[c] @ g[d]
               for a in range(4) for b in range(4) for c in range(4) for d in range(4)))
    col.exact("sigma.antisymmetry", "sigma^{mu nu} = -sigma^{nu mu}",
              (cl.sigma(a, b) + cl.sigma(b, a) for a in range(4) for b in range(4)))

    def spinors(k):
        return [exact_array([random_gaussq(rng) for _ in range(4)]) for _ in range(k)]

    rand = [spinors(2) for _ in range(n)]
    col.exact("charge.involution", "(psi^c)^c = psi",
              (cl.charge_conjugate(cl.charge_conjugate(a)) - a for a, _ in rand))
    col.exact("sandwich.sigma_transpose", "eta-bar sigma xi^c = xi-bar sigma eta^c",
              (cl.sandwich(b, cl.sigma(m, k), a) - cl.sandwich(a, cl.sigma(m, k), b)
               for a, b in rand[:10] for m in range(4) for k in range(4)))
    col.exact("sandwich.gsg_transpose",
              "eta-bar gamma^mu sigma^{nu s} gamma^l xi^c = xi-bar gamma^l sigma^{nu s} gamma^mu eta^c",
              (cl.sandwich(b, g[m] @ cl.sigma(p, q) @ g[l], a) - cl.sandwich(a, g[l] @ cl.sigma(p, q) @ g[m], b)
               for a, b in rand[:3] for m in range(4) for p in range(4) for q in range(4) for l in range(4)))
    col.exact("gamma_sigma_gamma.expansion", "gamma^mu sigma^{nu s} gamma^l expansion for nu != s",
              (cl.gamma_sigma_gamma(m, p, q, l) - g[m] @ cl.sigma(p, q) @ g[l]
               for m in range(4) for p in range(4) for q in range(4) for l in range(4) if p != q))
    xi, eta = exact_array([1, 0, 0, 0]), exact_array([0, 1, 0, 0])
    col.exact("sandwich.normalization", "xi-bar eta^c = 1, xi-bar xi^c = eta-bar eta^c = 0",
              [cl.sandwich(xi, one, eta) - 1, cl.sandwich(xi, one, xi), cl.sandwich(eta, one, eta)])
    col.exact("chiral.projection", "psi = psi_+ + psi_-, gamma^5 psi_pm = pm psi_pm",
              (d for a, _ in rand for d in (cl.chiral_project(a, 1) + cl.chiral_project(a, -1) - a,
                                            g5 @ cl.chiral_project(a, 1) - cl.chiral_project(a, 1),
                                            g5 @ cl.chiral_project(a, -1) + cl.chiral_project(a, -1))))
    return col.report.sorted()


def _random_vec3(rng, exact=True):
    if exact:
        return exact_array([random_gaussq(rng) for _ in range(3)])
    return rng.normal(size=3) + 1j * rng.normal(size=3)


def suite_duality(seed: int = 0, n: int = 50) -> Report:
    col = _Collector("duality")
    rng = _rng(seed, "duality")
    pairs = [(_random_vec3(rng), _random_vec3(rng), 1 if k % 2 else -1) for k in range(n)]

    def raw_antisym():
        m = exact_array([[random_gaussq(rng) for _ in range(4)] for _ in range(4)])
        return m - m.T

    col.exact("hodge.involution", "star star T = -T", (hodge(hodge(t)) + t for t in (raw_antisym() for _ in range(n))))
    col.exact("contract.vec3", "a^{mu nu} b_{mu nu} = -4 (a.b)",
              (contract(tensor_from_vec3(a, s), tensor_from_vec3(b, s)) + dot3(a, b) * 4 for a, b, s in pairs))
    col.exact("vec3.roundtrip", "tensor <-> 3-vector round trip",
              (tensor_from_vec3(a, s).vec - a for a, _, s in pairs))
    col.flag("branch.tags", "theta_pm on branch pm, psi_pm tensor on branch mp",
             lambda: all(
                 detect_branch(spinor_pair_tensor(random_chiral_spinor(rng, s), random_chiral_spinor(rng, s), s).t) == s
                 and detect_branch(spinor_tensor(random_chiral_spinor(rng, s), s).t) == -s
                 for s in (1, -1) for _ in range(10)))
    col.flag("branch.dimension", "tagged bivectors on one branch span 3 dimensions",
             lambda: all(tensor_rank([tensor_from_vec3(_random_vec3(rng), s) for _ in range(4)]) == 3
                         for s in (1, -1) for _ in range(10)))
    col.exact("spinor_tensor.null", "psi_pm^{mu nu} psi_pm_{mu nu} = 0",
              (contract(t, t) for t in (spinor_tensor(exact_array([random_gaussq(rng) for _ in range(4)]), s)
                                        for s in (1, -1) for _ in range(n // 2))))
    col.exact("spinor_pair_tensor.entry01", "theta_+^{01} = i(chi1* zeta1* - chi2* zeta2*)",
              (spinor_pair_tensor(c, z, 1).t[0, 1]
               - GaussQ(0, 1) * (c[0].conjugate() * z[0].conjugate() - c[1].conjugate() * z[1].conjugate())
               for c, z in ((random_chiral_spinor(rng, 1), random_chiral_spinor(rng, 1)) for _ in range(n))))
    return col.report.sorted()


def suite_basis(seed: int = 0, n: int = 100, n_w: int = 50, n_k: int = 50) -> Report:
    col = _Collector("basis")
    rng = _rng(seed, "basis")
    builtins = [builtin_triple(1), builtin_triple(-1)]
    col.exact("contractions.builtin", "u.u=0, u.v=0, v.v=4, u.w=-8, v.w=0, w.w=0 (both builtin triples)",
              (v for t in builtins for v in t.invariant_errors().values()))
    col.flag("validate.builtin", "builtin (u, v) satisfy the tensor axioms on their branch",
             lambda: all(validate_uv(t.u, t.v).ok and t.u.branch == t.sign for t in builtins))
    triples = [random_triple(rng, 1 if k % 2 else -1) for k in range(n)]
    col.exact("contractions.random", "contraction table for random spinor-generated triples",
              (v for t in triples for v in t.invariant_errors().values()))
    col.exact("solve_w.matches_spinors", "solve_w(u, v) = eta-bar sigma eta^c",
              (solve_w(t.u, t.v).t - t.w.t for t in triples[:n_w]))
    col.exact("solve_w.unique", "w independent of the admissible k",
              (solve_w(t.u, t.v, random_admissible_k(rng, t.u, t.v)).t - t.w.t
               for t in triples[:n_w] for _ in range(max(1, n_k // max(1, n_w)) if n_w else 0)))

    def recover(t):
        xi = spinor_from_u(t.u)
        sgn = 1 if all(a == b for a, b in zip(xi, t.xi)) else -1
        eta = eta_from_uv(t.u, t.v, xi)
        return [xi - t.xi * sgn, eta - t.eta * sgn, cl.sandwich(xi, cl.identity(), eta) - 1]

    col.exact("spinor_from_u.roundtrip", "xi recovered from u up to sign; eta from (u, v); xi-bar eta^c = 1",
              (d for t in triples for d in recover(t)))
    degenerate = []
    for k in range(10):
        s = 1 if k % 2 else -1
        xi = random_chiral_spinor(rng, s)
        a = 0 if s == 1 else 2
        xi[a] = GaussQ(0)  # xi_1^* = 0 forces -i u1 + u2 = 0
        if not any(xi):
            continue
        u = spinor_pair_tensor(xi, xi, s)
        rec = spinor_from_u(u)
        degenerate.append(spinor_pair_tensor(rec, rec, s).t - u.t)
    col.exact("spinor_from_u.degenerate_path", "recovery when -i u1 + u2 = 0", degenerate)
    return col.report.sorted()


def suite_lorentz(seed: int = 0, n_exact: int = 100, n_float: int = 200) -> Report:
    col = _Collector("lorentz")
    rng = _rng(seed, "lorentz")
    exact_maps = [random_sl2c(rng, exact=True) for _ in range(n_exact)]
    float_maps = [random_sl2c(rng, exact=False) for _ in range(n_float)]
    col.exact("metric.exact", "Lambda^T g Lambda = g (exact s)", (metric_defect(vector_rep(s)) for s in exact_maps))
    col.exact("lambda.real", "Lambda is real (exact s)",
              (np.array([z.im for z in vector_rep(s).ravel()], dtype=object) for s in exact_maps))
    col.tolerant("metric.float", "Lambda^T g Lambda = g (float s)",
                 (metric_defect(vector_rep(s)) for s in float_maps), 1e-12)

    def equiv(s, exact):
        out = []
        lam = vector_rep(s)
        for sg in (1, -1):
            chi = random_chiral_spinor(rng, sg, exact=exact)
            ze = random_chiral_spinor(rng, sg, exact=exact)
            th = spinor_pair_tensor(chi, ze, sg)
            moved = spinor_pair_tensor(transform_spinor(s, chi), transform_spinor(s, ze), sg)
            scale = 1 if exact else max(1.0, max_abs(moved.t))  # float: relative to tensor size
            out.append((moved.t - transform_tensor(lam, th).t) / scale)
            out.append((np.conj(moved.t) - transform_tensor(lam, th.conj_tensor()).t) / scale)
        return out

    col.exact("theta.equivariance.exact", "theta_pm and conjugates transform as tensors (exact s)",
              (d for s in exact_maps for d in equiv(s, True)))
    col.tolerant("theta.equivariance.float", "theta_pm and conjugates transform as tensors (float s, relative to tensor size)",
                 (d for s in float_maps for d in equiv(s, False)), 1e-12)
    col.flag("branch.invariant", "Lorentz maps keep the duality branch",
             lambda: all(detect_branch(transform_tensor(vector_rep(s), tensor_from_vec3(_random_vec3(rng), sg)).t) == sg
                         for s in exact_maps[:20] for sg in (1, -1)))
    col.exact("spinor_rep.composition", "rep(s1 s2) = rep(s1) rep(s2)",
              (spinor_rep(a @ b) - spinor_rep(a) @ spinor_rep(b) for a, b in zip(exact_maps[::2], exact_maps[1::2])))
    return col.report.sorted()


def random_constant_field(rng, gauge: str = "symmetric") -> FieldConfig:
    E = [random_gaussq(rng).re for _ in range(3)]
    H = [random_gaussq(rng).re for _ in range(3)]
    if not any(E):
        E[0] = Fraction(1)
    return FieldConfig.constant(E, H, gauge=gauge)


def random_poly_field(rng, degree: int = 2, density: float = 0.4) -> FieldConfig:
    return FieldConfig.from_potential([random_poly(rng, degree, density=density) for _ in range(4)])


def transversal_pair(rng, sign: int | None = None):
    """Random triple and constant field with ``f_xx != 0``."""
    while True:
        s = sign if sign is not None else (1 if rng.random() < 0.5 else -1)
        t = random_triple(rng, s)
        cfg = random_constant_field(rng)
        if f_scalar(faraday_from_potential(cfg), t.u):
            return t, cfg


def suite_oracle(seed: int = 0, n: int = 100, n_sim2: int | None = None, n_current: int = 20) -> Report:
    col = _Collector("oracle")
    rng = _rng(seed, "oracle")
    be = PolyBackend()
    n_sim2 = n if n_sim2 is None else n_sim2
    pairs = [(random_spinor_poly(rng, 2, density=0.5), random_poly_field(rng)) for _ in range(n)]
    col.exact("second_order.identity", "(i dslash - Aslash)^2 = 1 - box' - F on random polynomial (psi, A)",
              (second_order_residual(psi, cfg, be) for psi, cfg in pairs))

    def chain(psi, cfg):
        r = dirac_residual(psi, cfg, be)
        dr = dirac_operator(r, cfg, be)
        lhs = second_order_lhs(psi, cfg, be)
        return [lhs[a] + dr[a] + r[a] for a in range(4)]

    col.exact("second_order.chain", "(box' + F) psi = -(D r + r), r = Dirac residual",
              (chain(psi, cfg) for psi, cfg in pairs[: max(1, n // 4)]))

    sim2 = []
    for _ in range(n_sim2):
        t, cfg = transversal_pair(rng)
        sim2.append((random_spinor_poly(rng, 2, density=0.5), t, cfg))

    def elim(psi, t, cfg):
        xi, _ = triple_spinors(t)
        phi = xi_component(psi, xi, be)
        res = [fourth_order_residual(phi, t, cfg, be, f) for f in FORMS]
        rhs = elimination_identity_rhs(psi, t, cfg, be)
        return [res[0] - rhs, res[1] - res[0], res[2] - res[0]]

    col.exact("sim2.elimination", "fourth-order residual of xi-bar psi = eta-bar d + (box' - f_xe) f_xx^-1 xi-bar d",
              (d for psi, t, cfg in sim2 for d in elim(psi, t, cfg)))

    def phi1_identity(psi, t, cfg):
        xi, eta = triple_spinors(t)
        sc = eliminate(psi, t, cfg, be)
        d = second_order_lhs(psi, cfg, be)
        inv = f_scalar(faraday_from_potential(cfg), t.u).inverse()
        return sc.phi1 - sc.phi1_direct - xi_component(d, xi, be).scale(inv)

    col.exact("elimination.phi1", "derived eta-bar psi - eta-bar psi = f_xx^-1 xi-bar d",
              (phi1_identity(psi, t, cfg) for psi, t, cfg in sim2[:20]))

    def routes(t, cfg):
        far = faraday_from_potential(cfg)
        xi, eta = triple_spinors(t)
        E, H = far.constant_EH()
        out = []
        for a, (al, be_) in zip((t.u, t.v, t.w), ((xi, xi), (xi, eta), (eta, eta))):
            out.append(f_sandwich(far, al, be_) - f_scalar(far, a))
            out.append(weber_contraction(E, H, a) - weber_rhs(E, H, a))
        out.append(f_sandwich(far, xi, eta) - f_sandwich(far, eta, xi))
        return out

    col.exact("f_scalar.routes", "alpha-bar F beta^c = F_{mu nu} a^{mu nu}/2; F.a = 2 a.(E -+ iH); f_xe = f_ex",
              (d for _, t, cfg in sim2[:30] for d in routes(t, cfg)))

    def completeness(t):
        xi, eta = triple_spinors(t)
        psi = exact_array([random_gaussq(rng) for _ in range(4)])
        sc = ScalarComponentField(cl.adjoint(xi) @ psi, cl.adjoint(eta) @ psi)
        rebuilt = cl.charge_conjugate(eta) * sc.phi0 - cl.charge_conjugate(xi) * sc.phi1
        return rebuilt - cl.chiral_project(psi, -t.sign)

    col.exact("reconstruction.completeness", "psi_mp = (xi-bar psi) eta^c - (eta-bar psi) xi^c for any psi",
              (completeness(t) for _, t, _ in sim2))

    def expansion(t):
        B = exact_array([random_gaussq(rng) for _ in range(4)]).reshape(4, 1)
        C = exact_array([random_gaussq(rng) for _ in range(4)]).reshape(4, 1)
        return plus_tensor_expansion(B, C, t) - plus_tensor_sandwich(B, C, t)

    col.exact("current.expansion", "four-gamma expansion of psi_pm^{nu s} = direct sandwich",
              (expansion(t) for _, t, _ in sim2))

    def factorization(s):
        p = random_chiral_spinor(rng, s).reshape(4, 1)
        jj = current_product_tensor(spinor_tensor_field(p))
        j = current_direct(p).j
        return jj - np.einsum("i...,j...->ij...", j, j)

    col.exact("current.factorization", "g_{sl} psi^{s mu} (psi^{l nu})^* = -2 j^mu j^nu",
              (factorization(1 if k % 2 else -1) for k in range(n)))
    col.exact("phi.square", "psi_mp^{mu nu} u_{mu nu} = -8 (xi-bar psi)^2",
              (_phi_square(rng, t) for _, t, _ in sim2))

    def current_consistency(psi, t, cfg):
        sc = eliminate(psi, t, cfg, be)
        pts = [tuple(random_gaussq(rng).re for _ in range(4)) for _ in range(2)]
        cur = current_from_scalar(sc, t, cfg, be, pts)
        neg = current_from_scalar(sc.negated(), t, cfg, be, pts)
        rec = reconstruct_spinor(sc, t, cfg, be)
        vals = np.array([[f(p) for p in pts] for f in rec], dtype=object)
        d = current_direct(vals)
        outer = lambda j: np.einsum("i...,j...->ij...", j, j)  # noqa: E731
        return [cur.jj_plus - outer(d.j_plus), cur.jj_minus - outer(d.j_minus),
                cur.jj_plus - neg.jj_plus, cur.jj_minus - neg.jj_minus,
                np.asarray(cur.j != neg.j, dtype=float)]

    col.exact("current.from_scalar", "current from phi = current of reconstructed spinor; invariant under phi -> -phi",
              (d for psi, t, cfg in sim2[:n_current] for d in current_consistency(psi, t, cfg)))
    return col.report.sorted()


def _phi_square(rng, t):
    xi, _ = triple_spinors(t)
    psi = exact_array([random_gaussq(rng) for _ in range(4)])
    T = spinor_tensor(cl.chiral_project(psi, -t.sign), -t.sign)
    phi = cl.adjoint(xi) @ psi
    return [contract(T, t.u) + phi * phi * 8,
            phi_squared_from_tensor(T.t, t.u, "vec3") - phi_squared_from_tensor(T.t, t.u, "tensor")]


_SUITE_FNS = {"algebra": suite_algebra, "duality": suite_duality, "basis": suite_basis,
              "lorentz": suite_lorentz, "oracle": suite_oracle}


def run_verification(suite: str = "all", seed: int = 0) -> Report:
    if suite == "all":
        rep = Report("all")
        for name in SUITES:
            for c in _SUITE_FNS[name](seed).checks:
                rep.checks.append(Check(f"{name}.{c.id}", c.paper_anchor, c.status, c.max_error,
                                        c.tolerance, c.data))
        return rep.sorted()
    if suite not in _SUITE_FNS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES + ('all',)}")
    return _SUITE_FNS[suite](seed)


# ---------------------------------------------------------------------------
# grid observables and convergence


def _rms(a) -> float:
    a = np.asarray(a)
    a = a[np.isfinite(a)]
    return float(np.sqrt(np.mean(np.abs(a) ** 2))) if a.size else float("nan")


def _window_mask(t: np.ndarray, window) -> np.ndarray:
    lo, hi = window
    return (t >= lo - 1e-9) & (t <= hi + 1e-9)


def default_window(grid: GridSpec, rows: int = 5) -> tuple[float, float]:
    """Interior time window that excludes ``rows`` coarse steps at both ends."""
    lo = rows * grid.dt
    hi = grid.T - rows * grid.dt
    if hi <= lo:
        raise ValueError("time span too short for the derivative stencils")
    return lo, hi


def grid_observables(sol: GridSolution, triple=None, window=None, form: str = "spinor",
                     observables: Iterable[str] = OBSERVABLES) -> dict:
    """Norms of the chosen observables over the time window (RMS over finite entries)."""
    triple = triple or builtin_triple(1)
    be = sol.backend()
    psi = sol.fields()
    cfg = sol.config
    mask = _window_mask(sol.t, window or default_window(sol.grid))
    out = {}
    observables = tuple(observables)
    if "dirac-residual" in observables:
        r = dirac_residual(psi, cfg, be)
        out["dirac-residual"] = float(np.sqrt(sum(_rms(x[mask]) ** 2 for x in r)))
    sc = None
    if {"fourth-order-residual", "reconstruction-error", "current-mismatch"} & set(observables):
        sc = eliminate(psi, triple, cfg, be, form)
    if "fourth-order-residual" in observables:
        res = fourth_order_residual(sc.phi0, triple, cfg, be, form)
        out["fourth-order-residual"] = _rms(res[mask])
    if "reconstruction-error" in observables:
        rec = reconstruct_spinor(ScalarComponentField(sc.phi0), triple, cfg, be)
        num = np.sqrt(sum(_rms((rec[a] - psi[a])[mask]) ** 2 for a in range(4)))
        den = np.sqrt(sum(_rms(psi[a][mask]) ** 2 for a in range(4)))
        out["reconstruction-error"] = float(num / den)
    if "current-mismatch" in observables:
        cur = current_from_scalar(ScalarComponentField(sc.phi0), triple, cfg, be)
        direct = current_direct(np.stack(psi)).j.real
        out["current-mismatch"] = _rms((cur.j - direct)[:, mask])
    return out


def observed_orders(errors, factor: float = 2.0) -> list[float]:
    errors = [float(e) for e in errors]
    if len(errors) < 2:
        raise ValueError("need at least two errors")
    if any(not np.isfinite(e) for e in errors):
        raise NonMonotoneErrors("non-finite error")
    if any(b >= a for a, b in zip(errors, errors[1:])):
        raise NonMonotoneErrors(f"errors do not decrease: {errors}")
    return [float(np.log(a / b) / np.log(factor)) for a, b in zip(errors, errors[1:])]


def expected_order(stencil: str) -> int:
    return min(4, STENCIL_ORDER[stencil])


def convergence_study(config: FieldConfig, grids: list, observables: Iterable[str] = OBSERVABLES,
                      triple=None, init=None, seed: int = 0, window=None,
                      form: str = "spinor", margin: float = 0.3) -> Report:
    """Integrate on each grid and estimate the observed order of each observable.

    Grids must form a joint refinement family (each ``Nx`` twice the previous,
    same ``L`` and ``T``).  A check passes when every successive order is at
    least ``expected - margin``.
    """
    if len(grids) < 3:
        raise ValueError("a convergence study needs at least three grids")
    observables = tuple(observables)
    for o in observables:
        if o not in OBSERVABLES:
            raise ValueError(f"unknown observable {o!r}")
    window = window or default_window(grids[0])
    errors = {o: [] for o in observables}
    for g in grids:
        sol = integrate_dirac(config, g, init, seed)
        vals = grid_observables(sol, triple, window, form, observables)
        for o in observables:
            errors[o].append(vals[o])
    factors = [grids[k + 1].Nx / grids[k].Nx for k in range(len(grids) - 1)]
    factor = factors[0] if factors and all(abs(f - factors[0]) < 1e-12 for f in factors) else 2.0
    want = expected_order(grids[0].stencil)
    rep = Report("convergence")
    for o in observables:
        data = {"Nx": [g.Nx for g in grids], "errors": errors[o], "expected_order": want,
                "stencil": grids[0].stencil, "window": list(window)}
        try:
            orders = observed_orders(errors[o], factor)
            data["orders"] = orders
            ok = min(orders) >= want - margin
            status = "pass" if ok else "fail"
        except NonMonotoneErrors as exc:
            data["orders"] = None
            data["error"] = f"NonMonotoneErrors: {exc}"
            status = "fail"
        rep.checks.append(Check(o, "observed order under joint h, dt refinement", status,
                                float(errors[o][-1]), float(want - margin), data))
    return rep


__all__ = [
    "Check", "Report", "SUITES", "OBSERVABLES", "NonMonotoneErrors", "run_verification",
    "suite_algebra", "suite_duality", "suite_basis", "suite_lorentz", "suite_oracle",
    "grid_observables", "observed_orders", "expected_order", "convergence_study",
    "default_window", "random_constant_field", "random_poly_field", "transversal_pair",
]
