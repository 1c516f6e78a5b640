"""Registry of operator identities, golden matrix fixtures and the report generator.

Every identity is a function that builds both sides from the library and
returns a residual: the operator norm (largest singular value) of the
difference, or for the ``#``-selfadjoint forms the distance ``||X - X#||``.

Identities over ``K_theta`` take a pair ``alpha | theta`` and usually a
symbol ``phi``; when no symbol is supplied one is drawn with independent
real and imaginary parts uniform on ``[-1, 1]`` on the band
``[-(deg theta - 1), deg theta - 1]``.  Randomness is seeded from
``RunConfig.seed`` and the identity id, so reports are reproducible.

Monomial pairs are evaluated exactly (index arithmetic) and compared with
``tolerance_monomial``.  Other Blaschke pairs are evaluated by quadrature;
the grid is doubled until two successive residuals agree within
``REFINE_TOL`` and the result is compared with ``tolerance_blaschke``.

Some reports record a mismatch that is *supposed* to be there (a symbol
outside the class for which an identity holds, or a naive symmetry that
fails); for those ``expect_equal`` is ``False`` and a large residual is the
desired outcome.
"""
from __future__ import annotations

import json
import math
import zlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from .antilinear import (
    AntilinearMap,
    LinearMap,
    adjoint,
    asymmetry,
    block_diag,
    boxplus,
    c_pair,
    check_antiselfadjoint,
    diamond,
    numerical_rank,
    sharp,
)
from .circle import CircleFunction, check_grid
from .errors import AliasingError, ConfigurationError, DomainError, UnknownIdentityError
from .model_space import (
    BlaschkeProduct,
    LaurentSymbol,
    blaschke_divide,
    kernels,
    model_project,
)
from .circle import riesz_project
from .operators import (
    SplitModelSpace,
    dichotomy_check,
    mz_conjugation_enumerate,
    orthogonal_splittings,
    split_space,
)

#: successive grid refinements must agree this closely
REFINE_TOL = 1e-10
#: a report for an identity expected to fail must exceed this residual
MISMATCH_FLOOR = 1e-3


@dataclass(frozen=True)
class RunConfig:
    grid_size: int = 1024
    tolerance_monomial: float = 1e-12
    tolerance_blaschke: float = 1e-8
    seed: int = 0
    trials: int = 5
    refine: bool = True
    max_grid: int = 16384

    def __post_init__(self):
        check_grid(self.grid_size)
        check_grid(self.max_grid)
        if not (self.tolerance_monomial > 0 and self.tolerance_blaschke > 0):
            raise ConfigurationError("tolerances must be positive")
        if int(self.trials) < 1:
            raise ConfigurationError("trials must be at least 1")


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    params: dict
    residual: float
    tolerance: float
    passed: bool
    expect_equal: bool = True
    extras: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Outcome matches expectation (equal within tolerance, or clearly not)."""
        if self.expect_equal:
            return self.passed
        return self.residual > max(self.tolerance, MISMATCH_FLOOR)

    def to_json(self) -> dict:
        return {
            "id": self.identity_id,
            "params": self.params,
            "residual": self.residual,
            "tol": self.tolerance,
            "pass": self.passed,
            "expected": self.expect_equal,
            "extras": self.extras,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# random data


def identity_rng(seed: int, identity_id: str) -> np.random.Generator:
    return np.random.default_rng([int(seed), zlib.crc32(identity_id.encode())])


def _uniform_complex(rng, size):
    return rng.uniform(-1, 1, size) + 1j * rng.uniform(-1, 1, size)


def random_symbol(rng, band: int) -> LaurentSymbol:
    """Laurent polynomial on ``[-band, band]`` with Re, Im uniform on ``[-1, 1]``."""
    return LaurentSymbol(-band, _uniform_complex(rng, 2 * band + 1))


def random_vector(rng, n: int) -> np.ndarray:
    return _uniform_complex(rng, n)


def random_unitary(rng, n: int) -> np.ndarray:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_conjugation(rng, n: int) -> AntilinearMap:
    """``U U^T`` for a random unitary ``U``: unitary and symmetric."""
    u = random_unitary(rng, n)
    return AntilinearMap(u @ u.T)


def random_antilinear(rng, rows: int, cols: int) -> AntilinearMap:
    return AntilinearMap(_uniform_complex(rng, (rows, cols)))


def random_linear(rng, rows: int, cols: int) -> LinearMap:
    return LinearMap(_uniform_complex(rng, (rows, cols)))


def random_disk_point(rng, radius: float = 0.8) -> complex:
    return complex(radius * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()))


def random_blaschke_pair(rng, max_degree: int = 6, radius: float = 0.8):
    """``(theta, alpha)`` with ``2 <= deg theta <= max_degree`` and ``alpha`` a proper divisor."""
    n = int(rng.integers(2, max_degree + 1))
    zeros = [random_disk_point(rng, radius) for _ in range(n)]
    k = int(rng.integers(1, n))
    pick = rng.choice(n, size=k, replace=False)
    theta = BlaschkeProduct(tuple(zeros), np.exp(2j * np.pi * rng.uniform()))
    alpha = BlaschkeProduct(tuple(zeros[i] for i in sorted(pick)), np.exp(2j * np.pi * rng.uniform()))
    return theta, alpha


def _inner_product(u, v) -> complex:
    return complex(np.vdot(v, u))


def sharp_by_pairing(x: AntilinearMap) -> AntilinearMap:
    """``X#`` computed from the defining pairing: ``(X# g)_k = <X e_k, g>``.

    Independent of the transpose rule; used as an oracle.
    """
    rows, cols = x.shape
    out = np.zeros((cols, rows), dtype=complex)
    eye_c, eye_r = np.eye(cols), np.eye(rows)
    for i in range(rows):
        g = eye_r[i]
        # X# g is antilinear in g; for a basis vector g the coefficient is read directly
        out[:, i] = [_inner_product(x(eye_c[k]), g) for k in range(cols)]
    return AntilinearMap(out)


# ---------------------------------------------------------------------------
# registry


@dataclass
class Context:
    space: SplitModelSpace
    phi: object
    config: RunConfig
    identity_id: str

    @cached_property
    def rng(self) -> np.random.Generator:
        return identity_rng(self.config.seed, self.identity_id)

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def d(self) -> int:
        return self.space.d


@dataclass(frozen=True)
class Identity:
    id: str
    statement: str
    compute: Callable
    symbol: str = "free"  # free | none | class1 | class2 | fixed
    grid_free: bool = False
    expect_equal: bool = True
    proper: bool = False
    defaults: tuple | None = None  # (theta, alpha, phi) used when none are given


REGISTRY: dict = {}


def register(id_, statement, **kw):
    def deco(fn):
        if id_ in REGISTRY:
            raise ValueError(f"duplicate identity {id_}")
        REGISTRY[id_] = Identity(id_, statement, fn, **kw)
        return fn

    return deco


def _d(a, b) -> float:
    return (a - b).norm()


def _max(*vals) -> float:
    return float(max(vals)) if vals else 0.0


# --- antilinear adjoint -----------------------------------------------------


def _dims(ctx):
    return ctx.n, max(ctx.d, 1)


@register("pairing", "<Xf, g> = conj(<f, X# g>) for antilinear X", symbol="none", grid_free=True)
def _pairing(ctx):
    n, m = _dims(ctx)
    worst = 0.0
    for _ in range(ctx.config.trials):
        x = random_antilinear(ctx.rng, m, n)
        f, g = random_vector(ctx.rng, n), random_vector(ctx.rng, m)
        lhs = _inner_product(x(f), g)
        rhs = np.conj(_inner_product(f, sharp(x)(g)))
        worst = max(worst, abs(lhs - rhs))
    return worst


@register("adj1", "(X#)# = X, and X# agrees with the pairing oracle", symbol="none", grid_free=True)
def _adj1(ctx):
    n, m = _dims(ctx)
    worst = 0.0
    for _ in range(ctx.config.trials):
        x = random_antilinear(ctx.rng, m, n)
        worst = _max(worst, _d(sharp(sharp(x)), x), _d(sharp(x), sharp_by_pairing(x)))
    return worst


@register("adj2", "(X2 X1)* = X1# X2# for antilinear X1, X2", symbol="none", grid_free=True)
def _adj2(ctx):
    n, m = _dims(ctx)
    worst = 0.0
    for _ in range(ctx.config.trials):
        x1 = random_antilinear(ctx.rng, m, n)
        x2 = random_antilinear(ctx.rng, n + 1, m)
        worst = _max(worst, _d(adjoint(x2 @ x1), sharp(x1) @ sharp(x2)))
    return worst


@register("adj3", "(X A)# = A* X# for linear A, antilinear X", symbol="none", grid_free=True)
def _adj3(ctx):
    n, m = _dims(ctx)
    worst = 0.0
    for _ in range(ctx.config.trials):
        a = random_linear(ctx.rng, n, m)
        x = random_antilinear(ctx.rng, m + 1, n)
        worst = _max(worst, _d(sharp(x @ a), a.adjoint() @ sharp(x)))
    return worst


@register("adj4", "(B X)# = X# B* for linear B, antilinear X", symbol="none", grid_free=True)
def _adj4(ctx):
    n, m = _dims(ctx)
    worst = 0.0
    for _ in range(ctx.config.trials):
        x = random_antilinear(ctx.rng, m, n)
        b = random_linear(ctx.rng, n + 1, m)
        worst = _max(worst, _d(sharp(b @ x), sharp(x) @ b.adjoint()))
    return worst


@register("dia-sharp", "(X1 <> X2)# = X1# [+] X2#", symbol="none", grid_free=True)
def _dia_sharp(ctx):
    n, m = _dims(ctx)
    worst = 0.0
    for _ in range(ctx.config.trials):
        x1, x2 = random_antilinear(ctx.rng, m, n), random_antilinear(ctx.rng, n, n)
        worst = _max(worst, _d(sharp(diamond(x1, x2)), boxplus(sharp(x1), sharp(x2))))
    return worst


@register("box-sharp", "(Y1 [+] Y2)# = Y1# <> Y2#", symbol="none", grid_free=True)
def _box_sharp(ctx):
    n, m = _dims(ctx)
    worst = 0.0
    for _ in range(ctx.config.trials):
        y1, y2 = random_antilinear(ctx.rng, n, m), random_antilinear(ctx.rng, n, n)
        worst = _max(worst, _d(sharp(boxplus(y1, y2)), diamond(sharp(y1), sharp(y2))))
    return worst


@register("dia-sharp-comp", "(A (X1 <> X2))# = (X1# [+] X2#) A* for linear A", symbol="none", grid_free=True)
def _dia_sharp_comp(ctx):
    n, m = _dims(ctx)
    worst = 0.0
    for _ in range(ctx.config.trials):
        x1, x2 = random_antilinear(ctx.rng, m, n), random_antilinear(ctx.rng, n, n)
        a = random_linear(ctx.rng, m + 1, m + n)
        worst = _max(worst, _d(sharp(a @ diamond(x1, x2)), boxplus(sharp(x1), sharp(x2)) @ a.adjoint()))
    return worst


@register("box-sharp-comp", "((Y1 [+] Y2) B)# = B* (Y1# <> Y2#) for linear B", symbol="none", grid_free=True)
def _box_sharp_comp(ctx):
    n, m = _dims(ctx)
    worst = 0.0
    for _ in range(ctx.config.trials):
        y1, y2 = random_antilinear(ctx.rng, n, m), random_antilinear(ctx.rng, n, n)
        b = random_linear(ctx.rng, m + n, m + 1)
        worst = _max(worst, _d(sharp(boxplus(y1, y2) @ b), b.adjoint() @ diamond(sharp(y1), sharp(y2))))
    return worst


# --- conjugation pairs -------------------------------------------------------


def _pairs(ctx):
    """The model pair (C_{alpha,theta/alpha}, C_theta) followed by random pairs."""
    s = ctx.space
    yield s.c_split, s.c_theta
    for _ in range(ctx.config.trials):
        yield random_conjugation(ctx.rng, ctx.n), random_conjugation(ctx.rng, ctx.n)


def _pair_product(c1, c2) -> np.ndarray:
    return (c1 @ c2).matrix


@register("q-proj", "Q = C_dia C_box is the orthogonal projection (f+C1C2g)/2 (+) (g+C2C1f)/2 of rank N",
          symbol="none", grid_free=True)
def _q_proj(ctx):
    worst = 0.0
    for c1, c2 in _pairs(ctx):
        n = c1.rows
        c_dia, c_box, q = c_pair(c1, c2)
        half = 0.5 * np.block([[np.eye(n), _pair_product(c1, c2)], [_pair_product(c2, c1), np.eye(n)]])
        worst = _max(
            worst,
            _d(c_box @ c_dia, LinearMap.identity(n)),
            _d(q @ q, q),
            _d(q, q.adjoint()),
            float(np.linalg.norm(q.matrix - half, 2)),
            abs(numerical_rank(q) - n),
            0.0 if isinstance(q, LinearMap) and isinstance(c_box @ c_dia, LinearMap) else math.inf,
        )
    return worst


@register("c-pair-inv", "C_box C_dia = I", symbol="none", grid_free=True)
def _c_pair_inv(ctx):
    worst = 0.0
    for c1, c2 in _pairs(ctx):
        c_dia, c_box, _ = c_pair(c1, c2)
        worst = _max(worst, _d(c_box @ c_dia, LinearMap.identity(c1.rows)))
    return worst


@register("c-pair-sharp", "C_box# = C_dia and C_dia# = C_box", symbol="none", grid_free=True)
def _c_pair_sharp(ctx):
    worst = 0.0
    for c1, c2 in _pairs(ctx):
        c_dia, c_box, _ = c_pair(c1, c2)
        worst = _max(worst, _d(sharp(c_box), c_dia), _d(sharp(c_dia), c_box))
    return worst


@register("q-ker", "ker Q = {C1 f (+) -C2 f}", symbol="none", grid_free=True)
def _q_ker(ctx):
    worst, swapped = 0.0, 0.0
    for c1, c2 in _pairs(ctx):
        n = c1.rows
        _, _, q = c_pair(c1, c2)
        k = diamond(c1, -c2)
        worst = _max(worst, (q @ k).norm(), abs(numerical_rank(k) - n), abs(2 * n - numerical_rank(q) - n))
        swapped = max(swapped, (q @ diamond(c2, -c1)).norm())
    return worst, {"swapped_order_residual": swapped}


@register("q-ran", "ran Q = {C1 f (+) C2 f}", symbol="none", grid_free=True)
def _q_ran(ctx):
    worst, swapped = 0.0, 0.0
    for c1, c2 in _pairs(ctx):
        n = c1.rows
        _, _, q = c_pair(c1, c2)
        r = diamond(c1, c2)
        worst = _max(worst, _d(q @ r, r), abs(numerical_rank(r) - n))
        w = diamond(c2, c1)
        swapped = max(swapped, _d(q @ w, w))
    return worst, {"swapped_order_residual": swapped}


@register("prop2-5", "C_box (A (+) A) C_dia = A* for A symmetric w.r.t. C1 and C2 (A = C1 C2)",
          symbol="none", grid_free=True)
def _prop2_5(ctx):
    worst = 0.0
    for c1, c2 in _pairs(ctx):
        a = c1 @ c2
        c_dia, c_box, _ = c_pair(c1, c2)
        worst = _max(
            worst,
            _d(c1 @ a @ c1, a.adjoint()),
            _d(c2 @ a @ c2, a.adjoint()),
            _d(c_box @ block_diag(a, a) @ c_dia, a.adjoint()),
        )
    return worst


@register("antself", "A is C-symmetric iff AC is #-selfadjoint iff CA is #-selfadjoint",
          symbol="none", grid_free=True)
def _antself(ctx):
    worst = 0.0
    tol = ctx.config.tolerance_monomial * 10
    for c, _ in _pairs(ctx):
        n = c.rows
        a0 = random_linear(ctx.rng, n, n)
        a = 0.5 * (a0 + c @ a0.adjoint() @ c)
        worst = _max(worst, _d(c @ a @ c, a.adjoint()), asymmetry(a @ c), asymmetry(c @ a))
        flags = {
            _d(c @ a0 @ c, a0.adjoint()) <= tol,
            check_antiselfadjoint(a0 @ c, tol),
            check_antiselfadjoint(c @ a0, tol),
        }
        if len(flags) != 1:
            worst = math.inf
    return worst


# --- conjugations on K_theta -----------------------------------------------


@register("c-split-def", "C_{alpha,theta/alpha}(g1 + alpha g2) = alpha conj(z g1) + theta conj(z g2)",
          symbol="none")
def _c_split_def(ctx):
    s = ctx.space
    m = s.grid
    from .circle import grid_points

    t = grid_points(m)
    alpha_v, theta_v = s.alpha(t), s.theta(t)
    cols = []
    for j in range(s.n):
        f = s.b_theta.functions[j]
        g1 = s.b_alpha.reconstruct(model_project(f, s.b_alpha))
        rest = CircleFunction(np.conj(alpha_v) * (f.samples - g1.samples))
        g2 = s.b_beta.reconstruct(model_project(rest, s.b_beta)) if s.b_beta.dim else CircleFunction(np.zeros(m))
        image = CircleFunction(alpha_v * np.conj(t * g1.samples) + theta_v * np.conj(t * g2.samples))
        cols.append(s.b_theta.coordinates(image))
    closed = AntilinearMap(np.array(cols).T)
    return _d(closed, s.c_split)


@register("prop3-1a", "C_theta(f1 + alpha f2) = C_{theta/alpha} f2 + (theta/alpha) C_alpha f1", symbol="none")
def _prop3_1a(ctx):
    s = ctx.space
    return _max(_d(s.c_theta @ s.e1, s.eba @ s.c_alpha), _d(s.c_theta @ s.e2, s.eb @ s.c_beta))


@register("prop3-1b", "C_theta(f2 + (theta/alpha) f1) = C_alpha f1 + alpha C_{theta/alpha} f2", symbol="none")
def _prop3_1b(ctx):
    s = ctx.space
    return _max(_d(s.c_theta @ s.eba, s.e1 @ s.c_alpha), _d(s.c_theta @ s.eb, s.e2 @ s.c_beta))


@register("prop3-2a", "C_theta C_{alpha,theta/alpha} = P_{theta/alpha} conj(alpha) + (theta/alpha) P_alpha",
          symbol="none")
def _prop3_2a(ctx):
    s = ctx.space
    rhs = s.eb @ s.A("theta", "beta", s.s_alpha.conj()) + s.eba @ s.p_alpha
    return _d(s.c_theta @ s.c_split, rhs)


@register("prop3-2b", "C_{alpha,theta/alpha} C_theta = P_alpha conj(theta/alpha) + alpha P_{theta/alpha}",
          symbol="none")
def _prop3_2b(ctx):
    s = ctx.space
    rhs = s.e1 @ s.A("theta", "alpha", s.s_beta.conj()) + s.e2 @ s.A("theta", "beta", 1.0)
    return _d(s.c_split @ s.c_theta, rhs)


def _lambdas(ctx):
    return [random_disk_point(ctx.rng) for _ in range(ctx.config.trials)]


@register("ker-theta", "C_theta k_lambda = k~_lambda", symbol="none")
def _ker_theta(ctx):
    s = ctx.space
    worst = 0.0
    for lam in _lambdas(ctx):
        k, kt = kernels(s.theta, lam, s.grid)
        kc = s.b_theta.coordinates(k)
        member = (s.b_theta.reconstruct(kc) - k).norm()
        worst = _max(worst, member, float(np.linalg.norm(s.c_theta(kc) - s.b_theta.coordinates(kt))))
    return worst


@register("ker-split", "C_{alpha,theta/alpha} k_lambda = k~^alpha_lambda + alpha(lambda) alpha k~^{theta/alpha}_lambda",
          symbol="none")
def _ker_split(ctx):
    s = ctx.space
    worst = 0.0
    for lam in _lambdas(ctx):
        k, _ = kernels(s.theta, lam, s.grid)
        _, kt_a = kernels(s.alpha, lam, s.grid)
        _, kt_b = kernels(s.beta, lam, s.grid)
        rhs = kt_a + s.alpha(lam) * (s.alpha.sample(s.grid) * kt_b)
        lhs = s.c_split(s.b_theta.coordinates(k))
        worst = max(worst, float(np.linalg.norm(lhs - s.b_theta.coordinates(rhs))))
    return worst


@register("repro", "<f, k_lambda> = f(lambda) on K_theta", symbol="none")
def _repro(ctx):
    s = ctx.space
    worst = 0.0
    for lam in _lambdas(ctx):
        k, _ = kernels(s.theta, lam, s.grid)
        pairings = s.b_theta.samples.T @ np.conj(k.samples) / s.grid
        worst = max(worst, float(np.max(np.abs(pairings - s.b_theta.values_at(lam)[:, 0]))))
    return worst


@register("repro-conj", "<f, C k_lambda> = conj((C f)(lambda)) for C = C_theta and C_{alpha,theta/alpha}",
          symbol="none")
def _repro_conj(ctx):
    s = ctx.space
    worst = 0.0
    for lam in _lambdas(ctx):
        k, _ = kernels(s.theta, lam, s.grid)
        kc = s.b_theta.coordinates(k)
        f = random_vector(ctx.rng, s.n)
        for c in (s.c_theta, s.c_split):
            lhs = _inner_product(f, c(kc))
            rhs = np.conj(s.b_theta.evaluate(c(f), lam))
            worst = max(worst, abs(lhs - rhs))
    return worst


# --- projections --------------------------------------------------------------


@register("p-theta-fact", "P_theta = theta P^- conj(theta) P = theta P^- conj(theta) - P^-; "
          "P_theta f = f - theta P conj(theta) f on H^2", symbol="none")
def _p_theta_fact(ctx):
    s = ctx.space
    b, m = s.b_theta, s.grid
    theta = s.theta.sample(m)
    f = random_symbol(ctx.rng, 2 * s.n).sample(m)
    direct = b.coordinates(f)
    via_route = model_project(f, b)
    second = theta * riesz_project("minus", theta.conj() * f) - riesz_project("minus", f)
    fa = LaurentSymbol(0, random_vector(ctx.rng, 2 * s.n + 1)).sample(m)
    third = fa - theta * riesz_project("plus", theta.conj() * fa)
    worst = float(np.linalg.norm(direct - via_route))
    for g, ref in ((second, direct), (third, b.coordinates(fa))):
        c = b.coordinates(g)
        worst = _max(worst, float(np.linalg.norm(c - ref)), (b.reconstruct(c) - g).norm())
    return worst


@register("p-theta-conj", "P_theta conj(f) = conj(f(0)) (1 - conj(theta(0)) theta) for f in H^2", symbol="none")
def _p_theta_conj(ctx):
    s = ctx.space
    b, m = s.b_theta, s.grid
    coeffs = random_vector(ctx.rng, s.n + 3)
    f = LaurentSymbol(0, coeffs).sample(m)
    lhs = model_project(f.conj(), b)
    k0 = CircleFunction(np.conj(coeffs[0]) * (1 - np.conj(s.theta(0.0)) * s.theta.sample(m).samples))
    return float(np.linalg.norm(lhs - b.coordinates(k0)))


# --- truncated Toeplitz symmetry ---------------------------------------------


@register("tto-csym", "A^theta_phi C_theta = C_theta A^theta_conj(phi)")
def _tto_csym(ctx):
    s, phi = ctx.space, ctx.phi
    return _d(s.A("theta", "theta", phi) @ s.c_theta, s.c_theta @ s.A("theta", "theta", phi.conj()))


def _sym1_sides(s, phi):
    a = s.s_alpha
    lhs = (s.e1 @ s.A("theta", "alpha", phi) + s.e2 @ s.A("theta", "beta", phi * a.conj())) @ s.c_theta
    rhs = s.c_theta @ (
        s.A("alpha", "theta", phi.conj()) @ s.p_alpha
        + s.A("beta", "theta", phi.conj() * a) @ s.A("theta", "beta", a.conj())
    )
    return lhs, rhs


def _sym2_sides(s, phi):
    a, b = s.s_alpha, s.s_beta
    pb = phi * b
    lhs = (s.e1 @ s.A("theta", "alpha", phi) + s.e2 @ s.A("theta", "beta", pb)) @ s.c_split
    rhs = s.c_split @ (
        s.A("alpha", "theta", phi.conj()) @ s.p_alpha
        + s.A("beta", "theta", pb.conj()) @ s.A("theta", "beta", a.conj())
    )
    return lhs, rhs


def _sym3_sides(s, phi, scale=1.0):
    a = s.s_alpha
    outer = boxplus(s.e1 @ s.A("theta", "alpha", phi), s.e2 @ s.A("theta", "beta", phi))
    lhs = outer @ (scale * diamond(s.c_split, s.c_theta))
    inner = diamond(
        s.A("alpha", "theta", phi.conj()) @ s.p_alpha,
        s.A("beta", "theta", phi.conj()) @ s.A("theta", "beta", a.conj()),
    )
    rhs = (scale * boxplus(s.c_split, s.c_theta)) @ inner
    return lhs, rhs


@register("sym1", "(A^{theta,alpha}_phi <> alpha A^{theta,theta/alpha}_{phi conj(alpha)}) C_theta = "
          "C_theta (A^{alpha,theta}_conj(phi) [+] A^{theta/alpha,theta}_{conj(phi) alpha} conj(alpha))")
def _sym1(ctx):
    return _d(*_sym1_sides(ctx.space, ctx.phi))


@register("sym2", "(A^{theta,alpha}_phi <> alpha A^{theta,theta/alpha}_{phi theta/alpha}) C_{alpha,theta/alpha} = "
          "C_{alpha,theta/alpha} (A^{alpha,theta}_conj(phi) [+] A^{theta/alpha,theta}_{conj(phi theta/alpha)} conj(alpha))")
def _sym2(ctx):
    return _d(*_sym2_sides(ctx.space, ctx.phi))


@register("sym3", "(A^{theta,alpha}_phi (+) alpha A^{theta,theta/alpha}_phi)(C_{alpha,theta/alpha} <> C_theta) = "
          "(C_{alpha,theta/alpha} [+] C_theta)(A^{alpha,theta}_conj(phi) (+) A^{theta/alpha,theta}_conj(phi) conj(alpha)); "
          "checked with the raw and the 1/sqrt(2)-normalised actions")
def _sym3(ctx):
    raw = _d(*_sym3_sides(ctx.space, ctx.phi))
    normalised = _d(*_sym3_sides(ctx.space, ctx.phi, 1 / math.sqrt(2)))
    return max(raw, normalised), {"raw": raw, "normalised": normalised}


@register("sym1a", "(A^{theta,alpha}_phi <> alpha A^{theta,theta/alpha}_{phi conj(alpha)}) C_theta is #-selfadjoint")
def _sym1a(ctx):
    return asymmetry(_sym1_sides(ctx.space, ctx.phi)[0])


@register("sym2a", "(A^{theta,alpha}_phi <> alpha A^{theta,theta/alpha}_{phi theta/alpha}) C_{alpha,theta/alpha} "
          "is #-selfadjoint")
def _sym2a(ctx):
    return asymmetry(_sym2_sides(ctx.space, ctx.phi)[0])


@register("sym3a", "(A^{theta,alpha}_phi (+) alpha A^{theta,theta/alpha}_phi)(C_{alpha,theta/alpha} <> C_theta) "
          "is #-selfadjoint (raw and normalised)")
def _sym3a(ctx):
    raw = asymmetry(_sym3_sides(ctx.space, ctx.phi)[0])
    normalised = asymmetry(_sym3_sides(ctx.space, ctx.phi, 1 / math.sqrt(2))[0])
    return max(raw, normalised), {"raw": raw, "normalised": normalised}


# --- symbol classes for the asymmetric C-symmetry --------------------------


def class_symbol(space: SplitModelSpace, rng, which: str):
    """Random symbol in ``conj((theta/alpha) K_alpha)`` (``class1``) or ``K_alpha`` (``class2``)."""
    v = random_vector(rng, space.d)
    g = LaurentSymbol(0, v) if space.b_alpha.is_monomial else space.b_alpha.reconstruct(v)
    if which == "class1":
        return (space.s_beta * g).conj()
    if which == "class2":
        return g
    raise ValueError(f"unknown symbol class {which!r}")


def _cor_first(s, phi):
    return _d(s.e1 @ s.A("theta", "alpha", phi) @ s.c_theta, s.c_theta @ s.A("alpha", "theta", phi.conj()) @ s.p_alpha)


def _cor_second(s, phi):
    return _d(s.e1 @ s.A("theta", "alpha", phi) @ s.c_split, s.c_split @ s.A("alpha", "theta", phi.conj()) @ s.p_alpha)


def _class_sweep(ctx, which, fn):
    if ctx.phi is not None:
        return fn(ctx.space, ctx.phi)
    return max(fn(ctx.space, class_symbol(ctx.space, ctx.rng, which)) for _ in range(ctx.config.trials))


@register("cor5-3-1", "A C_theta = C_theta A* P_alpha for A = A^{theta,alpha}_phi, phi in conj((theta/alpha) K_alpha)",
          symbol="class1", proper=True)
def _cor1(ctx):
    return _class_sweep(ctx, "class1", _cor_first)


@register("cor5-3-2", "A C_{alpha,theta/alpha} = C_{alpha,theta/alpha} A* P_alpha for A = A^{theta,alpha}_phi, phi in K_alpha",
          symbol="class2", proper=True)
def _cor2(ctx):
    return _class_sweep(ctx, "class2", _cor_second)


@register("cor5-3-generic", "neither asymmetric C-symmetry holds for phi = conj(z) (expected mismatch)",
          symbol="fixed", proper=True, expect_equal=False)
def _cor_generic(ctx):
    phi = ctx.phi if ctx.phi is not None else LaurentSymbol.monomial(-1)
    first, second = _cor_first(ctx.space, phi), _cor_second(ctx.space, phi)
    return min(first, second), {"c_theta": first, "c_split": second}


_NAIVE_DEFAULTS = (
    BlaschkeProduct.zpow(2),
    BlaschkeProduct.zpow(1),
    LaurentSymbol(-1, [-1.0, 0.0, 1.0]),
)


@register("naive-csym", "A C = C A* for a truncated Toeplitz A and C = C_{alpha,theta/alpha} "
          "(expected mismatch: phi = z - conj(z) on K_{z^2} with C = J)",
          symbol="fixed", expect_equal=False, defaults=_NAIVE_DEFAULTS)
def _naive(ctx):
    s, phi = ctx.space, ctx.phi
    a = s.A("theta", "theta", phi)
    return _d(a @ s.c_split, s.c_split @ a.adjoint()), {"A": a.matrix.real.tolist()}


# --- Hankel forms -----------------------------------------------------------------


@register("hank-fact-left", "A^theta_phi C_theta = H~_theta H_{conj(theta) phi} C_theta")
def _hank_left(ctx):
    s, phi = ctx.space, ctx.phi
    rhs = s.HH(s.theta, "theta", s.s_theta.conj() * phi, "theta") @ s.c_theta
    return _d(s.A("theta", "theta", phi) @ s.c_theta, rhs)


@register("hank-fact-right", "C_theta A^theta_phi = H~_theta H_{conj(theta) conj(phi)} C_theta")
def _hank_right(ctx):
    s, phi = ctx.space, ctx.phi
    rhs = s.HH(s.theta, "theta", s.s_theta.conj() * phi.conj(), "theta") @ s.c_theta
    return _d(s.c_theta @ s.A("theta", "theta", phi), rhs)


@register("han1", "A^{theta,alpha}_phi C_theta - C_theta A^{alpha,theta}_conj(phi) P_alpha = "
          "H~_alpha H_{conj(alpha) phi} C_{theta/alpha} P_{theta/alpha} conj(alpha) - "
          "alpha H~_{theta/alpha} H_{conj(theta) phi} C_theta P_alpha")
def _han1(ctx):
    s, phi = ctx.space, ctx.phi
    a, t = s.s_alpha, s.s_theta
    lhs = s.e1 @ s.A("theta", "alpha", phi) @ s.c_theta - s.c_theta @ s.A("alpha", "theta", phi.conj()) @ s.p_alpha
    rhs = (
        s.e1 @ s.HH(s.alpha, "alpha", a.conj() * phi, "beta") @ s.c_beta @ s.A("theta", "beta", a.conj())
        - s.e2 @ s.HH(s.beta, "beta", t.conj() * phi, "theta") @ s.c_theta @ s.e1 @ s.p_alpha
    )
    return _d(lhs, rhs)


def _han2_sides(s, phi):
    lhs = s.e1 @ s.A("theta", "alpha", phi) @ s.c_split - s.c_split @ s.A("alpha", "theta", phi.conj()) @ s.p_alpha
    rhs = (
        s.e1 @ s.HH(s.alpha, "alpha", phi, "theta") @ s.c_theta
        - s.HH(s.theta, "theta", phi, "alpha") @ s.c_alpha @ s.p_alpha
    )
    return lhs, rhs


def _cor73_sides(s, phi):
    a = s.s_alpha
    lhs = s.e2 @ s.A("theta", "beta", phi) @ s.c_theta - s.c_theta @ s.A("beta", "theta", phi.conj()) @ s.A(
        "theta", "beta", a.conj()
    )
    rhs = (
        s.HH(s.theta, "theta", phi, "alpha") @ s.c_alpha @ s.p_alpha
        - s.e1 @ s.HH(s.alpha, "alpha", phi, "theta") @ s.c_theta
    )
    return lhs, rhs


@register("han2", "A^{theta,alpha}_phi C_{alpha,theta/alpha} - C_{alpha,theta/alpha} A^{alpha,theta}_conj(phi) P_alpha = "
          "H~_alpha H_phi C_theta - H~_theta H_phi C_alpha P_alpha")
def _han2(ctx):
    return _d(*_han2_sides(ctx.space, ctx.phi))


@register("han3", "(theta/alpha) A^{theta,alpha}_phi C_theta - C_theta A^{alpha,theta}_conj(phi) P_alpha conj(theta/alpha) = "
          "H~_theta H_phi C_{theta/alpha} P_{theta/alpha} - H~_{theta/alpha} H_phi C_theta")
def _han3(ctx):
    s, phi = ctx.space, ctx.phi
    lhs = s.eba @ s.A("theta", "alpha", phi) @ s.c_theta - s.c_theta @ s.A("alpha", "theta", phi.conj()) @ s.A(
        "theta", "alpha", s.s_beta.conj()
    )
    rhs = (
        s.HH(s.theta, "theta", phi, "beta") @ s.c_beta @ s.A("theta", "beta", 1.0)
        - s.eb @ s.HH(s.beta, "beta", phi, "theta") @ s.c_theta
    )
    return _d(lhs, rhs)


@register("cor7-3", "alpha A^{theta,theta/alpha}_phi C_theta - C_theta A^{theta/alpha,theta}_conj(phi) P_{theta/alpha} conj(alpha) = "
          "H~_theta H_phi C_alpha P_alpha - H~_alpha H_phi C_theta")
def _cor73(ctx):
    return _d(*_cor73_sides(ctx.space, ctx.phi))


@register("eq7-8", "A^{theta,alpha}_phi C_{alpha,theta/alpha} + alpha A^{theta,theta/alpha}_phi C_theta = "
          "C_{alpha,theta/alpha} A^{alpha,theta}_conj(phi) P_alpha + C_theta A^{theta/alpha,theta}_conj(phi) P_{theta/alpha} conj(alpha); "
          "the Hankel sides of the two differences cancel as well")
def _eq78(ctx):
    l5, r5 = _han2_sides(ctx.space, ctx.phi)
    l7, r7 = _cor73_sides(ctx.space, ctx.phi)
    direct, hankel = (l5 + l7).norm(), (r5 + r7).norm()
    return max(direct, hankel), {"operator_side": direct, "hankel_side": hankel}


# --- M_z-conjugations (monomial scale) -------------------------------------------


def _degrees(ctx):
    return ctx.space.alpha.degree, ctx.space.theta.degree


@register("mz-enum", "C_beta(K_alpha) in K_theta exactly for deg alpha <= deg beta <= deg theta",
          symbol="none", grid_free=True)
def _mz_enum(ctx):
    d, n = _degrees(ctx)
    got = mz_conjugation_enumerate(d, n, 0).admissible_betas
    want = tuple(range(d, n + 1))
    return (0.0 if got == want else 1.0), {"betas": list(got)}


@register("mz-unique", "C_theta is the only M_z-conjugation mapping K_theta into itself",
          symbol="none", grid_free=True)
def _mz_unique(ctx):
    _, n = _degrees(ctx)
    got = mz_conjugation_enumerate(n, n, 0).admissible_betas
    return (0.0 if got == (n,) else 1.0), {"betas": list(got)}


@register("mz-dichotomy", "conjugations agreeing with M_z-conjugations on K_alpha and its complement are "
          "C_theta and C_{alpha,theta/alpha} only", symbol="none", grid_free=True, proper=True)
def _mz_dichotomy(ctx):
    d, n = _degrees(ctx)
    found = dichotomy_check(d, n)
    labels = sorted(c.label for c in found)
    want = {(n, n), (d, n + d)}
    return (0.0 if {(c.beta1, c.beta2) for c in found} == want else 1.0), {"conjugations": labels}


@register("splittings", "z^g1 K_{a2} (+) z^g2 K_{a1} = K_{a1 a2} only for (g1, g2) = (1, a2) or (a1, 1)",
          symbol="none", grid_free=True, proper=True)
def _splittings(ctx):
    d, n = _degrees(ctx)
    got = orthogonal_splittings(d, n - d)
    return (0.0 if got == {(0, n - d), (d, 0)} else 1.0), {"pairs": sorted(got)}


# ---------------------------------------------------------------------------
# fixtures: displayed matrices with a_{-4}..a_2


FIXTURE_LO, FIXTURE_HI = -4, 2


def fixture_coefficients(seed: int) -> dict:
    rng = identity_rng(seed, "fixtures")
    vals = _uniform_complex(rng, FIXTURE_HI - FIXTURE_LO + 1)
    return {n: complex(v) for n, v in zip(range(FIXTURE_LO, FIXTURE_HI + 1), vals)}


def _pattern(rows, cols, index, a, negative_only=False):
    out = np.zeros((rows, cols), dtype=complex)
    for i in range(rows):
        for j in range(cols):
            k = index(i, j)
            if k is None or (negative_only and k >= 0):
                continue
            out[i, j] = a.get(k, 0)
    return out


def _literal(rows, a):
    return np.array([[0 if k is None else a[k] for k in row] for row in rows], dtype=complex)


def _fixture_space(grid):
    return split_space(BlaschkeProduct.zpow(5), BlaschkeProduct.zpow(3), grid)


def _fixture_symbol(a):
    return LaurentSymbol(FIXTURE_LO, [a[n] for n in range(FIXTURE_LO, FIXTURE_HI + 1)])


def _fx_atto(s, phi, a):
    return _pattern(3, 5, lambda i, j: i - j, a), s.A("theta", "alpha", phi)


def _fx_atto_abar(s, phi, a):
    return _pattern(2, 5, lambda i, j: i - j + 3, a), s.A("theta", "beta", phi * s.s_alpha.conj())


def _fx_atto_z2(s, phi, a):
    return _pattern(2, 5, lambda i, j: i - j - 2, a), s.A("theta", "beta", phi * s.s_beta)


_TOP = [[-2, -1, 0, -4, -3], [-1, 0, 1, -3, -2], [0, 1, 2, -2, -1]]


def _fx_block_split(s, phi, a):
    want = _literal(_TOP + [[-4, -3, -2, None, None], [-3, -2, -1, None, -4]], a)
    got = (s.e1 @ s.A("theta", "alpha", phi) + s.e2 @ s.A("theta", "beta", phi * s.s_beta)) @ s.c_split
    return want, got


def _fx_block_sym(s, phi, a):
    want = _literal(_TOP + [[-4, -3, -2, -1, 0], [-3, -2, -1, 0, 1]], a)
    outer = boxplus(s.e1 @ s.A("theta", "alpha", phi), s.e2 @ s.A("theta", "beta", phi))
    return want, outer @ diamond(s.c_split, s.c_theta)


def _fx_remark(s, phi, a):
    # t_n = a_n on [-4, 2]; the product with the flip is b_ij = t_{i+j-N+1}
    n = s.n
    want = _pattern(n, n, lambda i, j: i + j - n + 1, a)
    return want, s.A("theta", "theta", phi) @ s.c_theta


def _fx_han1_a(s, phi, a):
    got = s.HH(s.alpha, "alpha", s.s_alpha.conj() * phi, "beta") @ s.c_beta
    return _pattern(3, 2, lambda i, j: i + j - 1, a), got


def _fx_han1_b(s, phi, a):
    got = s.HH(s.beta, "beta", s.s_theta.conj() * phi, "theta") @ s.c_theta @ s.e1
    return _pattern(2, 3, lambda i, j: i + j - 1, a), got


def _fx_han2_a(s, phi, a):
    got = s.HH(s.alpha, "alpha", phi, "theta") @ s.c_theta
    return _pattern(3, 5, lambda i, j: i + j - 7, a, negative_only=True), got


def _fx_han2_b(s, phi, a):
    got = s.HH(s.theta, "theta", phi, "alpha") @ s.c_alpha
    return _pattern(5, 3, lambda i, j: i + j - 7, a, negative_only=True), got


def _fx_han3_a(s, phi, a):
    got = s.HH(s.theta, "theta", phi, "beta") @ s.c_beta
    return _pattern(5, 2, lambda i, j: i + j - 6, a, negative_only=True), got


def _fx_han3_b(s, phi, a):
    got = s.HH(s.beta, "beta", phi, "theta") @ s.c_theta
    return _pattern(2, 5, lambda i, j: i + j - 6, a, negative_only=True), got


FIXTURES = {
    "fixture-6-atto": ("A^{z^5,z^3}_phi has entries a_{i-j}", _fx_atto),
    "fixture-6-atto-abar": ("A^{z^5,z^2}_{phi conj(z)^3} has entries a_{i-j+3}", _fx_atto_abar),
    "fixture-6-atto-z2": ("A^{z^5,z^2}_{phi z^2} has entries a_{i-j-2}", _fx_atto_z2),
    "fixture-6-block-split": ("(A^{z^5,z^3}_phi <> z^3 A^{z^5,z^2}_{phi z^2}) C_{z^3,z^2} block pattern", _fx_block_split),
    "fixture-6-block-sym": ("(A^{z^5,z^3}_phi (+) z^3 A^{z^5,z^2}_phi)(C_{z^3,z^2} <> C_{z^5}) block pattern", _fx_block_sym),
    "fixture-6-hankel": ("A^{z^5}_phi C_{z^5} is the symmetric Hankel matrix t_{i+j-4}", _fx_remark),
    "fixture-8-han1-a": ("H~_{z^3} H_{conj(z)^3 phi} C_{z^2} has entries a_{i+j-1}", _fx_han1_a),
    "fixture-8-han1-b": ("H~_{z^2} H_{conj(z)^5 phi} C_{z^5} on K_{z^3} has entries a_{i+j-1}", _fx_han1_b),
    "fixture-8-han2-a": ("H~_{z^3} H_phi C_{z^5} has entries a_{i+j-7}", _fx_han2_a),
    "fixture-8-han2-b": ("H~_{z^5} H_phi C_{z^3} has entries a_{i+j-7}", _fx_han2_b),
    "fixture-8-han3-a": ("H~_{z^5} H_phi C_{z^2} has entries a_{i+j-6}", _fx_han3_a),
    "fixture-8-han3-b": ("H~_{z^2} H_phi C_{z^5} has entries a_{i+j-6}", _fx_han3_b),
}


def _register_fixture(fid, statement, builder):
    def compute(ctx):
        a = fixture_coefficients(ctx.config.seed)
        s = _fixture_space(ctx.space.grid)
        want, got = builder(s, _fixture_symbol(a), a)
        diff = want - got.matrix
        extras = {"entrywise_max": float(np.max(np.abs(diff))), "shape": list(want.shape)}
        resid = float(np.linalg.norm(diff, 2))
        if fid == "fixture-6-hankel":
            extras["asymmetry"] = asymmetry(got)
            resid = max(resid, extras["asymmetry"])
        return resid, extras

    REGISTRY[fid] = Identity(
        fid, statement, compute, symbol="fixed", grid_free=True,
        defaults=(BlaschkeProduct.zpow(5), BlaschkeProduct.zpow(3), None),
    )


for _fid, (_st, _fn) in FIXTURES.items():
    _register_fixture(_fid, _st, _fn)


# ---------------------------------------------------------------------------
# running


def registry_ids() -> list:
    return sorted(REGISTRY)


def get_identity(identity_id: str) -> Identity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None


def _evaluate(ident: Identity, theta, alpha, phi, config: RunConfig, grid: int):
    ctx = Context(split_space(theta, alpha, grid), phi, config, ident.id)
    if phi is None and ident.symbol == "free":
        ctx.phi = phi = random_symbol(ctx.rng, max(theta.degree - 1, 0))
    out = ident.compute(ctx)
    resid, extras = out if isinstance(out, tuple) else (out, {})
    return float(resid), dict(extras), phi


def _symbol_json(phi):
    if phi is None:
        return None
    if isinstance(phi, LaurentSymbol):
        return phi.to_json()
    return {"sampled": True}


def verify_identity(identity_id: str, theta: BlaschkeProduct | None = None, alpha: BlaschkeProduct | None = None,
                    phi=None, config: RunConfig | None = None) -> IdentityReport:
    """Evaluate one registered identity and return its report.

    Without ``theta``/``alpha`` the identity's own defaults are used (for
    fixtures and the fixed counterexample) or ``z^5``, ``z^3``.  Without
    ``alpha`` it defaults to ``theta``.
    """
    config = config or RunConfig()
    ident = get_identity(identity_id)
    if theta is None:
        if ident.defaults is not None:
            theta, alpha, default_phi = ident.defaults
            phi = phi if phi is not None else default_phi
        else:
            theta, alpha = BlaschkeProduct.zpow(5), alpha or BlaschkeProduct.zpow(3)
    if alpha is None:
        alpha = theta
    if ident.symbol == "fixed" and phi is None and ident.defaults is not None:
        phi = ident.defaults[2]
    if blaschke_divide(alpha, theta) is None:
        raise DomainError(f"{alpha.label()} does not divide {theta.label()}")
    if ident.proper and alpha.degree >= theta.degree:
        raise DomainError(f"{identity_id} needs alpha to divide theta strictly")
    monomial = theta.is_monomial and alpha.is_monomial
    tol = config.tolerance_monomial if monomial else config.tolerance_blaschke

    grid = config.grid_size
    history = []
    if monomial or ident.grid_free or not config.refine:
        resid, extras, used = _evaluate(ident, theta, alpha, phi, config, grid)
    else:
        prev = None
        while True:
            try:
                resid, extras, used = _evaluate(ident, theta, alpha, phi, config, grid)
            except AliasingError:
                if grid * 2 > config.max_grid:
                    raise
                grid *= 2
                continue
            history.append([grid, resid])
            if prev is not None and abs(resid - prev) <= REFINE_TOL:
                break
            if grid * 2 > config.max_grid:
                extras["unconverged"] = True
                break
            prev = resid
            grid *= 2
    if history:
        extras["refinement"] = history
    params = {
        "theta": theta.to_json(),
        "alpha": alpha.to_json(),
        "symbol": _symbol_json(used),
        "grid": grid,
        "seed": config.seed,
    }
    if ident.symbol in ("class1", "class2") and phi is None:
        params["symbol_class"] = ident.symbol
    return IdentityReport(identity_id, params, resid, tol, bool(resid <= tol), ident.expect_equal, extras)


_DIRECTIONS = {"class1": "cor5-3-1", "class2": "cor5-3-2", "generic": "cor5-3-generic"}


def verify_corollary_5_3(direction: str, theta: BlaschkeProduct, alpha: BlaschkeProduct,
                         config: RunConfig | None = None, phi=None) -> IdentityReport:
    """Asymmetric C-symmetry for in-class symbols (``class1``, ``class2``) or its failure (``generic``).

    ``class1`` draws ``config.trials`` symbols from ``conj((theta/alpha) K_alpha)``
    and checks ``A C_theta = C_theta A* P_alpha``; ``class2`` draws from
    ``K_alpha`` and checks the same with ``C_{alpha,theta/alpha}``;
    ``generic`` uses ``phi = conj(z)`` and expects both to fail.
    """
    try:
        identity_id = _DIRECTIONS[direction]
    except KeyError:
        raise ConfigurationError(f"direction must be one of {sorted(_DIRECTIONS)}") from None
    return verify_identity(identity_id, theta, alpha, phi, config)


def fixture_suite(config: RunConfig | None = None) -> list:
    """Every displayed matrix rebuilt by the library and compared with its entry pattern."""
    config = config or RunConfig()
    return [verify_identity(fid, config=config) for fid in FIXTURES]


def suite_parameters(config: RunConfig) -> list:
    """Pairs used by :func:`run_suite`: ``z^5 / z^3``, ``z^4 / z^4`` and a seeded Blaschke pair."""
    rng = identity_rng(config.seed, "suite-pairs")
    return [
        (BlaschkeProduct.zpow(5), BlaschkeProduct.zpow(3)),
        (BlaschkeProduct.zpow(4), BlaschkeProduct.zpow(4)),
        random_blaschke_pair(rng, max_degree=5),
    ]


def run_suite(config: RunConfig | None = None, pairs: list | None = None) -> list:
    """All registered identities over the suite parameters, sorted by id."""
    config = config or RunConfig()
    pairs = pairs if pairs is not None else suite_parameters(config)
    reports = []
    for ident_id in registry_ids():
        ident = REGISTRY[ident_id]
        if ident.defaults is not None:
            reports.append(verify_identity(ident_id, config=config))
            continue
        for theta, alpha in pairs:
            if ident.proper and alpha.degree >= theta.degree:
                continue
            if ident.symbol == "fixed" and not (theta.is_monomial and alpha.is_monomial):
                continue
            reports.append(verify_identity(ident_id, theta, alpha, config=config))
    return reports


def summarize(reports: list) -> str:
    lines = [f"{'id':<22} {'residual':>11} {'tol':>8}  expected  result"]
    for r in reports:
        status = "ok" if r.ok else "FAIL"
        lines.append(f"{r.identity_id:<22} {r.residual:11.3e} {r.tolerance:8.0e}  "
                     f"{'equal' if r.expect_equal else 'differ':<8}  {status}")
    bad = sum(not r.ok for r in reports)
    lines.append(f"{len(reports)} checks, {bad} failures")
    return "\n".join(lines)
