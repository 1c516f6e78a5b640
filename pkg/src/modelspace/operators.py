"""Concrete matrices for conjugations, (asymmetric) truncated Toeplitz and Hankel operators.

Matrix conventions
------------------
* Coordinates on ``K_theta`` are taken in a :class:`~modelspace.model_space.ModelBasis`.
* ``A^{theta,alpha}_phi = P_alpha M_phi : K_theta -> K_alpha`` has entries
  ``<phi e_j, f_i>`` with ``e_j`` the basis of ``K_theta`` and ``f_i`` that of
  ``K_alpha``.  Because the entry only needs ``phi e_j`` paired against
  elements of the target, every ``P_X (psi .)`` that appears in the identities
  (inclusions ``K_alpha -> K_theta``, multiplication by an inner divisor,
  ``P_alpha``, ``P_{theta/alpha} conj(alpha)``, ...) is built by the same
  routine :func:`atto_between`.
* ``H_phi f = P^-(phi f)`` lands in ``conj(H^2_0)``; its matrix has one row per
  frequency of a :class:`~modelspace.circle.FourierWindow` (``lo <= n <= -1``).
  ``H~_eta g = P(eta g)`` maps window coefficients back to model-space
  coordinates of the codomain.  Products ``H~ H`` must share the window.

When every inner function involved is a monomial ``c z^N`` and the symbol is
a :class:`~modelspace.model_space.LaurentSymbol`, entries are read off the
Laurent coefficients directly (``A`` entry ``(i, j)`` is ``phi_{i-j}``), so
those matrices are exact.  Otherwise they are computed by quadrature on the
basis grid.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np
import scipy.linalg

from .antilinear import (
    AntilinearMap,
    LinearMap,
    check_conjugation,
)
from .circle import (
    ALIAS_TOL,
    DEFAULT_GRID,
    CircleFunction,
    FourierWindow,
    _guard_mask,
    check_grid,
    frequencies,
    grid_points,
)
from .errors import (
    AliasingError,
    ConfigurationError,
    DimensionError,
    DomainError,
    TruncationError,
)
from .model_space import (
    BlaschkeProduct,
    LaurentSymbol,
    ModelBasis,
    _basis,
    blaschke_divide,
    inner_mult_embed,
    tm_basis,
)

#: relative energy allowed outside a Hankel window
TAIL_TOL = 1e-13
#: relative energy an image of C_theta may leave K_theta
LEAK_TOL = 1e-10


# ---------------------------------------------------------------------------
# symbols


def _symbol_samples(symbol, grid_size: int) -> np.ndarray:
    if isinstance(symbol, LaurentSymbol):
        return symbol.sample(grid_size).samples
    if isinstance(symbol, CircleFunction):
        if symbol.grid_size != grid_size:
            raise DimensionError(f"symbol sampled on {symbol.grid_size} points, basis on {grid_size}")
        symbol.check_band()
        return symbol.samples
    if isinstance(symbol, BlaschkeProduct):
        return symbol(grid_points(grid_size))
    if np.isscalar(symbol):
        return np.full(grid_size, complex(symbol))
    raise TypeError(f"unsupported symbol type {type(symbol).__name__}")


def _as_exact(symbol):
    """LaurentSymbol view of ``symbol`` when one exists without quadrature."""
    if isinstance(symbol, LaurentSymbol):
        return symbol
    if isinstance(symbol, BlaschkeProduct) and symbol.is_monomial:
        return LaurentSymbol.monomial(symbol.degree, symbol.constant)
    if np.isscalar(symbol):
        return LaurentSymbol.monomial(0, complex(symbol))
    return None


# ---------------------------------------------------------------------------
# conjugations


def c_theta_matrix(basis: ModelBasis) -> AntilinearMap:
    """``C_theta f = theta conj(z) conj(f)`` in the coordinates of ``basis``."""
    n = basis.dim
    theta = basis.parent
    if basis.is_monomial:
        return AntilinearMap(theta.constant * np.eye(n)[::-1])
    m = basis.grid_size
    t = grid_points(m)
    images = (theta(t) * np.conj(t))[:, None] * np.conj(basis.samples)
    mat = basis.samples.conj().T @ images / m
    leak = np.abs(1.0 - np.sum(np.abs(mat) ** 2, axis=0))
    if n and leak.max() > LEAK_TOL:
        raise AliasingError(f"C_theta image leaves K_theta by {leak.max():.2e}; refine the grid")
    return AntilinearMap(mat)


def c_split_matrix(alpha: BlaschkeProduct, theta: BlaschkeProduct, grid: int = DEFAULT_GRID) -> AntilinearMap:
    """``C_{alpha, theta/alpha} = C_alpha (+) alpha C_{theta/alpha} conj(alpha)`` on ``K_theta``.

    ``alpha = theta`` is accepted and gives ``C_theta``.
    """
    return split_space(theta, alpha, grid).c_split


# ---------------------------------------------------------------------------
# truncated Toeplitz operators


def atto_between(symbol, source: ModelBasis, target: ModelBasis) -> LinearMap:
    """Matrix of ``f -> P_target(symbol * f)`` from ``source`` to ``target`` coordinates."""
    exact = _as_exact(symbol)
    if exact is not None and source.is_monomial and target.is_monomial:
        idx = np.subtract.outer(np.arange(target.dim), np.arange(source.dim))
        return LinearMap(exact.coefficient(idx).reshape(target.dim, source.dim))
    if source.grid_size != target.grid_size:
        raise DimensionError("source and target bases use different grids")
    psi = _symbol_samples(symbol, source.grid_size)
    return LinearMap(target.samples.conj().T @ (psi[:, None] * source.samples) / source.grid_size)


def atto_matrix(phi, theta: BlaschkeProduct, alpha: BlaschkeProduct, grid: int = DEFAULT_GRID) -> LinearMap:
    """``A^{theta,alpha}_phi = P_alpha M_phi`` restricted to ``K_theta``, mapping into ``K_alpha``.

    With ``alpha = theta`` this is the truncated Toeplitz operator ``A^theta_phi``.
    """
    return atto_between(phi, tm_basis(theta, grid), tm_basis(alpha, grid))


# ---------------------------------------------------------------------------
# Hankel operators


def default_window(symbol, domain: ModelBasis) -> FourierWindow:
    """Window ``[lo, -1]`` capturing every co-analytic coefficient of ``symbol * f``.

    For a Laurent symbol with lowest frequency ``b`` and analytic basis
    functions, ``lo = min(b - deg, -1)`` suffices; for sampled symbols the
    whole negative half of the grid is used.
    """
    exact = _as_exact(symbol)
    if exact is not None:
        lo = min((exact.lo if not exact.is_zero else 0) - domain.parent.degree, -1)
        return FourierWindow.zeros(lo, -1)
    return FourierWindow.zeros(-(domain.grid_size // 2) + 1, -1)


def _window_of(window, symbol, domain):
    if window is None:
        return default_window(symbol, domain)
    if isinstance(window, tuple):
        return FourierWindow.zeros(*window)
    if window.hi != -1:
        raise ConfigurationError("Hankel windows must end at frequency -1")
    return window


def hankel_matrix(symbol, domain: ModelBasis, window: FourierWindow | None = None) -> LinearMap:
    """``H_symbol f = P^-(symbol f)`` from ``domain`` coordinates to window coefficients.

    Row ``r`` holds frequency ``window.lo + r``.  Raises
    :class:`~modelspace.errors.TruncationError` if co-analytic energy falls
    outside the window.
    """
    window = _window_of(window, symbol, domain)
    rows = window.indices
    exact = _as_exact(symbol)
    if exact is not None and domain.is_monomial:
        if not exact.is_zero and exact.lo < window.lo:
            raise TruncationError(
                f"symbol frequency {exact.lo} lies below the Hankel window [{window.lo}, -1]"
            )
        idx = np.subtract.outer(rows, np.arange(domain.dim))
        return LinearMap(exact.coefficient(idx).reshape(rows.size, domain.dim))
    m = domain.grid_size
    if not window.fits(m):
        raise AliasingError(f"window [{window.lo}, -1] does not fit a grid of size {m}")
    psi = _symbol_samples(symbol, m)
    coeffs = np.fft.fft(psi[:, None] * domain.samples, axis=0) / m
    scale = np.maximum(1.0, np.sqrt(np.sum(np.abs(coeffs) ** 2, axis=0)))
    guard = np.sqrt(np.sum(np.abs(coeffs[_guard_mask(m)]) ** 2, axis=0)) / scale
    freq = frequencies(m)
    outside = (freq < window.lo)
    tail = np.sqrt(np.sum(np.abs(coeffs[outside]) ** 2, axis=0)) / scale
    if domain.dim and guard.max() > ALIAS_TOL:
        raise AliasingError(f"relative energy {guard.max():.2e} near Nyquist; refine the grid")
    if domain.dim and tail.max() > TAIL_TOL:
        raise TruncationError(f"relative energy {tail.max():.2e} below the Hankel window [{window.lo}, -1]")
    return LinearMap(coeffs[rows % m])


def tilde_hankel_matrix(psi, window: FourierWindow, codomain: ModelBasis) -> LinearMap:
    """``H~_psi g = P(psi g)`` for ``g`` given by window coefficients, into ``codomain`` coordinates.

    Entry ``(i, w)`` is ``<psi z^w, e_i>``; the outer ``P`` is absorbed since
    ``e_i`` is analytic.
    """
    if isinstance(window, tuple):
        window = FourierWindow.zeros(*window)
    cols = window.indices
    exact = _as_exact(psi)
    if exact is not None and codomain.is_monomial:
        idx = np.subtract.outer(np.arange(codomain.dim), cols)
        return LinearMap(exact.coefficient(idx).reshape(codomain.dim, cols.size))
    m = codomain.grid_size
    if not window.fits(m):
        raise AliasingError(f"window [{window.lo}, -1] does not fit a grid of size {m}")
    vals = _symbol_samples(psi, m)
    coeffs = np.fft.fft(vals[:, None] * np.conj(codomain.samples), axis=0) / m
    return LinearMap(coeffs[(-cols) % m].T)


# ---------------------------------------------------------------------------
# the split K_theta = K_alpha (+) alpha K_{theta/alpha}


_MEMO_SIZE = 512


class SplitModelSpace:
    """Bases, embeddings and conjugations attached to a divisor ``alpha`` of ``theta``.

    With ``beta = theta / alpha``:

    ``e1``   inclusion ``K_alpha -> K_theta``
    ``e2``   multiplication by ``alpha``, ``K_beta -> K_theta``
    ``eb``   inclusion ``K_beta -> K_theta``
    ``eba``  multiplication by ``beta``, ``K_alpha -> K_theta``

    so ``e1.adjoint()`` is ``P_alpha`` and ``e2.adjoint()`` is
    ``P_beta conj(alpha)`` on ``K_theta``.  ``alpha = theta`` is allowed, in
    which case ``K_beta`` is zero-dimensional.
    """

    def __init__(self, theta: BlaschkeProduct, alpha: BlaschkeProduct, grid: int = DEFAULT_GRID):
        if alpha.degree == 0 or theta.degree == 0:
            raise DomainError("alpha and theta must be nonconstant")
        beta = blaschke_divide(alpha, theta)
        if beta is None:
            raise DomainError(f"{alpha.label()} does not divide {theta.label()}")
        self.grid = check_grid(grid)
        self.theta, self.alpha, self.beta = theta, alpha, beta
        self.b_theta = tm_basis(theta, grid)
        self.b_alpha = tm_basis(alpha, grid)
        self.b_beta = _basis(beta, grid)
        self.monomial = theta.is_monomial
        self._memo = {}

    # dimensions
    @property
    def n(self) -> int:
        return self.b_theta.dim

    @property
    def d(self) -> int:
        return self.b_alpha.dim

    # inner functions as multipliers
    def sym(self, inner: BlaschkeProduct):
        return inner.symbol(self.grid)

    @cached_property
    def s_theta(self):
        return self.sym(self.theta)

    @cached_property
    def s_alpha(self):
        return self.sym(self.alpha)

    @cached_property
    def s_beta(self):
        return self.sym(self.beta)

    # embeddings
    @cached_property
    def e1(self) -> LinearMap:
        return inner_mult_embed(BlaschkeProduct(), self.b_alpha, self.b_theta)

    @cached_property
    def e2(self) -> LinearMap:
        return inner_mult_embed(self.alpha, self.b_beta, self.b_theta)

    @cached_property
    def eb(self) -> LinearMap:
        return inner_mult_embed(BlaschkeProduct(), self.b_beta, self.b_theta)

    @cached_property
    def eba(self) -> LinearMap:
        return inner_mult_embed(self.beta, self.b_alpha, self.b_theta)

    @cached_property
    def p_alpha(self) -> LinearMap:
        return self.e1.adjoint()

    # conjugations
    @cached_property
    def c_theta(self) -> AntilinearMap:
        return c_theta_matrix(self.b_theta)

    @cached_property
    def c_alpha(self) -> AntilinearMap:
        return c_theta_matrix(self.b_alpha)

    @cached_property
    def c_beta(self) -> AntilinearMap:
        return c_theta_matrix(self.b_beta)

    @cached_property
    def c_split(self) -> AntilinearMap:
        first = self.e1 @ self.c_alpha @ self.e1.adjoint()
        second = self.e2 @ self.c_beta @ self.e2.adjoint()
        return first + second

    # operator builders
    def basis(self, name: str) -> ModelBasis:
        return {"theta": self.b_theta, "alpha": self.b_alpha, "beta": self.b_beta}[name]

    def _cached(self, key, build):
        # maps are immutable, so results for exact (hashable) symbols are shared
        if not isinstance(key[-1], (LaurentSymbol, int, float, complex)):
            return build()
        hit = self._memo.get(key)
        if hit is None:
            if len(self._memo) >= _MEMO_SIZE:
                self._memo.clear()
            hit = self._memo[key] = build()
        return hit

    def A(self, src: str, dst: str, symbol) -> LinearMap:
        """``P_dst(symbol .)`` from ``K_src`` to ``K_dst``."""
        return self._cached(("A", src, dst, symbol),
                            lambda: atto_between(symbol, self.basis(src), self.basis(dst)))

    def HH(self, eta, dst: str, symbol, src: str) -> LinearMap:
        """``H~_eta H_symbol`` from ``K_src`` to ``K_dst`` on a shared default window."""

        def build():
            domain = self.basis(src)
            window = default_window(symbol, domain)
            h = hankel_matrix(symbol, domain, window)
            return tilde_hankel_matrix(eta, window, self.basis(dst)) @ h

        if not isinstance(eta, BlaschkeProduct):
            return build()
        return self._cached(("HH", eta, dst, src, symbol), build)


@lru_cache(maxsize=256)
def split_space(theta: BlaschkeProduct, alpha: BlaschkeProduct, grid: int = DEFAULT_GRID) -> SplitModelSpace:
    """Cached :class:`SplitModelSpace`."""
    return SplitModelSpace(theta, alpha, grid)


# ---------------------------------------------------------------------------
# M_z-conjugations at monomial scale


def _shift_constraint(k: int) -> np.ndarray:
    """Rows enforcing ``G[m, n+1] = G[m+1, n]`` for a conjugation ``v -> G conj(v)`` on ``[-k, k]``."""
    size = 2 * k + 1
    idx = np.arange(size * size).reshape(size, size)
    rows = []
    for m in range(size - 1):
        for n in range(size - 1):
            r = np.zeros(size * size)
            r[idx[m, n + 1]] = 1.0
            r[idx[m + 1, n]] = -1.0
            rows.append(r)
    return np.array(rows)


@lru_cache(maxsize=32)
def intertwining_solutions(k: int) -> np.ndarray:
    """Null space of the ``M_z C = C M_{conj z}`` constraint on the index window ``[-k, k]``.

    Returns an array of shape ``(dim, 2k+1, 2k+1)``.  Every solution is a
    Hankel matrix ``G[m, n] = psi_{m+n}``, i.e. ``C = M_psi J``; the
    dimension is ``4k + 1``, one per anti-diagonal.
    """
    if k < 1:
        raise DomainError("search band must be at least 1")
    ns = scipy.linalg.null_space(_shift_constraint(k))
    size = 2 * k + 1
    return ns.T.reshape(-1, size, size)


def _is_hankel(g: np.ndarray, tol: float = 1e-10) -> bool:
    return bool(np.allclose(g[:-1, 1:], g[1:, :-1], atol=tol))


@dataclass(frozen=True)
class MzClassification:
    """Monomial ``M_z``-conjugations ``C_beta`` with ``C_beta(z^gamma K_{z^alpha}) in K_{z^theta}``.

    ``admissible_betas`` holds degrees of ``beta``; ``witnesses[b]`` is the
    matrix of ``C_{z^b}`` from ``z^gamma K_alpha`` coordinates into
    ``K_theta`` coordinates.
    """

    alpha_deg: int
    theta_deg: int
    gamma_deg: int
    search_band: int
    solution_dim: int
    admissible_betas: tuple
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)


def mz_conjugation_enumerate(alpha_deg: int, theta_deg: int, gamma_deg: int = 0,
                             search_band: int | None = None) -> MzClassification:
    """All ``C = M_psi J`` with ``psi = z^k`` and ``C(z^gamma K_{z^alpha}) in K_{z^theta}``.

    The intertwining constraint is first solved on the index window
    ``[-K, K]`` and every solution is checked to be of the form ``M_psi J``
    (Hankel); the unimodular Laurent-polynomial symbols are exactly the
    monomials ``z^k``, ``|k| <= 2K``, which are then tested one by one.
    """
    if not 1 <= alpha_deg <= theta_deg or gamma_deg < 0:
        raise DomainError("need 1 <= deg alpha <= deg theta and deg gamma >= 0")
    k_band = gamma_deg + theta_deg + 2 if search_band is None else int(search_band)
    if k_band < 1:
        raise DomainError("empty search band")
    sols = intertwining_solutions(k_band)
    if sols.shape[0] != 4 * k_band + 1 or not all(_is_hankel(g) for g in sols):
        raise ArithmeticError("intertwining solutions are not all of the form M_psi J")
    t = grid_points(64)
    betas, witnesses = [], {}
    src = np.arange(gamma_deg, gamma_deg + alpha_deg)
    for k in range(-2 * k_band, 2 * k_band + 1):
        psi = t ** k
        if np.max(np.abs(np.abs(psi) - 1)) > 1e-12:
            continue
        images = k - src  # C(z^j) = z^(k - j)
        if images.min() < 0 or images.max() > theta_deg - 1:
            continue
        w = np.zeros((theta_deg, alpha_deg), dtype=complex)
        w[images, np.arange(alpha_deg)] = 1.0
        betas.append(k + 1)
        witnesses[k + 1] = AntilinearMap(w)
    return MzClassification(alpha_deg, theta_deg, gamma_deg, k_band, sols.shape[0], tuple(betas), witnesses)


def conjugation_label(alpha_deg: int, theta_deg: int, beta1: int, beta2: int) -> str:
    """Name of the block conjugation ``C_{z^b1}`` on ``K_alpha`` and ``C_{z^b2}`` on its complement."""
    def zp(n):
        return "z" if n == 1 else f"z^{n}"

    if beta1 == theta_deg and beta2 == theta_deg:
        return f"C_{{{zp(theta_deg)}}}"
    if beta1 == alpha_deg and beta2 == theta_deg + alpha_deg:
        return f"C_{{{zp(alpha_deg)},{zp(theta_deg - alpha_deg)}}}"
    return f"C[{zp(beta1)}|{zp(beta2)}]"


@dataclass(frozen=True)
class BlockConjugation:
    label: str
    beta1: int
    beta2: int
    matrix: AntilinearMap = field(compare=False, repr=False)


def dichotomy_check(alpha_deg: int, theta_deg: int) -> list:
    """Conjugations on ``K_{z^theta}`` agreeing with ``M_z``-conjugations on ``K_alpha`` and on its complement.

    Candidates pair ``C_{z^b1}`` on ``K_alpha`` with ``C_{z^b2}`` on
    ``z^alpha K_{theta-alpha}``; survivors must map the two blocks onto
    orthogonal pieces filling ``K_theta`` and be conjugations.
    """
    if not 1 <= alpha_deg < theta_deg:
        raise DomainError("need 1 <= deg alpha < deg theta")
    first = mz_conjugation_enumerate(alpha_deg, theta_deg, 0)
    second = mz_conjugation_enumerate(theta_deg - alpha_deg, theta_deg, alpha_deg)
    out = []
    for b1 in first.admissible_betas:
        for b2 in second.admissible_betas:
            m = np.hstack([first.witnesses[b1].matrix, second.witnesses[b2].matrix])
            # orthogonal decomposition: the images of the two blocks tile K_theta
            if not np.allclose(m.conj().T @ m, np.eye(theta_deg)):
                continue
            c = AntilinearMap(m)
            if check_conjugation(c):
                out.append(BlockConjugation(conjugation_label(alpha_deg, theta_deg, b1, b2), b1, b2, c))
    return out


def orthogonal_splittings(a1_deg: int, a2_deg: int) -> set:
    """Pairs ``(g1, g2)`` with ``z^g1 K_{a2} (+) z^g2 K_{a1} = K_{a1+a2}``, ``g1 <= a1``, ``g2 <= a2``."""
    full = set(range(a1_deg + a2_deg))
    out = set()
    for g1 in range(a1_deg + 1):
        for g2 in range(a2_deg + 1):
            s1 = set(range(g1, g1 + a2_deg))
            s2 = set(range(g2, g2 + a1_deg))
            if not s1 & s2 and s1 | s2 == full:
                out.add((g1, g2))
    return out


# ---------------------------------------------------------------------------
# emission

OPERATOR_KINDS = ("atto", "c-theta", "c-split", "embed")


def emit_operator(op: str, theta: BlaschkeProduct, alpha: BlaschkeProduct | None = None,
                  symbol: LaurentSymbol | None = None, grid: int = DEFAULT_GRID) -> dict:
    """Build an operator and return its JSON matrix form with metadata.

    ``op`` is ``"atto"`` (needs ``alpha`` and ``symbol``), ``"c-theta"``,
    ``"c-split"`` (needs ``alpha``) or ``"embed"`` (multiplication by
    ``alpha`` from ``K_{theta/alpha}`` into ``K_theta``).
    """
    if op not in OPERATOR_KINDS:
        raise ConfigurationError(f"unknown operator {op!r}; choose from {', '.join(OPERATOR_KINDS)}")
    if op != "c-theta" and alpha is None:
        raise ConfigurationError(f"{op} needs alpha")
    if op == "atto":
        if symbol is None:
            raise ConfigurationError("atto needs a symbol")
        mat = atto_matrix(symbol, theta, alpha, grid)
    elif op == "c-theta":
        mat = c_theta_matrix(tm_basis(theta, grid))
    elif op == "c-split":
        mat = c_split_matrix(alpha, theta, grid)
    else:
        mat = split_space(theta, alpha, grid).e2
    out = mat.to_json()
    out["metadata"] = {
        "op": op,
        "theta": theta.to_json(),
        "alpha": alpha.to_json() if alpha is not None else None,
        "symbol": symbol.to_json() if symbol is not None else None,
        "basis": "monomial" if theta.is_monomial else "takenaka-malmquist",
        "grid": grid,
    }
    return out
