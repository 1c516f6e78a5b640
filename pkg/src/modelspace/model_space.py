"""Finite Blaschke products, Laurent symbols and model spaces ``K_theta``.

For a finite Blaschke product ``theta`` of degree ``N`` the model space
``K_theta = H^2 (-) theta H^2`` has dimension ``N``; it is realised here by
the Takenaka-Malmquist orthonormal basis built from the zeros of ``theta``.
When ``theta = c z^N`` that basis is ``1, z, ..., z^(N-1)`` and every
operator in :mod:`modelspace.operators` takes an exact index-arithmetic
path instead of quadrature.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .antilinear import LinearMap
from .circle import (
    DEFAULT_GRID,
    CircleFunction,
    check_grid,
    grid_points,
    riesz_project,
)
from .errors import AliasingError, DimensionError, DomainError, EmptyBasisError, ValidationError

#: tolerance for matching zeros when testing divisibility
ZERO_MATCH_TOL = 1e-12
UNIMODULAR_TOL = 1e-12


def _zero_key(a: complex):
    return (round(abs(a), 14), round(cmath.phase(a), 14) if a != 0 else 0.0)


def _pair(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def _unpair(p) -> complex:
    re, im = p
    return complex(float(re), float(im))


@dataclass(frozen=True)
class BlaschkeProduct:
    """``c * prod((z - a) / (1 - conj(a) z))`` over a multiset of zeros in the disk.

    Zeros are stored sorted by modulus, then argument, so equal products
    compare equal and bases built from them are deterministic.
    """

    zeros: tuple = ()
    constant: complex = 1.0

    def __post_init__(self):
        zeros = tuple(sorted((complex(a) for a in self.zeros), key=_zero_key))
        for a in zeros:
            if not abs(a) < 1:
                raise DomainError(f"zero {a} is not inside the unit disk")
        c = complex(self.constant)
        if abs(abs(c) - 1) > UNIMODULAR_TOL:
            raise DomainError(f"constant {c} is not unimodular")
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "constant", c)

    @classmethod
    def zpow(cls, n: int, constant: complex = 1.0) -> "BlaschkeProduct":
        """``constant * z**n``."""
        if n < 0:
            raise DomainError("degree must be non-negative")
        return cls((0j,) * n, constant)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    @cached_property
    def is_monomial(self) -> bool:
        return all(a == 0 for a in self.zeros)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.constant, dtype=complex)
        for a in self.zeros:
            out = out * (z - a) / (1 - np.conj(a) * z)
        return out if out.ndim else complex(out)

    def __mul__(self, other):
        if not isinstance(other, BlaschkeProduct):
            return NotImplemented
        return BlaschkeProduct(self.zeros + other.zeros, self.constant * other.constant)

    def sample(self, grid_size: int = DEFAULT_GRID) -> CircleFunction:
        return CircleFunction(self(grid_points(grid_size)))

    def symbol(self, grid_size: int = DEFAULT_GRID):
        """As a multiplier: a :class:`LaurentSymbol` when monomial, else sampled."""
        if self.is_monomial:
            return LaurentSymbol.monomial(self.degree, self.constant)
        return self.sample(grid_size)

    def conj_symbol(self, grid_size: int = DEFAULT_GRID):
        """``conj(theta)`` on the circle, i.e. ``1/theta``."""
        return self.symbol(grid_size).conj()

    def equivalent(self, other: "BlaschkeProduct", tol: float = ZERO_MATCH_TOL) -> bool:
        """Equal up to a unimodular constant."""
        if self.degree != other.degree:
            return False
        q = blaschke_divide(other, self, tol)
        return q is not None and q.degree == 0

    def to_json(self) -> dict:
        return {"zeros": [_pair(a) for a in self.zeros], "constant": _pair(self.constant)}

    @classmethod
    def from_json(cls, data: dict) -> "BlaschkeProduct":
        try:
            zeros = [_unpair(p) for p in data["zeros"]]
            constant = _unpair(data.get("constant", [1.0, 0.0]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed Blaschke product: {exc}") from None
        return cls(tuple(zeros), constant)

    def label(self) -> str:
        if self.is_monomial:
            base = "1" if self.degree == 0 else ("z" if self.degree == 1 else f"z^{self.degree}")
            return base if self.constant == 1 else f"({self.constant:.3g})*{base}"
        return f"B[{', '.join(f'{a:.3g}' for a in self.zeros)}]"


def blaschke_eval(b: BlaschkeProduct, z):
    return b(z)


def blaschke_divide(alpha: BlaschkeProduct, theta: BlaschkeProduct, tol: float = ZERO_MATCH_TOL):
    """``theta / alpha`` if ``alpha`` divides ``theta``, else ``None``.

    Divisibility is multiset containment of zeros, each zero of ``alpha``
    matched to an unused zero of ``theta`` within ``tol``.
    """
    remaining = list(theta.zeros)
    for a in alpha.zeros:
        for i, b in enumerate(remaining):
            if abs(a - b) <= tol:
                del remaining[i]
                break
        else:
            return None
    return BlaschkeProduct(tuple(remaining), theta.constant / alpha.constant)


def divides(alpha: BlaschkeProduct, theta: BlaschkeProduct) -> bool:
    return blaschke_divide(alpha, theta) is not None


@dataclass(frozen=True, eq=False)
class LaurentSymbol:
    """Finite Laurent polynomial ``sum(coeffs[n - lo] * z**n)``.

    Exact zero coefficients at either end are trimmed; the zero symbol has
    no coefficients.
    """

    lo: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).reshape(-1)
        nz = np.flatnonzero(c)
        if nz.size == 0:
            lo, c = 0, c[:0]
        else:
            lo, c = int(self.lo) + int(nz[0]), c[nz[0]: nz[-1] + 1]
        c.setflags(write=False)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_dict(cls, coeffs: dict) -> "LaurentSymbol":
        if not coeffs:
            return cls(0, [])
        lo, hi = min(coeffs), max(coeffs)
        c = np.zeros(hi - lo + 1, dtype=complex)
        for n, v in coeffs.items():
            c[n - lo] += v
        return cls(lo, c)

    @classmethod
    def monomial(cls, n: int, c: complex = 1.0) -> "LaurentSymbol":
        return cls(n, [c])

    @property
    def hi(self) -> int:
        return self.lo + self.coeffs.size - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    def coefficient(self, n):
        """Coefficient of ``z**n``; ``n`` may be an integer array."""
        k = np.asarray(n) - self.lo
        inside = (k >= 0) & (k < self.coeffs.size)
        out = np.zeros(k.shape, dtype=complex)
        out[inside] = self.coeffs[k[inside]]
        return out if out.ndim else complex(out)

    def to_dict(self) -> dict:
        return {self.lo + k: complex(v) for k, v in enumerate(self.coeffs) if v != 0}

    def __eq__(self, other):
        if not isinstance(other, LaurentSymbol):
            return NotImplemented
        return self.lo == other.lo and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.lo, self.coeffs.tobytes()))

    def conj(self) -> "LaurentSymbol":
        """Boundary values ``conj(phi(t))``: ``z**n`` becomes ``z**-n``."""
        if self.is_zero:
            return self
        return LaurentSymbol(-self.hi, np.conj(self.coeffs[::-1]))

    def __mul__(self, other):
        if isinstance(other, LaurentSymbol):
            if self.is_zero or other.is_zero:
                return LaurentSymbol(0, [])
            return LaurentSymbol(self.lo + other.lo, np.convolve(self.coeffs, other.coeffs))
        if isinstance(other, CircleFunction):
            return self.sample(other.grid_size) * other
        if np.isscalar(other):
            return LaurentSymbol(self.lo, complex(other) * self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, LaurentSymbol):
            return NotImplemented
        d = self.to_dict()
        for n, v in other.to_dict().items():
            d[n] = d.get(n, 0) + v
        return LaurentSymbol.from_dict(d)

    def __neg__(self):
        return LaurentSymbol(self.lo, -self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, LaurentSymbol):
            return NotImplemented
        return self + (-other)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        for k, c in enumerate(self.coeffs):
            out = out + c * z ** (self.lo + k)
        return out if out.ndim else complex(out)

    def sample(self, grid_size: int = DEFAULT_GRID) -> CircleFunction:
        m = check_grid(grid_size)
        if not self.is_zero and (self.hi >= m // 2 or self.lo <= -m // 2):
            raise AliasingError(f"symbol band [{self.lo}, {self.hi}] does not fit a grid of size {m}")
        return CircleFunction(self(grid_points(m)))

    def to_json(self) -> dict:
        return {"lo": self.lo, "coeffs": [_pair(v) for v in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentSymbol":
        return cls(int(data["lo"]), [_unpair(p) for p in data["coeffs"]])


def tm_values(zeros, z) -> np.ndarray:
    """Takenaka-Malmquist functions ``e_1..e_N`` evaluated at ``z``; shape ``(N, len(z))``.

    ``e_k(z) = sqrt(1-|a_k|^2) / (1 - conj(a_k) z) * prod_{j<k} (z - a_j)/(1 - conj(a_j) z)``
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    out = np.empty((len(zeros), z.size), dtype=complex)
    prefix = np.ones_like(z)
    for k, a in enumerate(zeros):
        denom = 1 - np.conj(a) * z
        out[k] = np.sqrt(1 - abs(a) ** 2) / denom * prefix
        prefix = prefix * (z - a) / denom
    return out


@dataclass(frozen=True, eq=False)
class ModelBasis:
    """Orthonormal basis ``e_1..e_N`` of ``K_theta`` sampled on a grid."""

    parent: BlaschkeProduct
    functions: tuple
    grid_size: int

    @property
    def dim(self) -> int:
        return len(self.functions)

    @property
    def is_monomial(self) -> bool:
        return self.parent.is_monomial

    @cached_property
    def samples(self) -> np.ndarray:
        """``M x N`` array whose column ``k`` holds the samples of ``e_k``."""
        if not self.functions:
            return np.zeros((self.grid_size, 0), dtype=complex)
        s = np.stack([f.samples for f in self.functions], axis=1)
        s.setflags(write=False)
        return s

    def gram(self) -> np.ndarray:
        """``G[i, j] = <e_j, e_i>`` by quadrature."""
        s = self.samples
        return s.conj().T @ s / self.grid_size

    def coordinates(self, f: CircleFunction) -> np.ndarray:
        """``<f, e_i>``; equals ``P_theta f`` in coordinates since the basis is orthonormal."""
        if f.grid_size != self.grid_size:
            raise DimensionError(f"grid mismatch: {f.grid_size} vs {self.grid_size}")
        return self.samples.conj().T @ f.samples / self.grid_size

    def reconstruct(self, coords) -> CircleFunction:
        coords = np.asarray(coords, dtype=complex)
        if coords.shape != (self.dim,):
            raise DimensionError(f"need {self.dim} coordinates, got shape {coords.shape}")
        return CircleFunction(self.samples @ coords)

    def values_at(self, z) -> np.ndarray:
        """Basis functions evaluated at points of the closed disk, shape ``(N, len(z))``."""
        return tm_values(self.parent.zeros, z)

    def evaluate(self, coords, z):
        """Value at ``z`` of the element of ``K_theta`` with coordinates ``coords``."""
        vals = np.asarray(coords, dtype=complex) @ self.values_at(z)
        return vals if np.ndim(z) else complex(vals[0])


def tm_basis(theta: BlaschkeProduct, grid_size: int = DEFAULT_GRID) -> ModelBasis:
    """Takenaka-Malmquist basis of ``K_theta`` in the stored zero order."""
    if theta.degree == 0:
        raise EmptyBasisError("K_theta is trivial for a constant inner function")
    return _basis(theta, grid_size)


def _basis(theta: BlaschkeProduct, grid_size: int) -> ModelBasis:
    # also used for the zero-dimensional K_1 that appears when alpha = theta
    m = check_grid(grid_size)
    vals = tm_values(theta.zeros, grid_points(m))
    return ModelBasis(theta, tuple(CircleFunction(v) for v in vals), m)


def model_project(f: CircleFunction, basis: ModelBasis) -> np.ndarray:
    """Coordinates of ``P_theta f`` computed as ``theta P^- conj(theta) P f``."""
    theta = basis.parent.sample(basis.grid_size)
    inner = riesz_project("minus", theta.conj() * riesz_project("plus", f))
    return basis.coordinates(theta * inner)


def kernels(theta: BlaschkeProduct, lam: complex, grid_size: int = DEFAULT_GRID):
    """Reproducing kernel ``k_lam`` of ``K_theta`` and its conjugate kernel.

    ``k_lam(z) = (1 - conj(theta(lam)) theta(z)) / (1 - conj(lam) z)`` and
    ``k~_lam(z) = (theta(z) - theta(lam)) / (z - lam)``.
    """
    lam = complex(lam)
    if not abs(lam) < 1:
        raise DomainError(f"|lambda| must be < 1, got {abs(lam)}")
    t = grid_points(grid_size)
    th, th_lam = theta(t), theta(lam)
    k = (1 - np.conj(th_lam) * th) / (1 - np.conj(lam) * t)
    k_tilde = (th - th_lam) / (t - lam)
    return CircleFunction(k), CircleFunction(k_tilde)


def inner_mult_embed(eta: BlaschkeProduct, source: ModelBasis, target: ModelBasis) -> LinearMap:
    """Matrix of ``f -> eta f`` from ``K_delta`` into ``K_theta`` coordinates.

    Requires ``eta * delta`` to divide ``theta`` (``delta = source.parent``),
    in which case the map is an isometry.
    """
    if not divides(eta * source.parent, target.parent):
        raise DomainError(f"{eta.label()} * {source.parent.label()} does not divide {target.parent.label()}")
    if eta.is_monomial and source.is_monomial and target.is_monomial:
        m = np.zeros((target.dim, source.dim), dtype=complex)
        j = np.arange(source.dim)
        m[j + eta.degree, j] = eta.constant
        return LinearMap(m)
    if source.grid_size != target.grid_size:
        raise DimensionError("source and target bases use different grids")
    e = eta(grid_points(source.grid_size))
    return LinearMap(target.samples.conj().T @ (e[:, None] * source.samples) / source.grid_size)
