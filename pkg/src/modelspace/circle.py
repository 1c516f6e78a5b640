"""Functions on the unit circle, sampled on an equispaced grid.

A :class:`CircleFunction` stores ``samples[k] = f(exp(2j*pi*k/M))``.  Fourier
coefficients are read with the FFT and are indexed by signed frequency
``n`` in ``[-M/2, M/2)``.  Everything here is immutable; every operation
returns a new object.

Two conventions are used throughout the package:

* the inner product is normalised, ``<f, g> = mean(f * conj(g))``;
* the Riesz projection ``plus`` keeps frequencies ``n >= 0`` (the Hardy
  space) and ``minus`` keeps ``n <= -1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import AliasingError, ConfigurationError, DimensionError

DEFAULT_GRID = 1024

#: relative amplitude allowed in the guard band before aliasing is reported
ALIAS_TOL = 1e-10


def check_grid(grid_size) -> int:
    """Return ``grid_size`` as an int, or raise if it is not a power of two >= 8."""
    try:
        m = int(grid_size)
    except (TypeError, ValueError):
        raise ConfigurationError(f"grid size must be an integer, got {grid_size!r}") from None
    if m != grid_size or m < 8 or m & (m - 1):
        raise ConfigurationError(f"grid size must be a power of two >= 8, got {grid_size!r}")
    return m


def grid_points(grid_size: int) -> np.ndarray:
    """The ``M`` equispaced points ``exp(2j*pi*k/M)`` on the unit circle."""
    m = check_grid(grid_size)
    return np.exp(2j * np.pi * np.arange(m) / m)


def frequencies(grid_size: int) -> np.ndarray:
    """Signed frequency attached to each FFT bin: ``0, 1, ..., M/2-1, -M/2, ..., -1``."""
    m = check_grid(grid_size)
    return np.fft.fftfreq(m, 1.0 / m).astype(int)


def guard_width(grid_size: int) -> int:
    return max(1, grid_size // 16)


def _guard_mask(grid_size: int) -> np.ndarray:
    n = frequencies(grid_size)
    g = guard_width(grid_size)
    half = grid_size // 2
    return (n >= half - g) | (n < -half + g)


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FourierWindow:
    """Coefficients of ``z**n`` for ``lo <= n <= hi``; ``coeffs[n - lo]``."""

    lo: int
    hi: int
    coeffs: np.ndarray

    def __post_init__(self):
        lo, hi = int(self.lo), int(self.hi)
        if lo > hi:
            raise ConfigurationError(f"empty window [{lo}, {hi}]")
        coeffs = np.array(self.coeffs, dtype=complex).reshape(-1)
        if coeffs.size != hi - lo + 1:
            raise DimensionError(f"window [{lo}, {hi}] needs {hi - lo + 1} coefficients, got {coeffs.size}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "coeffs", _freeze(coeffs))

    @classmethod
    def zeros(cls, lo: int, hi: int) -> "FourierWindow":
        return cls(lo, hi, np.zeros(max(hi - lo + 1, 0), dtype=complex))

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1)

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def fits(self, grid_size: int) -> bool:
        half = check_grid(grid_size) // 2
        return self.hi < half and self.lo > -half

    def coefficient(self, n: int) -> complex:
        if self.lo <= n <= self.hi:
            return complex(self.coeffs[n - self.lo])
        return 0j

    def to_function(self, grid_size: int) -> "CircleFunction":
        m = check_grid(grid_size)
        if not self.fits(m):
            raise AliasingError(f"window [{self.lo}, {self.hi}] does not fit a grid of size {m}")
        c = np.zeros(m, dtype=complex)
        c[self.indices % m] = self.coeffs
        return CircleFunction(np.fft.ifft(c) * m)


class CircleFunction:
    """Function on the unit circle given by its values on the ``M``-point grid."""

    __slots__ = ("samples",)

    def __init__(self, samples):
        s = np.array(samples, dtype=complex)
        if s.ndim != 1:
            raise DimensionError("samples must be one-dimensional")
        check_grid(s.size)
        object.__setattr__(self, "samples", _freeze(s))

    def __setattr__(self, name, value):
        raise AttributeError("CircleFunction is immutable")

    def __repr__(self):
        return f"CircleFunction(grid_size={self.grid_size})"

    @property
    def grid_size(self) -> int:
        return self.samples.size

    @classmethod
    def constant(cls, value: complex, grid_size: int = DEFAULT_GRID) -> "CircleFunction":
        return cls(np.full(check_grid(grid_size), complex(value)))

    @classmethod
    def from_coefficients(cls, coeffs: dict, grid_size: int = DEFAULT_GRID) -> "CircleFunction":
        """Trigonometric polynomial ``sum(c * z**n for n, c in coeffs.items())``."""
        lo, hi = min(coeffs), max(coeffs)
        c = np.zeros(hi - lo + 1, dtype=complex)
        for n, v in coeffs.items():
            c[n - lo] = v
        return FourierWindow(lo, hi, c).to_function(grid_size)

    def coefficients(self) -> np.ndarray:
        """All ``M`` Fourier coefficients in FFT order (see :func:`frequencies`)."""
        return np.fft.fft(self.samples) / self.grid_size

    def coefficient(self, n: int) -> complex:
        return complex(self.coefficients()[n % self.grid_size])

    def window(self, lo: int, hi: int) -> FourierWindow:
        w = FourierWindow.zeros(lo, hi)
        if not w.fits(self.grid_size):
            raise AliasingError(f"window [{lo}, {hi}] does not fit a grid of size {self.grid_size}")
        return FourierWindow(lo, hi, self.coefficients()[w.indices % self.grid_size])

    def norm(self) -> float:
        return float(np.sqrt(np.mean(np.abs(self.samples) ** 2)))

    def guard_amplitude(self) -> float:
        """Energy in the highest frequencies, relative to ``max(1, ||f||)``."""
        c = self.coefficients()
        tail = np.sqrt(np.sum(np.abs(c[_guard_mask(self.grid_size)]) ** 2))
        return float(tail / max(1.0, self.norm()))

    def check_band(self, tol: float = ALIAS_TOL) -> "CircleFunction":
        amp = self.guard_amplitude()
        if amp > tol:
            raise AliasingError(
                f"relative energy {amp:.2e} near the Nyquist frequency of a grid of size "
                f"{self.grid_size}; refine the grid"
            )
        return self

    def conj(self) -> "CircleFunction":
        return pointwise("conjugate", self)

    def __mul__(self, other):
        if isinstance(other, CircleFunction):
            return pointwise("multiply", self, other)
        if np.isscalar(other):
            return pointwise("scale", self, c=other)
        return NotImplemented

    def __rmul__(self, other):
        if np.isscalar(other):
            return pointwise("scale", self, c=other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, CircleFunction):
            return pointwise("add", self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, CircleFunction):
            return pointwise("add", self, pointwise("scale", other, c=-1))
        return NotImplemented

    def __neg__(self):
        return pointwise("scale", self, c=-1)


def sample_fn(evaluator: Callable, grid_size: int = DEFAULT_GRID) -> CircleFunction:
    """Sample ``evaluator`` on the grid.

    ``evaluator`` is called once with the full array of grid points and must
    be vectorised (numpy ufunc-style).
    """
    t = grid_points(grid_size)
    values = np.broadcast_to(np.asarray(evaluator(t), dtype=complex), t.shape)
    return CircleFunction(values)


def _same_grid(f: CircleFunction, g: CircleFunction):
    if f.grid_size != g.grid_size:
        raise DimensionError(f"grid mismatch: {f.grid_size} vs {g.grid_size}")


def pointwise(op: str, f: CircleFunction, g: CircleFunction | None = None, c: complex = 1.0) -> CircleFunction:
    """Sample-wise algebra.

    ``op`` is one of ``"multiply"`` (needs ``g``), ``"add"`` (needs ``g``),
    ``"conjugate"`` (the map J) and ``"scale"`` (by ``c``).
    """
    if op == "conjugate":
        return CircleFunction(np.conj(f.samples))
    if op == "scale":
        return CircleFunction(complex(c) * f.samples)
    if op in ("multiply", "add"):
        if g is None:
            raise DimensionError(f"{op} needs a second operand")
        _same_grid(f, g)
        if op == "multiply":
            return CircleFunction(f.samples * g.samples)
        return CircleFunction(f.samples + g.samples)
    raise ValueError(f"unknown pointwise operation {op!r}")


def riesz_project(sign: str, f: CircleFunction, *, tol: float = ALIAS_TOL) -> CircleFunction:
    """Analytic (``"plus"``, n >= 0) or co-analytic (``"minus"``, n <= -1) part of ``f``.

    Raises :class:`AliasingError` when ``f`` has non-negligible energy in
    the guard band below the Nyquist frequency, since the split between
    positive and negative frequencies is then meaningless.
    """
    if sign not in ("plus", "minus"):
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    f.check_band(tol)
    c = f.coefficients()
    n = frequencies(f.grid_size)
    keep = n >= 0 if sign == "plus" else n < 0
    return CircleFunction(np.fft.ifft(np.where(keep, c, 0)) * f.grid_size)


def inner_product(f: CircleFunction, g: CircleFunction) -> complex:
    """``<f, g> = (1/M) sum_k f(t_k) conj(g(t_k))``."""
    _same_grid(f, g)
    return complex(np.mean(f.samples * np.conj(g.samples)))
