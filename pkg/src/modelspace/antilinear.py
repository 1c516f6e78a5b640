"""Linear and antilinear maps between finite-dimensional Hilbert spaces.

Both kinds are stored as a complex matrix ``M`` in orthonormal coordinates:

* :class:`LinearMap` acts as ``v -> M @ v``;
* :class:`AntilinearMap` acts as ``v -> M @ conj(v)``.

With this representation the antilinear adjoint ``X#`` defined by
``<Xf, g> = conj(<f, X# g>)`` is the plain transpose of ``M``; the test
suite checks that correspondence against the defining pairing rather than
assuming it.

Direct sums are index concatenation: in ``H1 (+) H2`` the first summand
occupies the leading coordinates.  ``diamond`` stacks vertically (one
domain, two codomains), ``boxplus`` concatenates horizontally (two domains,
one codomain) and ``block_diag`` is the direct sum ``A (+) B`` of maps.

Maps compose with ``@`` (``A @ B`` is ``A o B``) and support ``+``, ``-``
and left multiplication by scalars.
"""
from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import DimensionError, ValidationError

#: default tolerance for the structural predicates
PREDICATE_TOL = 1e-10


class _Map:
    __slots__ = ("matrix",)
    kind = ""
    # make numpy scalars defer to __rmul__
    __array_ufunc__ = None

    def __init__(self, matrix):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2:
            raise DimensionError(f"{type(self).__name__} needs a 2-d matrix, got shape {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def _wrap(cls, m: np.ndarray):
        # internal constructor for freshly computed complex 2-d arrays (no copy)
        obj = object.__new__(cls)
        m.setflags(write=False)
        object.__setattr__(obj, "matrix", m)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __repr__(self):
        return f"{type(self).__name__}({self.rows}x{self.cols})"

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    @property
    def shape(self) -> tuple:
        return self.matrix.shape

    def _same(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.shape != self.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, _Map):
            return NotImplemented
        self._same(other)
        return type(self)._wrap(self.matrix + other.matrix)

    def __sub__(self, other):
        if not isinstance(other, _Map):
            return NotImplemented
        self._same(other)
        return type(self)._wrap(self.matrix - other.matrix)

    def __neg__(self):
        return type(self)._wrap(-self.matrix)

    def __rmul__(self, c):
        # (c X)(v) = c * X(v) for both kinds
        if np.isscalar(c):
            return type(self)._wrap(complex(c) * self.matrix)
        return NotImplemented

    def __matmul__(self, other):
        if not isinstance(other, _Map):
            return NotImplemented
        return compose(self, other)

    def norm(self) -> float:
        """Operator norm (largest singular value)."""
        return _distance(self.matrix)

    def to_json(self) -> dict:
        return map_to_json(self)


class LinearMap(_Map):
    kind = "linear"

    def __call__(self, v):
        return self.matrix @ np.asarray(v)

    def adjoint(self) -> "LinearMap":
        return LinearMap(self.matrix.conj().T)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(np.eye(n))


class AntilinearMap(_Map):
    kind = "antilinear"

    def __call__(self, v):
        return self.matrix @ np.conj(np.asarray(v))

    def sharp(self) -> "AntilinearMap":
        return AntilinearMap(self.matrix.T)

    @classmethod
    def conjugation(cls, n: int) -> "AntilinearMap":
        """Entrywise conjugation J on C^n."""
        return cls(np.eye(n))


def sharp(x: AntilinearMap) -> AntilinearMap:
    """Antilinear adjoint: the unique ``X#`` with ``<Xf, g> = conj(<f, X# g>)``."""
    if not isinstance(x, AntilinearMap):
        raise TypeError("sharp is defined for antilinear maps; use adjoint for linear ones")
    return x.sharp()


def adjoint(a: LinearMap) -> LinearMap:
    if not isinstance(a, LinearMap):
        raise TypeError("adjoint is defined for linear maps; use sharp for antilinear ones")
    return a.adjoint()


def compose(a: _Map, b: _Map) -> _Map:
    """``a o b``; the result is linear iff both or neither operand is antilinear."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot compose {a.shape} after {b.shape}")
    # an antilinear left factor conjugates whatever it receives
    right = np.conj(b.matrix) if isinstance(a, AntilinearMap) else b.matrix
    prod = np.asarray(a.matrix @ right, dtype=complex)
    if isinstance(a, AntilinearMap) == isinstance(b, AntilinearMap):
        return LinearMap._wrap(prod)
    return AntilinearMap._wrap(prod)


def _kind_of(*maps):
    kinds = {type(m) for m in maps}
    if len(kinds) != 1:
        raise TypeError("direct-sum constructions need operands of the same kind")
    return kinds.pop()


def diamond(x1: _Map, x2: _Map) -> _Map:
    """``f -> X1 f (+) X2 f``: maps sharing a domain, stacked vertically."""
    cls = _kind_of(x1, x2)
    if x1.cols != x2.cols:
        raise DimensionError(f"diamond needs a common domain, got {x1.cols} and {x2.cols}")
    return cls(np.vstack([x1.matrix, x2.matrix]))


def boxplus(y1: _Map, y2: _Map) -> _Map:
    """``f (+) g -> Y1 f + Y2 g``: maps sharing a codomain, concatenated horizontally."""
    cls = _kind_of(y1, y2)
    if y1.rows != y2.rows:
        raise DimensionError(f"boxplus needs a common codomain, got {y1.rows} and {y2.rows}")
    return cls(np.hstack([y1.matrix, y2.matrix]))


def block_diag(a: _Map, b: _Map) -> _Map:
    """Direct sum ``A (+) B`` acting on ``H1 (+) H2``."""
    cls = _kind_of(a, b)
    return cls(scipy.linalg.block_diag(a.matrix, b.matrix))


def _distance(m: np.ndarray) -> float:
    """Spectral norm (largest singular value); 0 for empty matrices."""
    return float(np.linalg.svd(m, compute_uv=False)[0]) if m.size else 0.0


def conjugation_defect(c: AntilinearMap) -> float:
    """``max(||M M^H - I||, ||M - M^T||)`` for a square antilinear map."""
    m = c.matrix
    return max(_distance(m @ m.conj().T - np.eye(c.rows)), _distance(m - m.T))


def check_conjugation(c: AntilinearMap, tol: float = PREDICATE_TOL) -> bool:
    """True iff ``c`` is a conjugation: antilinear, involutive and isometric.

    For the matrix of an antilinear map this is equivalent to being unitary
    and symmetric.
    """
    if not isinstance(c, AntilinearMap) or c.rows != c.cols:
        return False
    return conjugation_defect(c) <= tol


def asymmetry(x: AntilinearMap) -> float:
    """``||X - X#||``, the distance from antilinear self-adjointness."""
    return _distance(x.matrix - x.matrix.T)


def check_antiselfadjoint(x: AntilinearMap, tol: float = PREDICATE_TOL) -> bool:
    """True iff ``X# = X``, i.e. the matrix of ``x`` is symmetric."""
    if not isinstance(x, AntilinearMap) or x.rows != x.cols:
        return False
    return asymmetry(x) <= tol


def c_pair(c1: AntilinearMap, c2: AntilinearMap, tol: float = PREDICATE_TOL):
    """Normalised pair ``C_dia = (C1 <> C2)/sqrt2`` and ``C_box = (C1 [+] C2)/sqrt2``.

    Returns
    -------
    c_dia : AntilinearMap, ``H -> H (+) H``
    c_box : AntilinearMap, ``H (+) H -> H``
    q : LinearMap
        ``C_dia o C_box``, the orthogonal projection onto
        ``{C1 h (+) C2 h}``.
    """
    for name, c in (("C1", c1), ("C2", c2)):
        if not check_conjugation(c, tol):
            raise ValidationError(f"{name} is not a conjugation")
    if c1.shape != c2.shape:
        raise DimensionError("C1 and C2 must act on the same space")
    s = 1.0 / np.sqrt(2.0)
    c_dia = s * diamond(c1, c2)
    c_box = s * boxplus(c1, c2)
    return c_dia, c_box, c_dia @ c_box


def numerical_rank(m, tol: float = 1e-8) -> int:
    """Number of singular values above ``tol * max(1, sigma_max)``."""
    m = m.matrix if isinstance(m, _Map) else np.asarray(m)
    if m.size == 0:
        return 0
    sv = np.linalg.svd(m, compute_uv=False)
    return int(np.sum(sv > tol * max(1.0, sv[0])))


def map_to_json(x: _Map) -> dict:
    """``{"rows", "cols", "kind", "entries": [[re, im], ...]}`` with entries row-major."""
    flat = x.matrix.reshape(-1)
    return {
        "rows": x.rows,
        "cols": x.cols,
        "kind": x.kind,
        "entries": [[float(v.real), float(v.imag)] for v in flat],
    }


def map_from_json(data: dict) -> _Map:
    kinds = {"linear": LinearMap, "antilinear": AntilinearMap}
    try:
        cls = kinds[data["kind"]]
    except KeyError:
        raise ValidationError(f"unknown map kind {data.get('kind')!r}") from None
    rows, cols = int(data["rows"]), int(data["cols"])
    entries = np.array(data["entries"], dtype=float).reshape(-1, 2)
    if entries.shape[0] != rows * cols:
        raise DimensionError(f"expected {rows * cols} entries, got {entries.shape[0]}")
    return cls((entries[:, 0] + 1j * entries[:, 1]).reshape(rows, cols))
