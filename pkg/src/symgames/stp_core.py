"""Exact-rational matrix kernel: semi-tensor product, Kronecker and
Khatri-Rao products, swap matrices and logical matrices.

Dense matrices are numpy object arrays of ``fractions.Fraction``; logical
matrices are kept in column-index form ``delta_m[i_1, ..., i_r]`` and only
densified on request.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "RationalMatrix",
    "LogicalMatrix",
    "to_fraction",
    "stp",
    "kron",
    "swap_matrix",
    "khatri_rao",
    "logical_to_dense",
    "dense_to_logical",
    "delta",
    "hstack",
    "vstack",
    "block_diag",
]


def to_fraction(x) -> Fraction:
    """Convert an int, Fraction or numeric string (``"3/4"``, ``"-1.25"``) to a Fraction.

    Floats are rejected: they would silently smuggle binary rounding into an
    exact kernel.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} {x!r} to an exact rational")


_to_fraction_v = np.frompyfunc(to_fraction, 1, 1)


class RationalMatrix:
    """Immutable dense matrix over Q."""

    __slots__ = ("_a",)

    def __init__(self, data):
        if isinstance(data, RationalMatrix):
            self._a = data._a
            return
        arr = np.array(data, dtype=object)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise ValueError("a matrix needs exactly two dimensions")
        arr = _to_fraction_v(arr).astype(object) if arr.size else arr
        arr.flags.writeable = False
        self._a = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "RationalMatrix":
        # trusted path: arr already holds Fractions
        obj = cls.__new__(cls)
        arr = np.asarray(arr, dtype=object)
        arr.flags.writeable = False
        obj._a = arr
        return obj

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls._wrap(_filled((n, n), 0) + _eye(n))

    @classmethod
    def zeros(cls, m: int, n: int) -> "RationalMatrix":
        return cls._wrap(_filled((m, n), 0))

    @classmethod
    def ones(cls, m: int, n: int) -> "RationalMatrix":
        return cls._wrap(_filled((m, n), 1))

    @classmethod
    def column(cls, values: Iterable) -> "RationalMatrix":
        return cls([[v] for v in values])

    @classmethod
    def row(cls, values: Iterable) -> "RationalMatrix":
        return cls([list(values)])

    @classmethod
    def diag(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        arr = _filled((n, n), 0)
        for i, v in enumerate(values):
            arr[i, i] = to_fraction(v)
        return cls._wrap(arr)

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix._wrap(self._a.T.copy())

    def __getitem__(self, key):
        # integer pairs give an entry; anything else stays two-dimensional
        if not isinstance(key, tuple):
            key = (key, slice(None))
        if all(isinstance(k, (int, np.integer)) for k in key):
            return self._a[key]
        key = tuple(slice(k, k + 1) if isinstance(k, (int, np.integer)) else k for k in key)
        return RationalMatrix._wrap(self._a[key].copy())

    def tolist(self) -> list[list[Fraction]]:
        return self._a.tolist()

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(self._a.ravel().tolist())

    def col(self, j: int) -> "RationalMatrix":
        return RationalMatrix._wrap(self._a[:, j : j + 1].copy())

    def __matmul__(self, other):
        if isinstance(other, LogicalMatrix):
            return self @ other.to_dense()
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"inner dimensions differ: {self.shape} @ {other.shape}")
        if self.cols == 0:
            return RationalMatrix.zeros(self.rows, other.cols)
        return RationalMatrix._wrap(self._a.dot(other._a))

    def __rmatmul__(self, other):
        if isinstance(other, LogicalMatrix):
            return other.to_dense() @ self
        return NotImplemented

    def __add__(self, other):
        other = _as_dense(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} + {other.shape}")
        return RationalMatrix._wrap(self._a + other._a)

    def __sub__(self, other):
        other = _as_dense(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} - {other.shape}")
        return RationalMatrix._wrap(self._a - other._a)

    def __neg__(self):
        return RationalMatrix._wrap(-self._a)

    def __mul__(self, scalar):
        if isinstance(scalar, (RationalMatrix, LogicalMatrix)):
            return NotImplemented
        return RationalMatrix._wrap(self._a * to_fraction(scalar))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LogicalMatrix):
            other = other.to_dense()
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._a == other._a))

    def __hash__(self):
        return hash((self.shape, self.flat()))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self._a.tolist())
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


@dataclass(frozen=True)
class LogicalMatrix:
    """A 0/1 matrix with exactly one 1 per column, stored as ``delta_m[i_1, ..., i_r]``.

    ``indices`` are 1-based row positions, one per column.
    """

    rows: int
    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if self.rows < 1:
            raise ValueError("a logical matrix needs at least one row")
        for i in self.indices:
            if not 1 <= i <= self.rows:
                raise ValueError(f"column index {i} outside 1..{self.rows}")

    @classmethod
    def identity(cls, n: int) -> "LogicalMatrix":
        return cls(n, tuple(range(1, n + 1)))

    @property
    def cols(self) -> int:
        return len(self.indices)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_permutation(self) -> bool:
        return self.rows == self.cols and len(set(self.indices)) == self.rows

    def to_dense(self) -> RationalMatrix:
        arr = _filled((self.rows, self.cols), 0)
        one = Fraction(1)
        for j, i in enumerate(self.indices):
            arr[i - 1, j] = one
        return RationalMatrix._wrap(arr)

    def transpose(self) -> "LogicalMatrix":
        """Transpose; only defined (as a logical matrix) for permutation matrices."""
        if not self.is_permutation():
            raise ValueError("transpose of a non-permutation logical matrix is not logical")
        inv = [0] * self.rows
        for j, i in enumerate(self.indices, start=1):
            inv[i - 1] = j
        return LogicalMatrix(self.rows, tuple(inv))

    @property
    def T(self) -> "LogicalMatrix":
        return self.transpose()

    def kron(self, other: "LogicalMatrix") -> "LogicalMatrix":
        p = other.rows
        return LogicalMatrix(
            self.rows * p,
            tuple((a - 1) * p + b for a in self.indices for b in other.indices),
        )

    def act_on_row(self, v: Sequence) -> tuple:
        """Row vector times this matrix: ``(v L)[j] = v[L.indices[j]]``."""
        if len(v) != self.rows:
            raise ValueError(f"row vector of length {len(v)} against {self.rows} rows")
        return tuple(v[i - 1] for i in self.indices)

    def act_on_column(self, x: Sequence) -> tuple:
        """This matrix times a column vector."""
        if len(x) != self.cols:
            raise ValueError(f"column vector of length {len(x)} against {self.cols} columns")
        out = [Fraction(0)] * self.rows
        for j, i in enumerate(self.indices):
            out[i - 1] += x[j]
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, LogicalMatrix):
            if self.cols != other.rows:
                raise ValueError(f"inner dimensions differ: {self.shape} @ {other.shape}")
            return LogicalMatrix(self.rows, tuple(self.indices[j - 1] for j in other.indices))
        if isinstance(other, RationalMatrix):
            return self.to_dense() @ other
        return NotImplemented

    def __str__(self):
        return f"delta_{self.rows}[{','.join(map(str, self.indices))}]"


def delta(m: int, indices: Iterable[int]) -> LogicalMatrix:
    """``delta_m[i_1, ..., i_r]``."""
    return LogicalMatrix(m, tuple(indices))


Matrix = Union[RationalMatrix, LogicalMatrix]


def _filled(shape, value) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(Fraction(value))
    return arr


def _eye(n: int) -> np.ndarray:
    arr = _filled((n, n), 0)
    for i in range(n):
        arr[i, i] = Fraction(1)
    return arr


def _as_dense(m) -> RationalMatrix:
    if isinstance(m, LogicalMatrix):
        return m.to_dense()
    if isinstance(m, RationalMatrix):
        return m
    return RationalMatrix(m)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; stays logical when both factors are logical."""
    if isinstance(a, LogicalMatrix) and isinstance(b, LogicalMatrix):
        return a.kron(b)
    a, b = _as_dense(a), _as_dense(b)
    return RationalMatrix._wrap(np.kron(a.array, b.array))


def stp(a: Matrix, b: Matrix) -> Matrix:
    """Left semi-tensor product ``(a (x) I_{t/n}) (b (x) I_{t/p})`` with ``t = lcm(n, p)``."""
    n, p = a.cols, b.rows
    t = math.lcm(n, p)
    if isinstance(a, LogicalMatrix) and isinstance(b, LogicalMatrix):
        return kron(a, LogicalMatrix.identity(t // n)) @ kron(b, LogicalMatrix.identity(t // p))
    left = kron(_as_dense(a), RationalMatrix.identity(t // n)) if t != n else _as_dense(a)
    right = kron(_as_dense(b), RationalMatrix.identity(t // p)) if t != p else _as_dense(b)
    return left @ right


def stp_chain(*factors: Matrix) -> Matrix:
    """Left-to-right STP of several factors."""
    out = factors[0]
    for f in factors[1:]:
        out = stp(out, f)
    return out


def swap_matrix(m: int, n: int) -> LogicalMatrix:
    """``W_[m,n]``: maps ``x (x) y`` to ``y (x) x`` for ``x`` in Q^m, ``y`` in Q^n."""
    if m < 1 or n < 1:
        raise ValueError("swap matrix dimensions must be positive")
    return LogicalMatrix(m * n, tuple((b - 1) * m + a for a in range(1, m + 1) for b in range(1, n + 1)))


def khatri_rao(a: Matrix, b: Matrix) -> Matrix:
    """Column-wise STP of two matrices with equal column counts."""
    if a.cols != b.cols:
        raise ValueError(f"Khatri-Rao product needs equal column counts, got {a.cols} and {b.cols}")
    if isinstance(a, LogicalMatrix) and isinstance(b, LogicalMatrix):
        q = b.rows
        return LogicalMatrix(a.rows * q, tuple((i - 1) * q + j for i, j in zip(a.indices, b.indices)))
    a, b = _as_dense(a), _as_dense(b)
    p, q, s = a.rows, b.rows, a.cols
    out = np.empty((p * q, s), dtype=object)
    for j in range(s):
        out[:, j] = np.kron(a.array[:, j], b.array[:, j])
    return RationalMatrix._wrap(out)


def logical_to_dense(lm: LogicalMatrix) -> RationalMatrix:
    return lm.to_dense()


def dense_to_logical(a: RationalMatrix) -> LogicalMatrix:
    """Inverse of :func:`logical_to_dense`; raises ``ValueError`` on non-logical input."""
    a = _as_dense(a)
    indices = []
    for j in range(a.cols):
        column = a.array[:, j]
        nz = [i for i, x in enumerate(column) if x != 0]
        if len(nz) != 1 or column[nz[0]] != 1:
            raise ValueError(f"column {j + 1} is not a unit vector")
        indices.append(nz[0] + 1)
    return LogicalMatrix(a.rows, tuple(indices))


def hstack(blocks: Sequence[Matrix]) -> RationalMatrix:
    return RationalMatrix._wrap(np.hstack([_as_dense(b).array for b in blocks]))


def vstack(blocks: Sequence[Matrix]) -> RationalMatrix:
    return RationalMatrix._wrap(np.vstack([_as_dense(b).array for b in blocks]))


def block_diag(blocks: Sequence[Matrix]) -> RationalMatrix:
    blocks = [_as_dense(b) for b in blocks]
    m = sum(b.rows for b in blocks)
    n = sum(b.cols for b in blocks)
    out = _filled((m, n), 0)
    r = c = 0
    for b in blocks:
        out[r : r + b.rows, c : c + b.cols] = b.array
        r += b.rows
        c += b.cols
    return RationalMatrix._wrap(out)
