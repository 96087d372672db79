"""Dense immutable matrices over a finite field."""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .errors import ContextMismatch, NotSquare
from .field import Field, FieldElement


class Matrix:
    """An ``rows x cols`` matrix of field element codes.

    The backing array is read-only; every operation returns a new matrix.
    Zero-row and zero-column matrices are valid (e.g. the basis of the
    zero subspace).
    """

    __slots__ = ("field", "_a")

    def __init__(self, field: Field, entries, shape: tuple[int, int] | None = None):
        if isinstance(entries, Matrix):
            entries = entries._a
        if isinstance(entries, np.ndarray) and entries.dtype == np.int64 and field.m == 1:
            a = entries % field.p
        else:
            rows = list(entries) if not isinstance(entries, np.ndarray) else entries
            if len(rows) == 0:
                a = np.zeros((0, 0 if shape is None else shape[1]), dtype=np.int64)
            else:
                a = np.array(
                    [[field.encode(x) for x in row] for row in rows], dtype=np.int64
                ).reshape(len(rows), -1)
        if a.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if shape is not None and a.shape != tuple(shape):
            if a.size == 0 and shape[0] * shape[1] == 0:
                a = a.reshape(shape)
            else:
                raise ValueError(f"entries have shape {a.shape}, expected {shape}")
        a.setflags(write=False)
        self.field = field
        self._a = a

    @classmethod
    def _raw(cls, field: Field, a: np.ndarray) -> Matrix:
        m = object.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.int64)
        a.setflags(write=False)
        m.field = field
        m._a = a
        return m

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls._raw(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> Matrix:
        return cls._raw(field, np.zeros((rows, cols), dtype=np.int64))

    # shape / access -------------------------------------------------------

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

    def __getitem__(self, idx):
        out = self._a[idx]
        if np.ndim(out) == 0:
            return FieldElement(self.field, int(out))
        return out

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self._a, other._a))
        )

    def __hash__(self):
        return hash((self.field, self.shape, self._a.tobytes()))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.tolist()})"

    # arithmetic -----------------------------------------------------------

    def _same(self, other: Matrix) -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise ContextMismatch("matrices over different fields")

    def __add__(self, other: Matrix) -> Matrix:
        self._same(other)
        return Matrix._raw(self.field, self.field.add(self._a, other._a))

    def __sub__(self, other: Matrix) -> Matrix:
        self._same(other)
        return Matrix._raw(self.field, self.field.sub(self._a, other._a))

    def __neg__(self) -> Matrix:
        return Matrix._raw(self.field, self.field.neg(self._a))

    def scale(self, c) -> Matrix:
        return Matrix._raw(self.field, self.field.mul(self._a, self.field.encode(c)))

    def __matmul__(self, other: Matrix) -> Matrix:
        self._same(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix._raw(self.field, self.field.matmul(self._a, other._a))

    @property
    def T(self) -> Matrix:
        return Matrix._raw(self.field, self._a.T)

    def vstack(self, *others: Matrix) -> Matrix:
        for o in others:
            self._same(o)
        return Matrix._raw(self.field, np.vstack([self._a] + [o._a for o in others]))

    def hstack(self, *others: Matrix) -> Matrix:
        for o in others:
            self._same(o)
        return Matrix._raw(self.field, np.hstack([self._a] + [o._a for o in others]))

    @classmethod
    def block(cls, blocks: Sequence[Sequence[Matrix]]) -> Matrix:
        field = blocks[0][0].field
        return cls._raw(field, np.block([[b._a for b in row] for row in blocks]))

    # linear algebra -------------------------------------------------------

    def rref(self) -> RrefResult:
        R, piv = self.field.rref(self._a)
        return RrefResult(Matrix._raw(self.field, R.reshape(len(piv), self.cols)), len(piv), tuple(int(c) for c in piv))

    @property
    def rank(self) -> int:
        return self.rref().rank

    def kernel(self) -> Matrix:
        return kernel(self)

    def left_kernel(self) -> Matrix:
        """RREF basis of ``{y : y M = 0}``."""
        return kernel(self.T)

    def right_invertible(self) -> bool:
        return right_invertible(self)

    def square_invertible(self) -> bool:
        return square_invertible(self)


class RrefResult(NamedTuple):
    R: Matrix
    rank: int
    pivots: tuple[int, ...]


def rref(M: Matrix) -> RrefResult:
    """Reduced row echelon form with leftmost-nonzero pivoting; zero rows dropped."""
    return M.rref()


def kernel(M: Matrix) -> Matrix:
    """RREF basis (as rows) of the null space ``{x : M x^T = 0}``."""
    F = M.field
    n = M.cols
    R, rank, pivots = M.rref()
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    Ra = R.array
    for row, f in enumerate(free):
        basis[row, f] = 1
        if rank:
            basis[row, list(pivots)] = F.neg(Ra[:, f])
    if len(free) == 0:
        return Matrix.zeros(F, 0, n)
    return Matrix._raw(F, basis).rref().R


def right_invertible(M: Matrix) -> bool:
    """True iff some X satisfies ``M X = I``, i.e. M has full row rank."""
    return M.rank == M.rows


def square_invertible(M: Matrix) -> bool:
    if M.rows != M.cols:
        raise NotSquare(f"matrix of shape {M.shape} is not square")
    return M.rank == M.rows
