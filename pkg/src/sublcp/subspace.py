"""Subspaces of F_q^n in canonical (RREF) form and their lattice operations."""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import AmbientMismatch, ContextMismatch, EnumerationTooLarge, LengthMismatch
from .field import Field
from .matrix import Matrix

DEFAULT_CAP = 2**20


class Subspace:
    """A subspace stored by its unique RREF basis.

    Two subspaces compare equal exactly when their canonical bases do, so
    instances are hashable and usable as dict keys or set members.
    """

    __slots__ = ("field", "n", "basis", "pivots")

    def __init__(self, basis: Matrix):
        R, rank, pivots = basis.rref()
        self.field = basis.field
        self.n = basis.cols
        self.basis = R
        self.pivots = pivots

    @classmethod
    def _canonical(cls, R: Matrix, pivots: tuple[int, ...]) -> Subspace:
        s = object.__new__(cls)
        s.field, s.n, s.basis, s.pivots = R.field, R.cols, R, pivots
        return s

    @classmethod
    def zero(cls, field: Field, n: int) -> Subspace:
        return cls._canonical(Matrix.zeros(field, 0, n), ())

    @classmethod
    def full(cls, field: Field, n: int) -> Subspace:
        return cls._canonical(Matrix.identity(field, n), tuple(range(n)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def _compat(self, other: Subspace) -> None:
        if not isinstance(other, Subspace):
            raise TypeError(f"expected Subspace, got {type(other).__name__}")
        if other.field != self.field:
            raise ContextMismatch("subspaces over different fields")
        if other.n != self.n:
            raise AmbientMismatch(f"ambient dimensions {self.n} and {other.n} differ")

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.n, self.basis))

    def __repr__(self):
        rows = ", ".join("".join(str(x) for x in r) for r in self.basis.tolist())
        return f"Subspace(n={self.n}, dim={self.dim}, <{rows}>)"

    # lattice ----------------------------------------------------------------

    def __add__(self, other: Subspace) -> Subspace:
        self._compat(other)
        if self.dim == 0:
            return other
        if other.dim == 0:
            return self
        return Subspace(self.basis.vstack(other.basis))

    def __and__(self, other: Subspace) -> Subspace:
        self._compat(other)
        # (U ∩ V) = (U⊥ + V⊥)⊥
        return (self.orthogonal() + other.orthogonal()).orthogonal()

    def orthogonal(self) -> Subspace:
        K = self.basis.kernel()
        return Subspace._canonical(K, _pivots_of(K))

    def distance(self, other: Subspace) -> int:
        self._compat(other)
        s = (self + other).dim
        return 2 * s - self.dim - other.dim

    def contains(self, x) -> bool:
        if isinstance(x, Subspace):
            self._compat(x)
            if x.dim > self.dim:
                return False
            return (self + x).dim == self.dim
        v = np.asarray([self.field.encode(c) for c in x], dtype=np.int64)
        if v.shape != (self.n,):
            raise AmbientMismatch(f"vector of length {v.shape[0]} in ambient dimension {self.n}")
        if self.dim == 0:
            return not v.any()
        # reduce against the RREF basis; the pivot entries are the coefficients
        proj = self.field.matmul(v[None, self.pivots], self.basis.array)[0]
        return not self.field.sub(v, proj).any()

    __contains__ = contains

    def issubset(self, other: Subspace) -> bool:
        return other.contains(self)

    def vectors(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        return enumerate_vectors(self, cap)

    @property
    def generator(self) -> Matrix:
        return self.basis

    @property
    def parity_check(self) -> Matrix:
        return self.orthogonal().basis


def _pivots_of(R: Matrix) -> tuple[int, ...]:
    a = R.array
    return tuple(int(np.flatnonzero(row)[0]) for row in a)


def _vector_array(field: Field, vectors: Iterable[Sequence], n: int) -> np.ndarray:
    rows = []
    for v in vectors:
        v = [field.encode(c) for c in v]
        if len(v) != n:
            raise LengthMismatch(f"vector of length {len(v)} in ambient dimension {n}")
        rows.append(v)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def span(vectors: Iterable[Sequence], n: int, field: Field) -> Subspace:
    """Canonical subspace spanned by the given length-n vectors."""
    a = _vector_array(field, vectors, n)
    if a.shape[0] == 0:
        return Subspace.zero(field, n)
    return Subspace(Matrix._raw(field, a))


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    return U + V


def intersect(U: Subspace, V: Subspace) -> Subspace:
    return U & V


def orthogonal(U: Subspace) -> Subspace:
    return U.orthogonal()


def subspace_distance(U: Subspace, V: Subspace) -> int:
    """``dim(U + V) - dim(U ∩ V)``."""
    return U.distance(V)


def contains(U: Subspace, x) -> bool:
    return U.contains(x)


def coefficient_tuples(q: int, d: int) -> np.ndarray:
    """All of ``range(q)**d`` in lexicographic order, as a ``(q**d, d)`` array."""
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((q,) * d, dtype=np.int64)
    return grids.reshape(d, -1).T.copy()


def enumerate_vectors(U: Subspace, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Every vector of U exactly once, ordered lexicographically by the
    coefficient tuple over the canonical basis (equivalently, by the vector
    itself, since the basis is in RREF)."""
    size = U.field.q**U.dim
    if size > cap:
        raise EnumerationTooLarge(f"q^dim = {size} exceeds cap {cap}")
    coeffs = coefficient_tuples(U.field.q, U.dim)
    if U.dim == 0:
        return np.zeros((1, U.n), dtype=np.int64)
    return U.field.matmul(coeffs, U.basis.array)


def all_vectors(field: Field, n: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    return enumerate_vectors(Subspace.full(field, n), cap)


def projective_points(field: Field, n: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    """One representative per 1-dimensional subspace: the nonzero vectors whose
    first nonzero entry is 1, in lexicographic order."""
    vecs = all_vectors(field, n, cap)[1:]
    lead = vecs[np.arange(len(vecs)), np.argmax(vecs != 0, axis=1)]
    return vecs[lead == 1]


def vector_codes(vectors: np.ndarray, q: int) -> np.ndarray:
    """Integer code ``sum(v_i q^(n-1-i))`` of each row (lexicographic rank)."""
    n = vectors.shape[1]
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return vectors @ weights


def random_subspace(field: Field, n: int, dim: int, rng: np.random.Generator) -> Subspace:
    """Uniform-ish random subspace of exactly the requested dimension."""
    if not 0 <= dim <= n:
        raise ValueError(f"dimension {dim} outside [0, {n}]")
    if dim == 0:
        return Subspace.zero(field, n)
    for _ in itertools.count():
        a = rng.integers(0, field.q, size=(dim, n), dtype=np.int64)
        S = Subspace(Matrix._raw(field, a))
        if S.dim == dim:
            return S
    raise AssertionError("unreachable")
