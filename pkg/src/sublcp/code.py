"""Linear codes (generator/parity-check pairs) and subspace codes."""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    AmbientMismatch,
    ContextMismatch,
    DuplicateMember,
    NotADivisor,
    TooFewMembers,
    ZeroRank,
    ZeroShift,
)
from .field import Field, FieldElement
from .matrix import Matrix
from .poly import Polynomial
from .subspace import DEFAULT_CAP, Subspace


class LinearCode:
    """A linear ``[n, k]`` code carrying both its RREF generator matrix ``G``
    and the parity-check matrix ``H = kernel(G)`` derived once here."""

    __slots__ = ("subspace", "G", "H")

    def __init__(self, subspace: Subspace):
        self.subspace = subspace
        self.G = subspace.basis
        self.H = subspace.orthogonal().basis

    @classmethod
    def zero(cls, field: Field, n: int) -> LinearCode:
        return cls(Subspace.zero(field, n))

    @property
    def field(self) -> Field:
        return self.subspace.field

    @property
    def length(self) -> int:
        return self.subspace.n

    @property
    def dimension(self) -> int:
        return self.subspace.dim

    def codewords(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        return self.subspace.vectors(cap)

    def dual(self) -> LinearCode:
        return LinearCode(self.subspace.orthogonal())

    def __contains__(self, v) -> bool:
        return self.subspace.contains(v)

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.subspace == other.subspace

    def __hash__(self):
        return hash(self.subspace)

    def __repr__(self):
        return f"LinearCode([{self.length}, {self.dimension}] over {self.field!r})"


def linear_code_from_generator(G: Matrix) -> LinearCode:
    S = Subspace(G)
    if S.dim == 0:
        raise ZeroRank("generator matrix has rank 0")
    return LinearCode(S)


def as_subspace(x) -> Subspace:
    if isinstance(x, Subspace):
        return x
    if isinstance(x, LinearCode):
        return x.subspace
    raise TypeError(f"expected Subspace or LinearCode, got {type(x).__name__}")


def constacyclic_from_genpoly(g: Polynomial, n: int, shift: FieldElement | int) -> LinearCode:
    """The ``[n, n - deg g]`` code ``<g>`` in ``F_q[x] / (x^n - a)``.

    Generator rows are the coefficient vectors of ``g, x g, ..., x^{k-1} g``.
    """
    F = g.field
    a = F.encode(shift)
    if isinstance(shift, FieldElement):
        F.check(shift)
    if a == 0:
        raise ZeroShift("constacyclic shift must be nonzero")
    modulus = Polynomial.monomial(F, n) - Polynomial(F, [a])
    if g.is_zero() or not (modulus % g).is_zero():
        raise NotADivisor(f"{g} does not divide x^{n} - {F(a)!r}")
    return linear_code_from_generator(genpoly_matrix(g, n))


def genpoly_matrix(g: Polynomial, n: int) -> Matrix:
    """Rows ``g, x g, ..., x^{n-deg g-1} g`` as length-n coefficient vectors."""
    deg = int(g.degree)
    k = n - deg
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        rows[i, i : i + deg + 1] = g.coeffs
    return Matrix._raw(g.field, rows)


def constacyclic_shift(c: Sequence[int], a: int, field: Field) -> list[int]:
    """``(c_0, ..., c_{n-1}) -> (a c_{n-1}, c_0, ..., c_{n-2})``."""
    return [field.mul_s(a, int(c[-1]))] + [int(x) for x in c[:-1]]


class SubspaceCode:
    """An ordered collection of distinct subspaces of a common ``F_q^n``."""

    __slots__ = ("members", "field", "n")

    def __init__(self, members: Iterable[Subspace | LinearCode]):
        ms = tuple(as_subspace(m) for m in members)
        if not ms:
            raise TooFewMembers("a subspace code needs at least one member")
        field, n = ms[0].field, ms[0].n
        for m in ms:
            if m.field != field:
                raise ContextMismatch("members over different fields")
            if m.n != n:
                raise AmbientMismatch(f"member of ambient dimension {m.n} in a length-{n} code")
        seen: dict[Subspace, int] = {}
        for i, m in enumerate(ms):
            if m in seen:
                raise DuplicateMember(f"members {seen[m]} and {i} coincide")
            seen[m] = i
        self.members = ms
        self.field = field
        self.n = n

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subspace]:
        return iter(self.members)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return SubspaceCode(self.members[i])
        return self.members[i]

    def __eq__(self, other):
        return isinstance(other, SubspaceCode) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"SubspaceCode(n={self.n}, size={len(self)}, dims={self.dims})"

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(m.dim for m in self.members)

    def profile(self) -> Counter:
        """Dimension profile: multiset of member dimensions."""
        return Counter(self.dims)

    @property
    def constant_dimension(self) -> int | None:
        d = set(self.dims)
        return d.pop() if len(d) == 1 else None

    def dimension_class(self, k: int) -> list[int]:
        """Indices of the k-dimensional members."""
        return [i for i, m in enumerate(self.members) if m.dim == k]

    def min_distance(self) -> int:
        return min_subspace_distance(self)

    def dual(self) -> SubspaceCode:
        return dual_subspace_code(self)

    def __add__(self, other: SubspaceCode) -> SubspaceCode:
        """Concatenation (the union family when members are disjoint)."""
        return SubspaceCode(self.members + other.members)


def min_subspace_distance(code: SubspaceCode) -> int:
    if len(code) < 2:
        raise TooFewMembers("minimum distance needs at least two members")
    return min(U.distance(V) for U, V in itertools.combinations(code.members, 2))


def dual_subspace_code(code: SubspaceCode) -> SubspaceCode:
    return SubspaceCode(U.orthogonal() for U in code.members)


def dimension_profiles_compatible(C: SubspaceCode, D: SubspaceCode) -> bool:
    """Every dimension k of C has n - k present in D and conversely."""
    if C.n != D.n:
        raise AmbientMismatch(f"ambient dimensions {C.n} and {D.n} differ")
    return {C.n - k for k in C.dims} == set(D.dims)
