"""Constructions of LCP families: Plotkin sums, the S_lambda combination,
matrix-code lifts, and spreads of F_q^{2k}."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .code import LinearCode, SubspaceCode, as_subspace
from .errors import (
    DifferenceSingular,
    EnumerationTooLarge,
    LengthMismatch,
    NotLcpInput,
    SplitOutOfRange,
    WrongCount,
    ZeroLambda,
)
from .field import Field, FieldElement
from .lcp import check_lcp
from .matrix import Matrix
from .poly import Polynomial, find_irreducible
from .subspace import DEFAULT_CAP, Subspace, enumerate_vectors, vector_codes


class CodeMatrices(NamedTuple):
    """Generator and parity-check matrices in the displayed block form."""

    G: Matrix
    H: Matrix


def _lengths(C1: LinearCode, C2: LinearCode) -> None:
    if C1.length != C2.length:
        raise LengthMismatch(f"codes of length {C1.length} and {C2.length}")


def _code(x) -> LinearCode:
    return x if isinstance(x, LinearCode) else LinearCode(as_subspace(x))


def _zeros_like(M: Matrix) -> Matrix:
    return Matrix.zeros(M.field, M.rows, M.cols)


# ----------------------------------------------------------------------------
# Plotkin sums


def plotkin_matrices(C1, C2) -> CodeMatrices:
    """``G = [[G1, G1], [0, G2]]`` and ``H = [[H1, 0], [-H2, H2]]``."""
    C1, C2 = _code(C1), _code(C2)
    _lengths(C1, C2)
    G1, G2, H1, H2 = C1.G, C2.G, C1.H, C2.H
    G = Matrix.block([[G1, G1], [Matrix.zeros(G2.field, G2.rows, G1.cols), G2]])
    H = Matrix.block([[H1, Matrix.zeros(H1.field, H1.rows, H2.cols)], [-H2, H2]])
    return CodeMatrices(G, H)


def plotkin(C1, C2) -> LinearCode:
    """``{(u, u + v) : u in C1, v in C2}``."""
    return LinearCode(Subspace(plotkin_matrices(C1, C2).G))


def plotkin_tilde_matrices(C1, C2) -> CodeMatrices:
    """``G = [[G1, 0], [G2, G2]]`` and ``H = [[H1, -H1], [0, H2]]``."""
    C1, C2 = _code(C1), _code(C2)
    _lengths(C1, C2)
    G1, G2, H1, H2 = C1.G, C2.G, C1.H, C2.H
    G = Matrix.block([[G1, _zeros_like(G1)], [G2, G2]])
    H = Matrix.block([[H1, -H1], [Matrix.zeros(H2.field, H2.rows, H1.cols), H2]])
    return CodeMatrices(G, H)


def plotkin_tilde(C1, C2) -> LinearCode:
    """``{(u + v, v) : u in C1, v in C2}``."""
    return LinearCode(Subspace(plotkin_tilde_matrices(C1, C2).G))


def _require_lcp(C: SubspaceCode, D: SubspaceCode, label: str) -> None:
    rep = check_lcp(C, D)
    if not rep.verdict:
        v = rep.violating_pair
        raise NotLcpInput(f"{label} is not an LCP (member {v.c_index} meets member {v.d_index})")


def _product_family(build, A: SubspaceCode, B: SubspaceCode) -> SubspaceCode:
    return SubspaceCode(build(a, b).subspace for a, b in itertools.product(A, B))


def plotkin_lcp_pair(
    C1: SubspaceCode, D1: SubspaceCode, C2: SubspaceCode, D2: SubspaceCode
) -> tuple[SubspaceCode, SubspaceCode]:
    """``({P(a, b) : a in C1, b in C2}, {P(a, b) : a in D1, b in D2})`` in F_q^{2n}."""
    _require_lcp(C1, D1, "(C1, D1)")
    _require_lcp(C2, D2, "(C2, D2)")
    return _product_family(plotkin, C1, C2), _product_family(plotkin, D1, D2)


def plotkin_tilde_pair(C: SubspaceCode, D: SubspaceCode) -> tuple[SubspaceCode, SubspaceCode]:
    """``({P(a, b)}, {P~(a, b)})`` over ``a in C, b in D``."""
    _require_lcp(C, D, "(C, D)")
    return _product_family(plotkin, C, D), _product_family(plotkin_tilde, C, D)


# ----------------------------------------------------------------------------
# S_lambda


def _lambda(field: Field, lam) -> int:
    if isinstance(lam, FieldElement):
        field.check(lam)
    v = field.encode(lam)
    if v == 0:
        raise ZeroLambda("lambda must be nonzero")
    return v


def s_lambda_matrices(C1, C2, lam) -> CodeMatrices:
    """``G = [[G1, l G1], [G2, -l G2]]``, ``H = [[H1, l^-1 H1], [H2, -l^-1 H2]]``.

    ``H`` is a parity-check matrix of the code only when q is odd.
    """
    C1, C2 = _code(C1), _code(C2)
    _lengths(C1, C2)
    F = C1.field
    lv = _lambda(F, lam)
    li = F.inv_s(lv)
    G1, G2, H1, H2 = C1.G, C2.G, C1.H, C2.H
    G = Matrix.block([[G1, G1.scale(lv)], [G2, -G2.scale(lv)]])
    H = Matrix.block([[H1, H1.scale(li)], [H2, -H2.scale(li)]])
    return CodeMatrices(G, H)


def s_lambda(C1, C2, lam) -> LinearCode:
    """``{(u + v, l u - l v) : u in C1, v in C2}``."""
    return LinearCode(Subspace(s_lambda_matrices(C1, C2, lam).G))


def s_lambda_pair(
    C1: SubspaceCode, D1: SubspaceCode, C2: SubspaceCode, D2: SubspaceCode, lam
) -> tuple[SubspaceCode, SubspaceCode]:
    """``({S_l(a, b) : a in C1, b in C2}, {S_l(a, b) : a in D1, b in D2})``."""
    _require_lcp(C1, D1, "(C1, D1)")
    _require_lcp(C2, D2, "(C2, D2)")
    build = lambda a, b: s_lambda(a, b, lam)  # noqa: E731
    return _product_family(build, C1, C2), _product_family(build, D1, D2)


def s_lambda_dual_pair(C: SubspaceCode, D: SubspaceCode, lam) -> tuple[SubspaceCode, SubspaceCode]:
    """``({S_l(a, b^⊥)}, {S_l(a, b^⊥)^⊥})`` over ``a in C, b in D``; index i of
    the first family is paired with index i of the second."""
    _require_lcp(C, D, "(C, D)")
    S = [s_lambda(a, b.orthogonal(), lam).subspace for a, b in itertools.product(C, D)]
    return SubspaceCode(S), SubspaceCode(s.orthogonal() for s in S)


def s_lambda_lcd_pair(C: SubspaceCode, lam) -> tuple[SubspaceCode, SubspaceCode]:
    """``({S_l(a, b)}, {S_l(a, b)^⊥})`` over ``a, b in C``, index-paired."""
    S = [s_lambda(a, b, lam).subspace for a, b in itertools.product(C, C)]
    return SubspaceCode(S), SubspaceCode(s.orthogonal() for s in S)


S_LAMBDA_REGIMES = ("product", "dual", "lcd")


def s_lambda_hypothesis(field: Field, lam, regime: str) -> bool:
    """Whether ``lam`` meets the condition of an S_lambda LCP regime:
    any nonzero lambda for ``product``, lambda^2 = -1 for ``dual`` and
    lambda^2 = 1 for ``lcd``.  Even q is refused outright."""
    if regime not in S_LAMBDA_REGIMES:
        raise ValueError(f"unknown regime {regime!r}")
    if not field.is_odd:
        raise ValueError("the S_lambda LCP statements need odd q")
    lv = _lambda(field, lam)
    sq = field.mul_s(lv, lv)
    if regime == "dual":
        return sq == field.neg_s(1)
    if regime == "lcd":
        return sq == 1
    return True


def paired_lcp(A: SubspaceCode, B: SubspaceCode) -> bool:
    """Index-paired complementarity: ``A_i ∩ B_i = 0`` for every i."""
    if len(A) != len(B):
        raise ValueError("paired families must have equal size")
    return all((a & b).dim == 0 for a, b in zip(A, B))


# ----------------------------------------------------------------------------
# matrix-code lift


def lift_matrix_code(U: Subspace, m: int) -> Subspace:
    """All ``n x m`` matrices whose columns lie in U, flattened column-major
    into F_q^{n m} (coordinates ``j n .. j n + n - 1`` hold column j)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    U = as_subspace(U)
    F, n, k = U.field, U.n, U.dim
    if k == 0:
        return Subspace.zero(F, n * m)
    B = np.zeros((m * k, m * n), dtype=np.int64)
    for j in range(m):
        B[j * k : (j + 1) * k, j * n : (j + 1) * n] = U.basis.array
    return Subspace(Matrix._raw(F, B))


def lift_family(code: SubspaceCode, m: int) -> SubspaceCode:
    return SubspaceCode(lift_matrix_code(U, m) for U in code)


def unflatten(vec: Sequence[int], n: int, m: int) -> np.ndarray:
    """Inverse of the column-major flattening used by :func:`lift_matrix_code`."""
    return np.asarray(vec, dtype=np.int64).reshape(m, n).T


# ----------------------------------------------------------------------------
# spreads


@dataclass(frozen=True)
class Spread:
    code: SubspaceCode
    n: int
    k: int

    def __len__(self):
        return len(self.code)

    def __iter__(self):
        return iter(self.code)

    def __getitem__(self, i):
        return self.code[i]


def _graph_spread(field: Field, mats: Sequence[np.ndarray], k: int) -> Spread:
    I = np.eye(k, dtype=np.int64)
    members = [Subspace(Matrix._raw(field, np.hstack([I, M]))) for M in mats]
    members.append(Subspace(Matrix._raw(field, np.hstack([np.zeros((k, k), dtype=np.int64), I]))))
    return Spread(SubspaceCode(members), 2 * k, k)


def multiplication_matrices(field: Field, modulus: Polynomial) -> list[np.ndarray]:
    """Matrices of ``x -> a x`` on ``F_q[t]/(modulus)`` in row-vector convention,
    one per element ``a`` ordered by its code ``sum(c_i q^i)``."""
    k = int(modulus.degree)
    basis_mats = []
    # row j of M_a = coefficients of a t^j mod f; linear in a, so build M for each t^i
    for i in range(k):
        M = np.zeros((k, k), dtype=np.int64)
        for j in range(k):
            r = Polynomial.monomial(field, i + j) % modulus
            M[j, : len(r.coeffs)] = r.coeffs
        basis_mats.append(M)
    out = []
    for code in range(field.q**k):
        acc = np.zeros((k, k), dtype=np.int64)
        for i in range(k):
            c = (code // field.q**i) % field.q
            if c:
                acc = field.add(acc, field.mul(basis_mats[i], c))
        out.append(acc)
    return out


def spread_field(field: Field, k: int, modulus: Polynomial | None = None) -> Spread:
    """The Desarguesian k-spread of F_q^{2k}: ``U_a = {(x, a x)}`` for every
    ``a`` in F_{q^k}, followed by ``U_inf = {(0, x)}``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if modulus is None:
        modulus = find_irreducible(field, k)
    if modulus.field != field or modulus.degree != k or not modulus.is_monic():
        raise ValueError(f"modulus must be monic of degree {k} over {field!r}")
    return _graph_spread(field, multiplication_matrices(field, modulus), k)


def spread_matrix(mats: Sequence[Matrix]) -> Spread:
    """Spread from ``q^n`` square matrices with pairwise invertible differences."""
    if not mats:
        raise WrongCount("need at least one matrix")
    F = mats[0].field
    k = mats[0].rows
    for M in mats:
        if M.shape != (k, k) or M.field != F:
            raise ValueError("matrices must be square, same size, same field")
    if len(mats) != F.q**k:
        raise WrongCount(f"need q^n = {F.q ** k} matrices, got {len(mats)}")
    for i, j in itertools.combinations(range(len(mats)), 2):
        if not (mats[i] - mats[j]).square_invertible():
            raise DifferenceSingular(i, j)
    return _graph_spread(F, [M.array for M in mats], k)


def spread_partition(S: Spread | SubspaceCode, s: int) -> tuple[SubspaceCode, SubspaceCode]:
    """``({S_1..S_s}, {S_{s+1}..S_t})`` for ``2 <= s <= t - 2``."""
    code = S.code if isinstance(S, Spread) else S
    t = len(code)
    if not 2 <= s <= t - 2:
        raise SplitOutOfRange(f"split {s} outside [2, {t - 2}]")
    return code[:s], code[s:]


class SpreadCheck(NamedTuple):
    valid: bool
    failure: str | None
    covered: int = 0
    multiplicity: tuple[tuple[int, int], ...] = ()


def verify_spread(code: SubspaceCode, cap: int = DEFAULT_CAP, *, check_coverage: bool = True) -> SpreadCheck:
    """Check, in order: constant dimension, k | n, member count, pairwise
    trivial intersection, and exact coverage of every nonzero vector.

    ``covered`` is the number of distinct nonzero vectors hit and
    ``multiplicity`` a histogram ``((times_covered, how_many_vectors), ...)``.
    """
    code = code.code if isinstance(code, Spread) else code
    F, n = code.field, code.n
    k = code.constant_dimension
    if k is None or k == 0:
        return SpreadCheck(False, "not_constant_dim")
    if n % k:
        return SpreadCheck(False, "k_not_divisor")
    if len(code) != (F.q**n - 1) // (F.q**k - 1):
        return SpreadCheck(False, "bad_count")
    bases = [m.basis for m in code]
    for a, b in itertools.combinations(range(len(code)), 2):
        if bases[a].vstack(bases[b]).rank != 2 * k:
            return SpreadCheck(False, "overlap")
    if not check_coverage:
        return SpreadCheck(True, None)
    if F.q**n > cap:
        raise EnumerationTooLarge(f"coverage check needs q^n = {F.q ** n} <= cap {cap}")
    counts = np.zeros(F.q**n, dtype=np.int64)
    for m in code:
        np.add.at(counts, vector_codes(enumerate_vectors(m, cap)[1:], F.q), 1)
    nz = counts[1:]
    hist = tuple(sorted((int(t), int(c)) for t, c in zip(*np.unique(nz, return_counts=True))))
    covered = int(np.count_nonzero(nz))
    if not np.all(nz == 1):
        return SpreadCheck(False, "overlap" if np.any(nz > 1) else "coverage_gap", covered, hist)
    return SpreadCheck(True, None, covered, hist)
