"""Linear-complementary-pair checks for families of subspaces.

Four equivalent criteria are available for a pair of families ``(C, D)``:

``pairwise``
    every ``C_i ∩ D_j`` is the zero space;
``distance``
    ``d_s(C_i, D_j) = dim C_i + dim D_j`` for every pair;
``right_inv``
    ``G_{C_i} H_{D_j}^T`` has full row rank for every pair;
``stacked``
    the square matrix ``[G_{C_i}; G_{D_j}]`` is invertible (only defined
    when every ``dim C_i + dim D_j = n``).

Each failing pair is reported with a witness: a nonzero vector that lies
in both subspaces.  The witness is derived from the criterion's own
matrix (a left-kernel vector) and re-verified before it is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .code import SubspaceCode, dimension_profiles_compatible
from .errors import (
    AmbientMismatch,
    ContextMismatch,
    NotConstantDimension,
    NotLcp,
    SizeMismatch,
    StackedNotSquare,
)
from .matrix import Matrix
from .subspace import Subspace

CRITERIA = ("pairwise", "distance", "right_inv", "stacked")


@dataclass(frozen=True)
class Violation:
    c_index: int
    d_index: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class LcpReport:
    verdict: bool
    criterion: str
    violating_pair: Violation | None
    profile_ok: bool
    pairs_checked: int
    violations: tuple[Violation, ...] = ()
    warnings: tuple[str, ...] = field(default=())

    def __bool__(self):
        return self.verdict


# ----------------------------------------------------------------------------
# per-pair tests: return None when the pair is complementary, else a witness


def _witness_pairwise(C: Subspace, D: Subspace, H_D: Matrix) -> np.ndarray | None:
    inter = C & D
    return inter.basis.array[0] if inter.dim else None


def _witness_distance(C: Subspace, D: Subspace, H_D: Matrix) -> np.ndarray | None:
    if C.distance(D) == C.dim + D.dim:
        return None
    inter = C & D
    return inter.basis.array[0]


def _witness_right_inv(C: Subspace, D: Subspace, H_D: Matrix) -> np.ndarray | None:
    M = C.basis @ H_D.T
    if M.right_invertible():
        return None
    # delta G_C H_D^T = 0 puts delta G_C in D
    delta = M.left_kernel().array[0]
    return C.field.matmul(delta[None, :], C.basis.array)[0]


def _witness_stacked(C: Subspace, D: Subspace, H_D: Matrix) -> np.ndarray | None:
    S = C.basis.vstack(D.basis)
    if S.square_invertible():
        return None
    # (alpha, beta) S = 0 gives alpha G_C = -beta G_D in C ∩ D
    y = S.left_kernel().array[0]
    return C.field.matmul(y[None, : C.dim], C.basis.array)[0]


_TESTS: dict[str, Callable] = {
    "pairwise": _witness_pairwise,
    "distance": _witness_distance,
    "right_inv": _witness_right_inv,
    "stacked": _witness_stacked,
}


def normalize_criterion(name: str) -> str:
    key = name.replace("-", "_")
    if key not in _TESTS:
        raise ValueError(f"unknown criterion {name!r}; choose from {', '.join(CRITERIA)}")
    return key


def _check_compatible(C: SubspaceCode, D: SubspaceCode) -> None:
    if C.field != D.field:
        raise ContextMismatch("families over different fields")
    if C.n != D.n:
        raise AmbientMismatch(f"ambient dimensions {C.n} and {D.n} differ")


def check_lcp(
    C: SubspaceCode, D: SubspaceCode, criterion: str = "pairwise", *, full_scan: bool = False
) -> LcpReport:
    """Decide whether ``(C, D)`` is a linear complementary pair.

    Pairs are visited row-major (all ``D_j`` for ``C_0``, then ``C_1`` ...)
    and the scan stops at the first failure unless ``full_scan`` is set.
    """
    _check_compatible(C, D)
    criterion = normalize_criterion(criterion)
    n = C.n
    if criterion == "stacked":
        bad = [(i, j) for i, c in enumerate(C) for j, d in enumerate(D) if c.dim + d.dim != n]
        if bad:
            i, j = bad[0]
            raise StackedNotSquare(f"dim C_{i} + dim D_{j} = {C[i].dim + D[j].dim} != {n}")
    warnings = []
    if len(C) < 2 or len(D) < 2:
        warnings.append("family of size 1: subspace codes normally have at least two members")
    test = _TESTS[criterion]
    H = [d.orthogonal().basis for d in D] if criterion == "right_inv" else [None] * len(D)
    violations = []
    checked = 0
    for (i, c), (j, d) in itertools.product(enumerate(C), enumerate(D)):
        checked += 1
        w = test(c, d, H[j])
        if w is None:
            continue
        _assert_witness(w, c, d)
        violations.append(Violation(i, j, tuple(int(x) for x in w)))
        if not full_scan:
            break
    return LcpReport(
        verdict=not violations,
        criterion=criterion,
        violating_pair=violations[0] if violations else None,
        profile_ok=dimension_profiles_compatible(C, D),
        pairs_checked=checked,
        violations=tuple(violations),
        warnings=tuple(warnings),
    )


def _assert_witness(w: np.ndarray, c: Subspace, d: Subspace) -> None:
    if not w.any() or not c.contains(w) or not d.contains(w):
        raise AssertionError(f"unsound witness {w.tolist()}")


def check_lcp_all(C: SubspaceCode, D: SubspaceCode) -> dict[str, LcpReport]:
    """Run every applicable criterion; ``stacked`` is skipped when dims do not sum to n."""
    out = {}
    for name in CRITERIA:
        try:
            out[name] = check_lcp(C, D, name)
        except StackedNotSquare:
            continue
    return out


def is_lcp(C: SubspaceCode, D: SubspaceCode) -> bool:
    return check_lcp(C, D).verdict


def check_lcd(C: SubspaceCode) -> LcpReport:
    """Member-wise LCD test: each ``C_i ∩ C_i^⊥ = 0``."""
    violations = []
    for i, c in enumerate(C):
        inter = c & c.orthogonal()
        if inter.dim:
            violations.append(Violation(i, i, tuple(int(x) for x in inter.basis.array[0])))
            break
    return LcpReport(
        verdict=not violations,
        criterion="lcd",
        violating_pair=violations[0] if violations else None,
        profile_ok=True,
        pairs_checked=len(C),
        violations=tuple(violations),
    )


class DualEquivalence(NamedTuple):
    applicable: bool
    equivalent: bool
    verdict: bool
    dual_verdict: bool


def dual_equivalence_check(C: SubspaceCode, D: SubspaceCode) -> DualEquivalence:
    """Compare LCP(C, D) with LCP(C^⊥, D^⊥).

    ``applicable`` is true when every ``dim C_i + dim D_j = n``, which is
    exactly when the two verdicts are guaranteed to agree.
    """
    _check_compatible(C, D)
    applicable = all(c.dim + d.dim == C.n for c in C for d in D)
    v = check_lcp(C, D).verdict
    dv = check_lcp(C.dual(), D.dual()).verdict
    return DualEquivalence(applicable, v == dv, v, dv)


# ----------------------------------------------------------------------------
# complement functions

AXIOMS = ("direct_sum", "bijection", "involution", "isometry")


@dataclass(frozen=True)
class ComplementFunction:
    """A map on the members of ``domain`` given by ``mapping[i] = index of f(domain[i])``."""

    domain: SubspaceCode
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != len(self.domain):
            raise ValueError("mapping must be total on the domain")
        if any(not 0 <= t < len(self.domain) for t in self.mapping):
            raise ValueError("mapping targets must index the domain")

    @property
    def n(self) -> int:
        return self.domain.n

    def __call__(self, X: Subspace) -> Subspace:
        return self.domain[self.mapping[self.domain.members.index(X)]]


class ComplementCheck(NamedTuple):
    valid: bool
    failed_axiom: str | None


def verify_complement_function(f: ComplementFunction) -> ComplementCheck:
    """Check the four complement axioms in order and report the first failure."""
    dom = f.domain.members
    n = f.n
    img = [dom[t] for t in f.mapping]
    for X, Y in zip(dom, img):
        if (X & Y).dim != 0 or (X + Y).dim != n:
            return ComplementCheck(False, "direct_sum")
    for k in set(X.dim for X in dom):
        src = [i for i, X in enumerate(dom) if X.dim == k]
        tgt = {i for i, X in enumerate(dom) if X.dim == n - k}
        images = [f.mapping[i] for i in src]
        if len(set(images)) != len(images) or set(images) != tgt:
            return ComplementCheck(False, "bijection")
    if any(f.mapping[f.mapping[i]] != i for i in range(len(dom))):
        return ComplementCheck(False, "involution")
    for a, b in itertools.combinations(range(len(dom)), 2):
        if img[a].distance(img[b]) != dom[a].distance(dom[b]):
            return ComplementCheck(False, "isometry")
    return ComplementCheck(True, None)


def complement_from_lcp(C: SubspaceCode, D: SubspaceCode) -> ComplementFunction:
    """Pair ``C_i <-> D_i`` on the union family ``C ∪ D``."""
    if len(C) != len(D):
        raise SizeMismatch(f"|C| = {len(C)} but |D| = {len(D)}")
    k = C.constant_dimension
    if k is None or D.constant_dimension != C.n - k:
        raise NotConstantDimension("C must have constant dimension k and D constant dimension n - k")
    report = check_lcp(C, D)
    if not report.verdict:
        raise NotLcp(f"C_{report.violating_pair.c_index} meets D_{report.violating_pair.d_index}")
    s = len(C)
    mapping = tuple(range(s, 2 * s)) + tuple(range(s))
    return ComplementFunction(C + D, mapping)


def complement_theorem_hypothesis(f: ComplementFunction, k: int) -> bool:
    """``X + f(Y) = F_q^n`` for all k-dimensional X, Y in the domain."""
    dom = f.domain.members
    cls = f.domain.dimension_class(k)
    return all((dom[x] + dom[f.mapping[y]]).dim == f.n for x in cls for y in cls)


def dimension_class_pair(code: SubspaceCode, k: int) -> tuple[SubspaceCode, SubspaceCode]:
    """``(C_k, C_{n-k})`` as families; both classes must be nonempty."""
    a = [code[i] for i in code.dimension_class(k)]
    b = [code[i] for i in code.dimension_class(code.n - k)]
    if not a or not b:
        raise ValueError(f"dimension classes {k} and {code.n - k} must both be nonempty")
    return SubspaceCode(a), SubspaceCode(b)
