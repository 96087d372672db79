import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sublcp import GF, Matrix, Subspace, enumerate_vectors, intersect, span, subspace_distance, subspace_sum
from sublcp.errors import AmbientMismatch, EnumerationTooLarge, LengthMismatch
from sublcp.subspace import contains, orthogonal, projective_points

from conftest import field_and_n, sp, subspaces, vec


def _set(U):
    return {tuple(v) for v in enumerate_vectors(U)}


# --- worked examples --------------------------------------------------------


def test_span_examples():
    F2 = GF(2)
    U1 = span([[1, 0, 0, 0], [0, 1, 0, 0]], 4, F2)
    assert U1.dim == 2 and U1.basis.tolist() == [[1, 0, 0, 0], [0, 1, 0, 0]]
    Z = span([], 4, F2)
    assert Z.dim == 0 and Z == Subspace.zero(F2, 4)
    assert span([[1, 1], [2, 2]], 2, GF(3)).dim == 1


def test_span_length_mismatch():
    with pytest.raises(LengthMismatch):
        span([[1, 0, 0]], 4, GF(2))


def test_sum_examples(ex61):
    U1, U2, U3 = ex61["U1"], ex61["U2"], ex61["U3"]
    assert subspace_sum(U1, U2) == Subspace.full(GF(2), 4)
    assert U1 + Subspace.zero(GF(2), 4) == U1
    assert (U1 + U3).dim == 4
    assert len(_set(U1) | _set(U3)) == 7  # 4 + 4 - shared zero


def test_intersection_examples(ex61):
    U4 = ex61["U4"]
    R = sp("1000", "0100", "1001")
    assert intersect(R, U4) == sp("1001")
    assert intersect(U4, U4) == U4
    R2 = sp("1000", "0010", "0101")
    assert R2 & U4 == sp("0111")


def test_orthogonal_examples():
    assert orthogonal(sp("1000", "0100")) == sp("0010", "0001")
    assert orthogonal(Subspace.zero(GF(3), 5)) == Subspace.full(GF(3), 5)


def test_distance_examples(ex61):
    assert subspace_distance(ex61["U1"], ex61["U2"]) == 4
    assert subspace_distance(ex61["U3"], ex61["U3"]) == 0


def test_enumerate_examples(ex61):
    F3 = GF(3)
    assert enumerate_vectors(Subspace.zero(F3, 2)).tolist() == [[0, 0]]
    assert enumerate_vectors(span([[1, 0]], 2, F3)).tolist() == [[0, 0], [1, 0], [2, 0]]
    assert len(enumerate_vectors(ex61["U3"])) == 4


def test_enumerate_cap():
    with pytest.raises(EnumerationTooLarge):
        enumerate_vectors(Subspace.full(GF(5), 6), cap=1000)


def test_contains_examples(ex61):
    R2 = sp("1000", "0010", "0101")
    assert contains(R2, ex61["U3"])
    assert contains(R2, Subspace.zero(GF(2), 4))
    assert not contains(R2, ex61["U1"]) and not contains(R2, ex61["U2"])
    assert R2.contains(vec("0111")) and not R2.contains(vec("0100"))


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        sp("10") + sp("100")
    with pytest.raises(AmbientMismatch):
        contains(sp("10"), [1, 0, 0])


def test_projective_points_are_normalised_lines():
    pts = projective_points(GF(3), 3)
    assert len(pts) == (27 - 1) // 2
    assert all(v[np.flatnonzero(v)[0]] == 1 for v in pts)


# --- properties -------------------------------------------------------------


@given(st.data())
def test_canonical_form_is_basis_independent(data):
    F, n = data.draw(field_and_n(max_n=6))
    U = data.draw(subspaces(F, n))
    k = U.dim
    if k == 0:
        return
    # random invertible mix of the basis
    while True:
        flat = data.draw(st.lists(st.integers(0, F.q - 1), min_size=k * k, max_size=k * k))
        T = Matrix(F, np.array(flat).reshape(k, k), shape=(k, k))
        if T.square_invertible():
            break
    perm = data.draw(st.permutations(range(k)))
    mixed = (T @ U.basis).array[list(perm)]
    assert Subspace(Matrix._raw(F, mixed)) == U


@given(st.data())
def test_dimension_formula_and_de_morgan(data):
    F, n = data.draw(field_and_n(max_n=7))
    U, V = data.draw(subspaces(F, n)), data.draw(subspaces(F, n))
    assert (U + V).dim + (U & V).dim == U.dim + V.dim
    assert (U + V).orthogonal() == U.orthogonal() & V.orthogonal()
    assert (U & V).orthogonal() == U.orthogonal() + V.orthogonal()
    for row in (U & V).basis.array:
        assert U.contains(row) and V.contains(row)


@given(st.data())
def test_orthogonal_is_an_involution(data):
    F, n = data.draw(field_and_n(max_n=8))
    U = data.draw(subspaces(F, n))
    W = U.orthogonal()
    assert W.dim == n - U.dim
    assert not F.matmul(U.basis.array, W.basis.array.T).any()
    assert W.orthogonal() == U


@given(st.data())
def test_distance_invariant_under_duality(data):
    F, n = data.draw(field_and_n(max_n=8))
    U, V = data.draw(subspaces(F, n)), data.draw(subspaces(F, n))
    assert U.distance(V) == U.orthogonal().distance(V.orthogonal())


@given(st.data())
def test_distance_is_a_metric(data):
    F, n = data.draw(field_and_n(max_n=6))
    U, V, W = (data.draw(subspaces(F, n)) for _ in range(3))
    d = subspace_distance
    assert d(U, V) >= 0 and d(U, V) == d(V, U)
    assert (d(U, V) == 0) == (U == V)
    assert d(U, W) <= d(U, V) + d(V, W)


@given(st.data())
def test_intersection_matches_enumeration_oracle(data):
    F, n = data.draw(field_and_n(max_n=6))
    if F.q**n > 2**12:
        n = 5 if F.q == 5 else n
    U, V = data.draw(subspaces(F, n)), data.draw(subspaces(F, n))
    assert _set(U & V) == _set(U) & _set(V)
    assert _set(U + V) >= _set(U) | _set(V)
    assert len(_set(U + V)) == F.q ** (U + V).dim


@given(st.data())
def test_enumeration_is_lexicographic_and_complete(data):
    F, n = data.draw(field_and_n(max_n=5))
    U = data.draw(subspaces(F, n))
    vs = enumerate_vectors(U)
    assert len(vs) == F.q**U.dim == len({tuple(v) for v in vs})
    assert all(U.contains(v) for v in vs)
