import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sublcp import GF, LinearCode, Matrix, Polynomial, Subspace, SubspaceCode
from sublcp.code import (
    constacyclic_from_genpoly,
    constacyclic_shift,
    dimension_profiles_compatible,
    dual_subspace_code,
    linear_code_from_generator,
    min_subspace_distance,
)
from sublcp.errors import DuplicateMember, NotADivisor, TooFewMembers, ZeroRank, ZeroShift

from conftest import families, field_and_n, sp


def test_generator_examples():
    F2 = GF(2)
    assert linear_code_from_generator(Matrix(F2, [[1, 1]])).H.tolist() == [[1, 1]]
    assert linear_code_from_generator(Matrix.identity(GF(3), 4)).H.rows == 0
    C = linear_code_from_generator(Matrix(F2, [[1, 1, 0], [0, 1, 1]]))
    assert C.H.tolist() == [[1, 1, 1]]
    with pytest.raises(ZeroRank):
        linear_code_from_generator(Matrix.zeros(F2, 2, 3))


def test_zero_code_is_representable():
    Z = LinearCode.zero(GF(2), 3)
    assert Z.dimension == 0 and Z.H.rows == 3


def test_constacyclic_examples():
    F2, F5 = GF(2), GF(5)
    C = constacyclic_from_genpoly(Polynomial(F2, [1, 1]), 3, 1)
    assert C.dimension == 2 and C.G.tolist() == [[1, 0, 1], [0, 1, 1]]
    assert Subspace(Matrix(F2, [[1, 1, 0], [0, 1, 1]])) == C.subspace
    cyc = constacyclic_from_genpoly(Polynomial(F5, [1, 2, 2, 1]), 6, 1)
    assert (cyc.length, cyc.dimension) == (6, 3)
    con = constacyclic_from_genpoly(Polynomial(F5, [2, 3, 1, 1]), 6, 4)
    assert (con.length, con.dimension) == (6, 3)


def test_constacyclic_errors():
    F5 = GF(5)
    with pytest.raises(NotADivisor):
        constacyclic_from_genpoly(Polynomial(F5, [2, 3, 1, 1]), 6, 1)
    with pytest.raises(ZeroShift):
        constacyclic_from_genpoly(Polynomial(F5, [4, 1]), 6, 0)


@pytest.mark.parametrize(
    "q,coeffs,n,a",
    [(5, (1, 2, 2, 1), 6, 1), (5, (4, 2, 3, 1), 6, 1), (5, (2, 3, 1, 1), 6, 4), (5, (3, 3, 4, 1), 6, 4),
     (2, (1, 1, 0, 1), 7, 1), (3, (1, 1), 3, 2), (5, (1, 1, 1), 6, 1)],
)
def test_constacyclic_closure_exhaustive(q, coeffs, n, a):
    F = GF(q)
    C = constacyclic_from_genpoly(Polynomial(F, coeffs), n, a)
    assert not F.matmul(C.G.array, C.H.array.T).any()
    for c in C.codewords():
        assert C.subspace.contains(constacyclic_shift(c, a, F))


def test_min_distance_examples(ex61):
    spread = SubspaceCode(ex61.values())
    assert min_subspace_distance(spread) == 4
    U = ex61["U1"]
    assert min_subspace_distance(SubspaceCode([U, Subspace.full(GF(2), 4)])) == 2
    with pytest.raises(TooFewMembers):
        min_subspace_distance(SubspaceCode([U]))


def test_min_distance_random_f3_matches_double_loop():
    F = GF(3)
    rng = np.random.default_rng(5)
    from sublcp.subspace import random_subspace

    for _ in range(20):
        ms = []
        while len(ms) < 6:
            U = random_subspace(F, 4, int(rng.integers(0, 5)), rng)
            if U not in ms:
                ms.append(U)
        oracle = min((a + b).dim - (a & b).dim for a, b in itertools.combinations(ms, 2))
        assert min_subspace_distance(SubspaceCode(ms)) == oracle


def test_dual_code_example():
    A, B = sp("1000", "0100"), sp("0010", "0001")
    assert dual_subspace_code(SubspaceCode([A, B])) == SubspaceCode([B, A])


def test_duplicates_rejected():
    with pytest.raises(DuplicateMember):
        SubspaceCode([sp("10"), sp("10")])
    with pytest.raises(TooFewMembers):
        SubspaceCode([])


def test_profile_compatibility_examples(ex61):
    C = SubspaceCode([ex61["U1"], ex61["U2"], ex61["U3"]])
    D = SubspaceCode([ex61["U4"], ex61["U5"]])
    assert dimension_profiles_compatible(C, D)
    lines = SubspaceCode([sp("1000"), sp("0100")])
    assert not dimension_profiles_compatible(C, lines)
    F = GF(2)
    assert dimension_profiles_compatible(SubspaceCode([Subspace.full(F, 4)]), SubspaceCode([Subspace.zero(F, 4)]))


@given(st.data())
def test_dual_involution_and_distance_preserved(data):
    F, n = data.draw(field_and_n(max_n=6))
    code = data.draw(families(F, n, max_size=5))
    assert code.dual().dual() == code
    if len(code) >= 2:
        assert code.dual().min_distance() == code.min_distance()


@given(st.data())
def test_generator_and_parity_check_are_orthogonal(data):
    F, n = data.draw(field_and_n(qs=(2, 3, 5, 4, 9), max_n=6))
    code = data.draw(families(F, n, max_size=1))
    C = LinearCode(code[0])
    assert not F.matmul(C.G.array, C.H.array.T).any()
    assert C.G.rank == C.dimension and C.H.rank == n - C.dimension
