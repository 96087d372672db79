import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sublcp import GF, SubspaceCode, span
from sublcp.codefile import parse_code_file
from sublcp.cli import fixture_path
from sublcp.subspace import Subspace

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def vec(s: str) -> list[int]:
    return [int(c) for c in s]


def sp(*vectors: str, q: int = 2) -> Subspace:
    return span([vec(v) for v in vectors], len(vectors[0]), GF(q))


@pytest.fixture(scope="session")
def ex61():
    cf = parse_code_file(fixture_path("example_6_1"))
    return {name: cf.subspace(name) for name in ("U1", "U2", "U3", "U4", "U5")}


@pytest.fixture(scope="session")
def ex61_file():
    return parse_code_file(fixture_path("example_6_1"))


@st.composite
def matrices(draw, q=None, max_rows=5, max_cols=6, rows=None, cols=None):
    q = q if q is not None else draw(st.sampled_from([2, 3, 5]))
    r = rows if rows is not None else draw(st.integers(0, max_rows))
    c = cols if cols is not None else draw(st.integers(1, max_cols))
    flat = draw(st.lists(st.integers(0, q - 1), min_size=r * c, max_size=r * c))
    return GF(q), np.array(flat, dtype=np.int64).reshape(r, c)


@st.composite
def subspaces(draw, field, n, max_dim=None):
    """A span of up to ``max_dim`` random vectors; low-rank draws are common."""
    max_dim = n if max_dim is None else max_dim
    r = draw(st.integers(0, max_dim))
    flat = draw(st.lists(st.integers(0, field.q - 1), min_size=r * n, max_size=r * n))
    return span(np.array(flat, dtype=np.int64).reshape(r, n), n, field)


@st.composite
def field_and_n(draw, qs=(2, 3, 5), max_n=6, min_n=1):
    return GF(draw(st.sampled_from(qs))), draw(st.integers(min_n, max_n))


@st.composite
def families(draw, field, n, max_size=4, min_dim=0, max_dim=None):
    size = draw(st.integers(1, max_size))
    out: list[Subspace] = []
    for _ in range(size * 3):
        U = draw(subspaces(field, n, max_dim))
        if U.dim >= min_dim and U not in out:
            out.append(U)
        if len(out) == size:
            break
    if not out:
        out.append(Subspace.full(field, n))
    return SubspaceCode(out)


def random_family(rng, F, n, size, dims):
    from sublcp.subspace import random_subspace

    out = []
    for _ in range(50 * size):
        U = random_subspace(F, n, int(rng.choice(dims)), rng)
        if U not in out:
            out.append(U)
        if len(out) == size:
            break
    return SubspaceCode(out)


def random_lcp_pair(rng, F, n, max_size=3, dims_c=None, dims_d=None):
    """Random families (C, D) with every C_i ∩ D_j = 0, by rejection."""
    from sublcp.subspace import random_subspace

    while True:
        dc = dims_c or list(range(1, n))
        C = random_family(rng, F, n, int(rng.integers(1, max_size + 1)), dc)
        top = max(C.dims)
        dd = dims_d or list(range(1, n - top + 1))
        D, want = [], int(rng.integers(1, max_size + 1))
        for _ in range(200):
            V = random_subspace(F, n, int(rng.choice(dd)), rng)
            if V not in D and all((V & c).dim == 0 for c in C):
                D.append(V)
            if len(D) == want:
                break
        if D:
            return C, SubspaceCode(D)


# criterion number -> (title, passed, detail); filled by test_acceptance
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    from test_acceptance import format_results

    terminalreporter.section("acceptance criteria")
    for line in format_results():
        terminalreporter.write_line(line)
