"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary; running this file directly prints the same lines.
"""

import contextlib
import time

import numpy as np
import pytest

from sublcp import GF, SubspaceCode, enumerate_vectors, spread_field, verify_spread, warm_up_kernels
from sublcp.channel import ChannelInstance, correct, detect, insert_error, simulate
from sublcp.cli import fixture_path
from sublcp.codefile import parse_code_file
from sublcp.construct import (
    lift_family,
    lift_matrix_code,
    paired_lcp,
    plotkin_lcp_pair,
    plotkin_tilde_pair,
    s_lambda_dual_pair,
    s_lambda_hypothesis,
    s_lambda_lcd_pair,
    spread_matrix,
    spread_partition,
)
from sublcp.lcp import CRITERIA, check_lcd, check_lcp, check_lcp_all, dual_equivalence_check
from sublcp.subspace import random_subspace

from conftest import ACCEPTANCE_RESULTS, random_family, random_lcp_pair, sp


@contextlib.contextmanager
def criterion(number: int, title: str, limit: float | None = None):
    t0 = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - t0
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"
    except BaseException as exc:
        ACCEPTANCE_RESULTS[number] = (title, False, f"{type(exc).__name__}: {exc}".splitlines()[0])
        raise
    ACCEPTANCE_RESULTS[number] = (title, True, f"{elapsed:.2f} s")


@pytest.fixture(scope="module", autouse=True)
def compiled_kernels():
    # one-off JIT compilation is process start-up cost, kept out of the timed blocks
    warm_up_kernels()


def _ex61():
    cf = parse_code_file(fixture_path("example_6_1"))
    return cf, {f"U{i}": cf.subspace(f"U{i}") for i in range(1, 6)}


def test_criterion_01_first_channel_example():
    with criterion(1, "insertion <e1+e4> into U1 detected by U4 and corrected", 1.0):
        cf, U = _ex61()
        inst = ChannelInstance(cf.family("C"), cf.family("D"))
        R = insert_error(U["U1"], sp("1001"))
        det = detect(R, SubspaceCode([U["U4"]]))
        assert det.detected and det.intersection == sp("1001")
        res = correct(R, inst)
        assert res.recovered == U["U1"] and res.case_tag == "error_in_D"
        assert res.error_estimate == sp("1001")


def test_criterion_02_second_channel_example():
    with criterion(2, "insertion <e1> into U3 corrected by containment scan", 1.0):
        cf, U = _ex61()
        inst = ChannelInstance(cf.family("C"), cf.family("D"))
        R = insert_error(U["U3"], sp("1000"))
        assert R == sp("1000", "0010", "0101")
        assert (R & U["U4"]) == sp("0111")
        inside = [name for name in ("U1", "U2", "U3") if R.contains(U[name])]
        assert inside == ["U3"]
        assert correct(R, inst).recovered == U["U3"]


def test_criterion_03_spread_of_f5_6():
    with criterion(3, "spread_field(5, 3) has 126 members covering 15624 vectors once", 30.0):
        S = spread_field(GF(5), 3)
        assert len(S) == 126
        chk = verify_spread(S.code, cap=5**6)
        assert chk.valid and chk.covered == 15624
        assert chk.multiplicity == ((1, 15624),)


def _oracle_disjoint(c, d) -> bool:
    a = {tuple(v) for v in enumerate_vectors(c)[1:]}
    return not any(tuple(v) in a for v in enumerate_vectors(d)[1:])


def test_criterion_04_criteria_equivalence():
    with criterion(4, "pairwise, distance, right-inv and stacked criteria agree on 500+ pairs"):
        rng = np.random.default_rng(404)
        pairs = stacked = oracle = 0
        verdicts = {True: 0, False: 0}
        for t in range(600):
            q = (2, 3, 5)[t % 3]
            F = GF(q)
            n = int(rng.integers(2, 9))
            mode = t % 4
            if mode == 0:
                C, D = random_lcp_pair(rng, F, n, max_size=4)
            elif mode == 1:
                k = int(rng.integers(1, n))
                C = random_family(rng, F, n, int(rng.integers(1, 5)), [k])
                D = random_family(rng, F, n, int(rng.integers(1, 5)), [n - k])
            else:
                C = random_family(rng, F, n, int(rng.integers(1, 5)), list(range(0, n + 1)))
                D = random_family(rng, F, n, int(rng.integers(1, 5)), list(range(0, n + 1)))
            reports = check_lcp_all(C, D)
            base = reports["pairwise"].verdict
            for name in ("distance", "right_inv"):
                assert reports[name].verdict == base, (name, t)
            if all(c.dim + d.dim == n for c in C for d in D):
                assert reports["stacked"].verdict == base, ("stacked", t)
                stacked += 1
            if q**n <= 2**12:
                assert base == all(_oracle_disjoint(c, d) for c in C for d in D), ("oracle", t)
                oracle += 1
            verdicts[base] += 1
            pairs += 1
        assert pairs >= 500 and stacked >= 100 and oracle >= 300
        assert verdicts[True] >= 100 and verdicts[False] >= 100
        assert set(CRITERIA) == {"pairwise", "distance", "right_inv", "stacked"}


def test_criterion_05_lcp_iff_dual_lcp():
    with criterion(5, "LCP(C, D) iff LCP(C^perp, D^perp) on 200+ applicable pairs"):
        rng = np.random.default_rng(505)
        applicable = 0
        verdicts = {True: 0, False: 0}
        for t in range(240):
            F = GF((2, 3, 5)[t % 3])
            n = int(rng.integers(2, 7))
            k = int(rng.integers(1, n))
            if t % 2:
                C, D = random_lcp_pair(rng, F, n, max_size=3, dims_c=[k], dims_d=[n - k])
            else:
                C = random_family(rng, F, n, int(rng.integers(1, 4)), [k])
                D = random_family(rng, F, n, int(rng.integers(1, 4)), [n - k])
            res = dual_equivalence_check(C, D)
            assert res.applicable
            assert res.equivalent, t
            applicable += 1
            verdicts[res.verdict] += 1
        assert applicable >= 200 and verdicts[True] and verdicts[False]


def test_criterion_06_s_lambda_examples():
    with criterion(6, "lambda = 2 and lambda = 4 constacyclic examples over F_5", 5.0):
        F5 = GF(5)
        cf2 = parse_code_file(fixture_path("s_lambda_q5_l2"))
        C, D = cf2.family("C"), cf2.family("D")
        for name in CRITERIA:
            assert check_lcp(C, D, name).verdict, name
        assert s_lambda_hypothesis(F5, 2, "dual")
        A, B = s_lambda_dual_pair(C, D, 2)
        assert paired_lcp(A, B)

        cf4 = parse_code_file(fixture_path("s_lambda_q5_l4"))
        C4 = cf4.family("C")
        assert check_lcd(C4).verdict
        assert s_lambda_hypothesis(F5, 4, "lcd")
        A, B = s_lambda_lcd_pair(C4, 4)
        assert paired_lcp(A, B)


def test_criterion_07_plotkin_preservation():
    with criterion(7, "Plotkin and plotkin-tilde families of LCP inputs are LCPs"):
        rng = np.random.default_rng(707)
        count = 0
        for t in range(120):
            F = GF((2, 3, 5)[t % 3])
            n = int(rng.integers(2, 5))
            C1, D1 = random_lcp_pair(rng, F, n)
            C2, D2 = random_lcp_pair(rng, F, n)
            assert check_lcp(*plotkin_lcp_pair(C1, D1, C2, D2)).verdict, t
            assert check_lcp(*plotkin_tilde_pair(C1, D1)).verdict, t
            count += 1
        assert count >= 100


def test_criterion_08_lift():
    with criterion(8, "lift commutes with intersection, scales dimension, transfers LCP"):
        rng = np.random.default_rng(808)
        for t in range(150):
            F = GF((2, 3)[t % 2])
            n, m = int(rng.integers(1, 5)), int(rng.integers(1, 4))
            U, V = (random_subspace(F, n, int(rng.integers(0, n + 1)), rng) for _ in range(2))
            LU, LV = lift_matrix_code(U, m), lift_matrix_code(V, m)
            assert LU & LV == lift_matrix_code(U & V, m)
            assert LU.dim == m * U.dim
        seen = {True: 0, False: 0}
        for t in range(120):
            F = GF((2, 3)[t % 2])
            n, m = int(rng.integers(2, 5)), int(rng.integers(1, 4))
            if t % 2:
                C, D = random_lcp_pair(rng, F, n)
            else:
                C = random_family(rng, F, n, 2, list(range(1, n)))
                D = random_family(rng, F, n, 2, list(range(1, n)))
            v = check_lcp(C, D).verdict
            assert check_lcp(lift_family(C, m), lift_family(D, m)).verdict == v
            seen[v] += 1
        assert seen[True] >= 20 and seen[False] >= 20


def test_criterion_09_exhaustive_decoding():
    with criterion(9, "exhaustive decoding: 36/36 on F_2^4 and the matrix spread", 5.0):
        cf, _ = _ex61()
        rep = simulate(ChannelInstance(cf.family("C"), cf.family("D")), "exhaustive")
        assert rep.trials == 36 and rep.recoveries == 36 and rep.recovery_rate == 1.0

        mf = parse_code_file(fixture_path("spread_q2_k2_matrix"))
        S = spread_matrix(mf.matrix_family("M"))
        assert verify_spread(S.code).valid
        C, D = spread_partition(S, 2)
        rep2 = simulate(ChannelInstance(C, D), "exhaustive")
        assert rep2.trials == len(C) * 12 and rep2.recovery_rate == 1.0


def test_criterion_10_determinism():
    with criterion(10, "seeded simulation reports are byte-identical, serial or parallel"):
        cf, _ = _ex61()
        inst = ChannelInstance(cf.family("C"), cf.family("D"))
        a = simulate(inst, "random", trials=300, seed=2024).to_json()
        b = simulate(inst, "random", trials=300, seed=2024).to_json()
        c = simulate(inst, "random", trials=300, seed=2024, workers=8).to_json()
        assert a == b == c
        e1 = simulate(inst, "exhaustive").to_json()
        e2 = simulate(inst, "exhaustive", workers=4).to_json()
        assert e1 == e2


def format_results() -> list[str]:
    lines = []
    for n in range(1, 11):
        if n not in ACCEPTANCE_RESULTS:
            lines.append(f"criterion {n:2d}: NOT RUN")
            continue
        title, ok, detail = ACCEPTANCE_RESULTS[n]
        lines.append(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title} ({detail})")
    return lines


if __name__ == "__main__":
    import sys

    warm_up_kernels()
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:  # recorded by criterion()
                pass
    print("\n".join(format_results()))
    sys.exit(0 if all(ok for _, ok, _ in ACCEPTANCE_RESULTS.values()) else 1)
