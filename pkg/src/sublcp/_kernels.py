"""Hot loops: row reduction and matrix products over GF(p) and GF(p^m).

Two implementations of every kernel live here.  The numba versions are
scalar triple loops compiled with ``@njit``; the numpy versions vectorize
each elimination step.  Both return identical results.  Set the
environment variable ``SUBLCP_DISABLE_NUMBA=1`` (or run without numba
installed) to route everything through numpy.

Elements are int64 codes in ``[0, q)``.  For extension fields the code of
``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` is ``sum(c_i * p**i)`` and the
caller passes an :class:`ExtTables` bundle with exp/log tables.
"""

from __future__ import annotations

import os
from typing import NamedTuple

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("SUBLCP_DISABLE_NUMBA", "0") not in ("1", "true", "yes")


class ExtTables(NamedTuple):
    p: int
    m: int
    q: int
    exp: np.ndarray  # length 2(q-1), exp[i] = g^i
    log: np.ndarray  # length q, log[0] unused
    neg: np.ndarray
    inv: np.ndarray  # inv[0] = 0 sentinel


# ----------------------------------------------------------------------------
# numpy elementwise helpers (also used by the Field class)


def np_add(a, b, p: int, ext: ExtTables | None):
    if ext is None:
        return (a + b) % p
    if p == 2:
        return np.bitwise_xor(a, b)
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    w = 1
    for _ in range(ext.m):
        out += ((a // w + b // w) % p) * w
        w *= p
    return out


def np_neg(a, p: int, ext: ExtTables | None):
    if ext is None:
        return (-np.asarray(a, dtype=np.int64)) % p
    return ext.neg[a]


def np_sub(a, b, p: int, ext: ExtTables | None):
    return np_add(a, np_neg(b, p, ext), p, ext)


def np_mul(a, b, p: int, ext: ExtTables | None):
    if ext is None:
        return (np.asarray(a, dtype=np.int64) * b) % p
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=np.int64)
    nz = (a != 0) & (b != 0)
    out[nz] = ext.exp[ext.log[a[nz]] + ext.log[b[nz]]]
    return out


def _inv_mod(a: int, p: int) -> int:
    return pow(int(a), -1, p)


# ----------------------------------------------------------------------------
# numpy kernels


def rref_numpy(M: np.ndarray, p: int, ext: ExtTables | None):
    """Reduced row echelon form; returns ``(R, pivots)`` with R trimmed to rank rows."""
    R = np.array(M, dtype=np.int64, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = int(R[r, c])
        if lead != 1:
            inv = _inv_mod(lead, p) if ext is None else int(ext.inv[lead])
            R[r] = np_mul(R[r], inv, p, ext)
        f = R[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            R[hit] = np_sub(R[hit], np_mul(f[hit, None], R[r][None, :], p, ext), p, ext)
        pivots.append(c)
        r += 1
    return R[:r], np.array(pivots, dtype=np.int64)


def matmul_numpy(A: np.ndarray, B: np.ndarray, p: int, ext: ExtTables | None) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    inner = A.shape[1]
    if ext is None and (p - 1) ** 2 * max(inner, 1) < 2**62:
        return (A @ B) % p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(inner):
        out = np_add(out, np_mul(A[:, k, None], B[None, k, :], p, ext), p, ext)
    return out


# ----------------------------------------------------------------------------
# numba kernels

if HAVE_NUMBA:

    @njit(cache=True)
    def _nb_inv_mod(a, p):
        t, new_t = 0, 1
        r, new_r = p, a % p
        while new_r != 0:
            quo = r // new_r
            t, new_t = new_t, t - quo * new_t
            r, new_r = new_r, r - quo * new_r
        return t % p

    @njit(cache=True)
    def _nb_ext_add(a, b, p, m):
        if p == 2:
            return a ^ b
        out = 0
        w = 1
        for _ in range(m):
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    @njit(cache=True)
    def _nb_ext_mul(a, b, exp, log):
        if a == 0 or b == 0:
            return 0
        return exp[log[a] + log[b]]

    @njit(cache=True)
    def _nb_rref_prime(M, p):
        rows, cols = M.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if M[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(cols):
                    t = M[r, j]
                    M[r, j] = M[piv, j]
                    M[piv, j] = t
            lead = M[r, c]
            if lead != 1:
                inv = _nb_inv_mod(lead, p)
                for j in range(cols):
                    M[r, j] = (M[r, j] * inv) % p
            for i in range(rows):
                if i != r and M[i, c] != 0:
                    f = M[i, c]
                    for j in range(cols):
                        M[i, j] = (M[i, j] - f * M[r, j]) % p
            pivots[r] = c
            r += 1
        return r, pivots

    @njit(cache=True)
    def _nb_rref_ext(M, p, m, exp, log, neg, inv):
        rows, cols = M.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if M[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(cols):
                    t = M[r, j]
                    M[r, j] = M[piv, j]
                    M[piv, j] = t
            lead = M[r, c]
            if lead != 1:
                li = inv[lead]
                for j in range(cols):
                    M[r, j] = _nb_ext_mul(M[r, j], li, exp, log)
            for i in range(rows):
                if i != r and M[i, c] != 0:
                    f = neg[M[i, c]]
                    for j in range(cols):
                        M[i, j] = _nb_ext_add(M[i, j], _nb_ext_mul(f, M[r, j], exp, log), p, m)
            pivots[r] = c
            r += 1
        return r, pivots

    @njit(cache=True)
    def _nb_matmul_prime(A, B, p):
        n, k = A.shape
        m = B.shape[1]
        out = np.zeros((n, m), dtype=np.int64)
        for i in range(n):
            for t in range(k):
                a = A[i, t]
                if a == 0:
                    continue
                for j in range(m):
                    out[i, j] = (out[i, j] + a * B[t, j]) % p
        return out

    @njit(cache=True)
    def _nb_matmul_ext(A, B, p, m, exp, log):
        n, k = A.shape
        w = B.shape[1]
        out = np.zeros((n, w), dtype=np.int64)
        for i in range(n):
            for t in range(k):
                a = A[i, t]
                if a == 0:
                    continue
                for j in range(w):
                    out[i, j] = _nb_ext_add(out[i, j], _nb_ext_mul(a, B[t, j], exp, log), p, m)
        return out


def rref_numba(M: np.ndarray, p: int, ext: ExtTables | None):
    R = np.array(M, dtype=np.int64, copy=True)
    if R.size == 0:
        return R[:0], np.empty(0, dtype=np.int64)
    if ext is None:
        r, piv = _nb_rref_prime(R, p)
    else:
        r, piv = _nb_rref_ext(R, p, ext.m, ext.exp, ext.log, ext.neg, ext.inv)
    return R[:r], piv[:r].copy()


def matmul_numba(A: np.ndarray, B: np.ndarray, p: int, ext: ExtTables | None) -> np.ndarray:
    A = np.ascontiguousarray(A, dtype=np.int64)
    B = np.ascontiguousarray(B, dtype=np.int64)
    if ext is None:
        return _nb_matmul_prime(A, B, p)
    return _nb_matmul_ext(A, B, p, ext.m, ext.exp, ext.log)


def rref(M: np.ndarray, p: int, ext: ExtTables | None = None):
    if USE_NUMBA:
        return rref_numba(M, p, ext)
    return rref_numpy(M, p, ext)


def matmul(A: np.ndarray, B: np.ndarray, p: int, ext: ExtTables | None = None) -> np.ndarray:
    # BLAS int matmul beats the compiled loop for prime fields of moderate size
    if USE_NUMBA and (ext is not None or (p - 1) ** 2 * max(A.shape[1], 1) >= 2**62):
        return matmul_numba(A, B, p, ext)
    return matmul_numpy(A, B, p, ext)


def warm_up() -> None:
    """Compile (or load from cache) every numba kernel now rather than on first use."""
    if not USE_NUMBA:
        return
    from .field import GF

    M = np.array([[1, 1], [0, 1]], dtype=np.int64)
    rref_numba(M, 2, None)
    matmul_numba(M, M, 2, None)
    ext = GF(4).tables
    rref_numba(M, 2, ext)
    matmul_numba(M, M, 2, ext)
