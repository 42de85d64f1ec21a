"""Elimination kernels over F_q.

Two implementations of the same entry points:

* ``*_numba``: scalar loops compiled with ``numba.njit``.
* ``*_numpy``: elimination vectorised across a whole batch of matrices.

The public names (``rref_rows``, ``batch_rank``, ``pairwise_min_distance``,
``distance_adjacency``) are bound to one of them at import time.  Set
``RANKMETRIC_BACKEND=numpy`` to force the fallback; ``numba`` is used when it
imports.  All functions take the field as ``(p, e, exp, log, inv)``, see
:meth:`rankmetric.gf.FieldSpec.kernel_args`, and matrices as int64 arrays of
encoded elements.
"""
import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

_requested = os.environ.get("RANKMETRIC_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"RANKMETRIC_BACKEND must be 'numba' or 'numpy', got {_requested!r}")
BACKEND = "numba" if (_requested == "numba" and HAVE_NUMBA) else "numpy"


# ---------------------------------------------------------------------------
# vectorised field arithmetic (numpy)
# ---------------------------------------------------------------------------

def vadd(a, b, p, e):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if p == 2:
        return a ^ b
    if e == 1:
        return (a + b) % p
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    w = 1
    for _ in range(e):
        out += ((a % p + b % p) % p) * w
        a = a // p
        b = b // p
        w *= p
    return out


def vneg(a, p, e):
    a = np.asarray(a, dtype=np.int64)
    if p == 2:
        return a.copy()
    if e == 1:
        return (-a) % p
    out = np.zeros_like(a)
    w = 1
    for _ in range(e):
        out += ((-(a % p)) % p) * w
        a = a // p
        w *= p
    return out


def vsub(a, b, p, e):
    if p == 2:
        return np.asarray(a, dtype=np.int64) ^ np.asarray(b, dtype=np.int64)
    return vadd(a, vneg(b, p, e), p, e)


def vmul(a, b, exp, log):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    prod = exp[log[a] + log[b]]
    return np.where((a == 0) | (b == 0), 0, prod)


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------

def _eliminate_numpy(W, p, e, exp, log, inv):
    """Reduce every matrix of the (N, m, n) stack ``W`` to RREF in place.

    Pivot rows are moved to the top in order.  Returns ``(ranks, pivots)``
    where ``pivots[b, r]`` is the pivot column of row r (or -1).
    """
    N, m, n = W.shape
    ranks = np.zeros(N, dtype=np.int64)
    pivots = np.full((N, max(m, 1)), -1, dtype=np.int64)
    if N == 0 or m == 0 or n == 0:
        return ranks, pivots
    rows = np.arange(m)
    batch = np.arange(N)
    for col in range(n):
        if (ranks >= m).all():
            break
        cand = (W[:, :, col] != 0) & (rows[None, :] >= ranks[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = batch[has]
        r = ranks[has]
        piv = np.argmax(cand[has], axis=1)
        # swap pivot row into position r
        top = W[b, r].copy()
        W[b, r] = W[b, piv]
        W[b, piv] = top
        scale = inv[W[b, r, col]]
        W[b, r] = vmul(W[b, r], scale[:, None], exp, log)
        # clear the column everywhere else
        factors = W[b, :, col].copy()
        factors[np.arange(len(b)), r] = 0
        W[b] = vsub(W[b], vmul(factors[:, :, None], W[b, r][:, None, :], exp, log), p, e)
        pivots[b, r] = col
        ranks[has] += 1
    return ranks, pivots


def rref_rows_numpy(M, p, e, exp, log, inv):
    W = np.array(M, dtype=np.int64, copy=True)[None, :, :]
    ranks, pivots = _eliminate_numpy(W, p, e, exp, log, inv)
    r = int(ranks[0])
    return W[0, :r].copy(), pivots[0, :r].copy()


def batch_rank_numpy(W, p, e, exp, log, inv):
    W = np.array(W, dtype=np.int64, copy=True)
    return _eliminate_numpy(W, p, e, exp, log, inv)[0]


def _pair_differences(W, i, p, e):
    return vsub(W[i + 1:], W[i][None, :, :], p, e)


def pairwise_min_distance_numpy(W, p, e, exp, log, inv):
    W = np.asarray(W, dtype=np.int64)
    best = np.iinfo(np.int64).max
    for i in range(W.shape[0] - 1):
        ranks = batch_rank_numpy(_pair_differences(W, i, p, e), p, e, exp, log, inv)
        best = min(best, int(ranks.min()))
        if best == 0:
            break
    return best


def distance_adjacency_numpy(W, d, p, e, exp, log, inv):
    W = np.asarray(W, dtype=np.int64)
    N = W.shape[0]
    adj = np.zeros((N, N), dtype=np.bool_)
    for i in range(N - 1):
        ranks = batch_rank_numpy(_pair_differences(W, i, p, e), p, e, exp, log, inv)
        adj[i, i + 1:] = ranks >= d
    return adj | adj.T


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

def _fadd(a, b, p, e):
    if p == 2:
        return a ^ b
    r = 0
    w = 1
    for _ in range(e):
        r += ((a % p + b % p) % p) * w
        a //= p
        b //= p
        w *= p
    return r


def _fsub(a, b, p, e):
    if p == 2:
        return a ^ b
    r = 0
    w = 1
    for _ in range(e):
        r += ((a % p - b % p) % p) * w
        a //= p
        b //= p
        w *= p
    return r


def _fmul(a, b, exp, log):
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


def _rref_inplace(A, pivots, p, e, exp, log, inv):
    m, n = A.shape
    r = 0
    for col in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if A[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(n):
                t = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = t
        s = inv[A[r, col]]
        for j in range(col, n):
            A[r, j] = _fmul(A[r, j], s, exp, log)
        for i in range(m):
            if i != r and A[i, col] != 0:
                f = A[i, col]
                for j in range(col, n):
                    A[i, j] = _fsub(A[i, j], _fmul(f, A[r, j], exp, log), p, e)
        pivots[r] = col
        r += 1
    return r


def _rank_inplace(A, p, e, exp, log, inv):
    # forward elimination only, rows below the pivot
    m, n = A.shape
    r = 0
    for col in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if A[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(col, n):
                t = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = t
        s = inv[A[r, col]]
        for i in range(r + 1, m):
            if A[i, col] != 0:
                f = _fmul(A[i, col], s, exp, log)
                for j in range(col, n):
                    A[i, j] = _fsub(A[i, j], _fmul(f, A[r, j], exp, log), p, e)
        r += 1
    return r


def _rref_rows_impl(M, p, e, exp, log, inv):
    A = M.copy()
    pivots = np.full(max(A.shape[0], 1), -1, dtype=np.int64)
    r = _rref_inplace(A, pivots, p, e, exp, log, inv)
    return A[:r].copy(), pivots[:r].copy()


def _batch_rank_impl(W, p, e, exp, log, inv):
    N, m, n = W.shape
    out = np.zeros(N, dtype=np.int64)
    A = np.empty((m, n), dtype=np.int64)
    for b in range(N):
        for i in range(m):
            for j in range(n):
                A[i, j] = W[b, i, j]
        out[b] = _rank_inplace(A, p, e, exp, log, inv)
    return out


def _pairwise_min_impl(W, p, e, exp, log, inv):
    N, m, n = W.shape
    best = np.iinfo(np.int64).max
    A = np.empty((m, n), dtype=np.int64)
    for a in range(N - 1):
        for b in range(a + 1, N):
            for i in range(m):
                for j in range(n):
                    A[i, j] = _fsub(W[a, i, j], W[b, i, j], p, e)
            r = _rank_inplace(A, p, e, exp, log, inv)
            if r < best:
                best = r
                if best == 0:
                    return best
    return best


def _adjacency_impl(W, d, p, e, exp, log, inv):
    N, m, n = W.shape
    adj = np.zeros((N, N), dtype=np.bool_)
    A = np.empty((m, n), dtype=np.int64)
    for a in range(N - 1):
        for b in range(a + 1, N):
            for i in range(m):
                for j in range(n):
                    A[i, j] = _fsub(W[a, i, j], W[b, i, j], p, e)
            if _rank_inplace(A, p, e, exp, log, inv) >= d:
                adj[a, b] = True
                adj[b, a] = True
    return adj


if HAVE_NUMBA:
    _jit = numba.njit(cache=True)
    _fadd = _jit(_fadd)
    _fsub = _jit(_fsub)
    _fmul = _jit(_fmul)
    _rref_inplace = _jit(_rref_inplace)
    _rank_inplace = _jit(_rank_inplace)
    _rref_rows_nb = _jit(_rref_rows_impl)
    _batch_rank_nb = _jit(_batch_rank_impl)
    _pairwise_min_nb = _jit(_pairwise_min_impl)
    _adjacency_nb = _jit(_adjacency_impl)

    def rref_rows_numba(M, p, e, exp, log, inv):
        return _rref_rows_nb(np.ascontiguousarray(M, dtype=np.int64), p, e, exp, log, inv)

    def batch_rank_numba(W, p, e, exp, log, inv):
        return _batch_rank_nb(np.ascontiguousarray(W, dtype=np.int64), p, e, exp, log, inv)

    def pairwise_min_distance_numba(W, p, e, exp, log, inv):
        return int(_pairwise_min_nb(np.ascontiguousarray(W, dtype=np.int64), p, e, exp, log, inv))

    def distance_adjacency_numba(W, d, p, e, exp, log, inv):
        return _adjacency_nb(np.ascontiguousarray(W, dtype=np.int64), d, p, e, exp, log, inv)


BACKENDS = {"numpy": (rref_rows_numpy, batch_rank_numpy, pairwise_min_distance_numpy,
                      distance_adjacency_numpy)}
if HAVE_NUMBA:
    BACKENDS["numba"] = (rref_rows_numba, batch_rank_numba, pairwise_min_distance_numba,
                         distance_adjacency_numba)

rref_rows, batch_rank, pairwise_min_distance, distance_adjacency = BACKENDS[BACKEND]
