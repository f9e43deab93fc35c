"""Hot inner loops with two interchangeable backends.

The exhaustive scans (batched determinants over GF(q), syndrome-class
deep-hole scans, codeword enumeration, batched Hamming minima) dominate
runtime.  Each has a numba @njit implementation and a pure-numpy
vectorized fallback.  Selection:

    TRSLAB_BACKEND=numba   force the jitted kernels (default when numba imports)
    TRSLAB_BACKEND=numpy   force the vectorized fallback

or programmatically via set_backend().  Both backends are exact and
return identical arrays; benchmarks/bench_kernels.py compares them.

All kernels receive field arithmetic as dense tables (KernelTables):
add/mul are q x q int32 matrices, neg/inv length-q vectors.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

try:
    # this box's TBB is too old for numba's TBB layer; numba falls back
    # to another threading layer, so the warning is just noise
    warnings.filterwarnings("ignore", message=".*TBB.*", module="numba.*")
    from numba import njit, prange

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap

    prange = range


_backend = None


def get_backend() -> str:
    global _backend
    if _backend is None:
        env = os.environ.get("TRSLAB_BACKEND", "").strip().lower()
        if env in ("numba", "numpy"):
            _backend = env
        else:
            _backend = "numba" if HAVE_NUMBA else "numpy"
    if _backend == "numba" and not HAVE_NUMBA:
        return "numpy"
    return _backend


def set_backend(name: str | None):
    """Override backend selection ('numba', 'numpy', or None to re-read env)."""
    global _backend
    if name not in ("numba", "numpy", None):
        raise ValueError(f"unknown backend {name!r}")
    _backend = name


# ---------------------------------------------------------------------------
# batched determinants over GF(q)
# ---------------------------------------------------------------------------


@njit(cache=True)
def _det_batch_nb(mats, add_t, mul_t, inv_t, neg_t):
    B, r, _ = mats.shape
    out = np.zeros(B, dtype=np.int64)
    for b in range(B):
        a = mats[b].copy()
        det = 1
        for col in range(r):
            piv = -1
            for row in range(col, r):
                if a[row, col] != 0:
                    piv = row
                    break
            if piv < 0:
                det = 0
                break
            if piv != col:
                for cc in range(col, r):
                    tmp = a[col, cc]
                    a[col, cc] = a[piv, cc]
                    a[piv, cc] = tmp
                det = mul_t[det, neg_t[1]]
            pv = a[col, col]
            det = mul_t[det, pv]
            pinv = inv_t[pv]
            for row in range(col + 1, r):
                f = mul_t[a[row, col], pinv]
                if f != 0:
                    for cc in range(col, r):
                        a[row, cc] = add_t[a[row, cc], neg_t[mul_t[f, a[col, cc]]]]
        out[b] = det
    return out


def _det_batch_np(mats, add_t, mul_t, inv_t, neg_t):
    a = mats.astype(np.int64).copy()
    B, r, _ = a.shape
    det = np.ones(B, dtype=np.int64)
    alive = np.ones(B, dtype=bool)
    for col in range(r):
        sub = a[:, col:, col]
        nz = sub != 0
        has = nz.any(axis=1)
        det[alive & ~has] = 0
        alive &= has
        if not alive.any():
            break
        piv_off = nz.argmax(axis=1)
        rows = np.arange(B)
        piv_row = col + piv_off
        swap = alive & (piv_off > 0)
        if swap.any():
            tmp = a[rows[swap], piv_row[swap], :].copy()
            a[rows[swap], piv_row[swap], :] = a[rows[swap], col, :]
            a[rows[swap], col, :] = tmp
            det[swap] = mul_t[det[swap], neg_t[1]]
        pv = a[:, col, col]
        det[alive] = mul_t[det[alive], pv[alive]]
        pinv = np.where(alive, inv_t[pv], 0)
        f = mul_t[a[:, col + 1 :, col], pinv[:, None]]
        prod = mul_t[f[:, :, None], a[:, col, None, col:]]
        a[:, col + 1 :, col:] = add_t[a[:, col + 1 :, col:], neg_t[prod]]
    return det


def det_batch(tables, mats) -> np.ndarray:
    """Determinants of a (B, r, r) stack of matrices of element indices."""
    mats = np.ascontiguousarray(mats, dtype=np.int32)
    if mats.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if mats.shape[1] == 0:
        return np.ones(mats.shape[0], dtype=np.int64)
    if get_backend() == "numba":
        return _det_batch_nb(mats, tables.add, tables.mul, tables.inv, tables.neg)
    return _det_batch_np(mats, tables.add, tables.mul, tables.inv, tables.neg)


# ---------------------------------------------------------------------------
# deep-hole scan: first vanishing subset per syndrome class
# ---------------------------------------------------------------------------


@njit(cache=True, parallel=True)
def _scan_nb(mu, classes, add_t, mul_t):
    S, r = mu.shape
    C = classes.shape[0]
    out = np.full(C, -1, dtype=np.int64)
    for c in prange(C):
        w = classes[c]
        for s in range(S):
            acc = 0
            for i in range(r):
                acc = add_t[acc, mul_t[mu[s, i], w[i]]]
            if acc == 0:
                out[c] = s
                break
    return out


def _scan_np(mu, classes, add_t, mul_t, block=256):
    S, r = mu.shape
    C = classes.shape[0]
    out = np.full(C, -1, dtype=np.int64)
    survivors = np.arange(C)
    w = classes.astype(np.int64)
    for start in range(0, S, block):
        if survivors.size == 0:
            break
        chunk = mu[start : start + block].astype(np.int64)
        acc = np.zeros((chunk.shape[0], survivors.size), dtype=np.int64)
        for i in range(r):
            acc = add_t[acc, mul_t[chunk[:, i, None], w[survivors, i][None, :]]]
        zero = acc == 0
        hit = zero.any(axis=0)
        if hit.any():
            first = zero.argmax(axis=0)
            out[survivors[hit]] = start + first[hit]
            survivors = survivors[~hit]
    return out


def scan_syndromes(tables, mu, classes) -> np.ndarray:
    """For each syndrome class, index of the first subset whose bordered
    determinant vanishes, or -1 if none does (deep hole).

    mu is the (S, r) matrix of cofactor weights: det(subset | w) = sum_i mu[s,i]*w[i].
    Subset order is the caller's (lexicographic); -1 means every determinant
    was nonzero.
    """
    mu = np.ascontiguousarray(mu, dtype=np.int32)
    classes = np.ascontiguousarray(classes, dtype=np.int32)
    if classes.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if get_backend() == "numba":
        return _scan_nb(mu, classes, tables.add, tables.mul)
    return _scan_np(mu, classes, tables.add, tables.mul)


# ---------------------------------------------------------------------------
# codeword enumeration
# ---------------------------------------------------------------------------


@njit(cache=True)
def _codewords_nb(G, q, add_t, mul_t):
    k, n = G.shape
    M = 1
    for _ in range(k):
        M *= q
    out = np.zeros((M, n), dtype=np.int32)
    for idx in range(M):
        t = idx
        for i in range(k):
            d = t % q
            t //= q
            if d != 0:
                for j in range(n):
                    out[idx, j] = add_t[out[idx, j], mul_t[d, G[i, j]]]
    return out


def _codewords_np(G, q, add_t, mul_t):
    k, n = G.shape
    M = q**k
    out = np.zeros((M, n), dtype=np.int64)
    idx = np.arange(M)
    for i in range(k):
        d = (idx // q**i) % q
        out = add_t[out, mul_t[d[:, None], G[i][None, :]]]
    return out.astype(np.int32)


def enumerate_codewords(tables, G) -> np.ndarray:
    """All q^k codewords of the code generated by G, in message-index order."""
    G = np.ascontiguousarray(G, dtype=np.int32)
    if get_backend() == "numba":
        return _codewords_nb(G, tables.q, tables.add, tables.mul)
    return _codewords_np(G, tables.q, tables.add, tables.mul)


# ---------------------------------------------------------------------------
# batched minimum Hamming distance
# ---------------------------------------------------------------------------


@njit(cache=True, parallel=True)
def _min_hamming_nb(words, codewords):
    W, n = words.shape
    M = codewords.shape[0]
    out = np.empty(W, dtype=np.int64)
    for wi in prange(W):
        best = n + 1
        for m in range(M):
            d = 0
            for j in range(n):
                if words[wi, j] != codewords[m, j]:
                    d += 1
                    if d >= best:
                        break
            if d < best:
                best = d
                if best == 0:
                    break
        out[wi] = best
    return out


def _min_hamming_np(words, codewords, cell_budget=1 << 24):
    W, n = words.shape
    M = codewords.shape[0]
    out = np.full(W, n + 1, dtype=np.int64)
    chunk = max(1, cell_budget // max(1, W * n))
    for start in range(0, M, chunk):
        cw = codewords[start : start + chunk]
        d = (words[:, None, :] != cw[None, :, :]).sum(axis=2).min(axis=1)
        np.minimum(out, d, out=out)
    return out


def min_hamming(words, codewords) -> np.ndarray:
    """Per-word minimum Hamming distance to any row of codewords."""
    words = np.ascontiguousarray(words, dtype=np.int32)
    codewords = np.ascontiguousarray(codewords, dtype=np.int32)
    if words.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if get_backend() == "numba":
        return _min_hamming_nb(words, codewords)
    return _min_hamming_np(words, codewords)


def warmup(tables):
    """Trigger JIT compilation of every kernel on tiny inputs."""
    q = tables.q
    m = np.zeros((1, 2, 2), dtype=np.int32)
    m[0, 0, 0] = 1
    m[0, 1, 1] = 1 % q
    det_batch(tables, m)
    scan_syndromes(tables, np.ones((1, 2), dtype=np.int32), np.ones((1, 2), dtype=np.int32))
    G = np.ones((1, 2), dtype=np.int32)
    cw = enumerate_codewords(tables, G)
    min_hamming(cw[:1], cw)
