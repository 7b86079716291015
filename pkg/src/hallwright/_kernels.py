"""Finite-field linear algebra kernels.

Each kernel exists twice: a loop version compiled with ``numba.njit`` and a
vectorised numpy version.  The numba path is used unless the environment
variable ``HALLWRIGHT_NUMBA`` is set to ``0`` (or numba is unavailable).
Field arithmetic goes through the lookup tables of
:class:`hallwright.fields.FiniteField`.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("HALLWRIGHT_NUMBA", "1") != "0"


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy implementations


def _rref_np(mat, add, mul, neg, inv):
    a = np.array(mat, dtype=np.int64, copy=True)
    rows, cols = a.shape
    sub = add[:, neg]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = mul[inv[a[r, c]], a[r]]
        coef = a[:, c].copy()
        coef[r] = 0
        if coef.any():
            a = sub[a, mul[coef[:, None], a[r][None, :]]]
        pivots.append(c)
        r += 1
    return a, np.array(pivots, dtype=np.int64)


def _rank_np(mat, add, mul, neg, inv):
    return len(_rref_np(mat, add, mul, neg, inv)[1])


def _matmul_np(a, b, add, mul):
    n = a.shape[1]
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for j in range(n):
        out = add[out, mul[a[:, j][:, None], b[j][None, :]]]
    return out


def _apply_rows_np(amat, rows, add, mul):
    """Image of each row vector under ``amat``: rows (N, k, n) -> (N, k, m)."""
    n_items, k, n = rows.shape
    m = amat.shape[0]
    out = np.zeros((n_items, k, m), dtype=np.int64)
    for j in range(n):
        out = add[out, mul[amat[None, None, :, j], rows[:, :, j][:, :, None]]]
    return out


def _reduce_zero_mask_np(vecs, bases, pivots, add, mul, neg):
    """True where every vector in ``vecs[i]`` lies in the span of ``bases[i]``.

    ``bases`` (N or 1, k, m) are in reduced row echelon form with pivot
    columns ``pivots`` (N or 1, k).
    """
    sub = add[:, neg]
    v = vecs.copy()
    n_items = v.shape[0]
    k = bases.shape[1]
    if bases.shape[0] == 1 and n_items != 1:
        bases = np.broadcast_to(bases, (n_items,) + bases.shape[1:])
        pivots = np.broadcast_to(pivots, (n_items,) + pivots.shape[1:])
    idx = np.arange(n_items)
    for j in range(k):
        pcol = pivots[:, j]
        coef = v[idx, :, pcol]  # (N, r)
        row = bases[:, j, :]  # (N, m)
        v = sub[v, mul[coef[:, :, None], row[:, None, :]]]
    return ~v.reshape(n_items, -1).any(axis=1)


def _reduce_rows_np(vecs, bases, pivots, add, mul, neg):
    """Reduce each row of ``vecs[i]`` modulo the RREF span ``bases[i]``."""
    sub = add[:, neg]
    v = vecs.copy()
    n_items = v.shape[0]
    k = bases.shape[1]
    if bases.shape[0] == 1 and n_items != 1:
        bases = np.broadcast_to(bases, (n_items,) + bases.shape[1:])
        pivots = np.broadcast_to(pivots, (n_items,) + pivots.shape[1:])
    idx = np.arange(n_items)
    for j in range(k):
        coef = v[idx, :, pivots[:, j]]
        v = sub[v, mul[coef[:, :, None], bases[:, j, :][:, None, :]]]
    return v


def _batch_rank_np(mats, add, mul, neg, inv):
    a = mats.copy()
    n_items, rows, cols = a.shape
    r = np.zeros(n_items, dtype=np.int64)
    idx = np.arange(n_items)
    row_ids = np.arange(rows)
    for c in range(cols):
        cand = (a[:, :, c] != 0) & (row_ids[None, :] >= r[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        sel = idx[has]
        rr = r[has]
        pp = np.argmax(cand[has], axis=1)
        tmp = a[sel, rr].copy()
        a[sel, rr] = a[sel, pp]
        a[sel, pp] = tmp
        piv = a[sel, rr, c]
        prow = mul[inv[piv][:, None], a[sel, rr]]
        a[sel, rr] = prow
        f = a[sel, :, c].copy()
        f[np.arange(len(sel)), rr] = 0
        a[sel] = add[a[sel], mul[neg[f][:, :, None], prow[:, None, :]]]
        r[has] += 1
    return r


def _batch_path_ranks_np(mats, maxlen, add, mul, neg, inv):
    """ranks[s, i, a-1] = rank of the length-a path starting at vertex i.

    ``mats[s, i]`` is the (padded) map from vertex i to vertex i+1 mod n.
    """
    n_items, n, dd, _ = mats.shape
    out = np.zeros((n_items, n, maxlen), dtype=np.int64)
    for i in range(n):
        p = mats[:, i].copy()
        for a in range(1, maxlen + 1):
            out[:, i, a - 1] = _batch_rank_np(p, add, mul, neg, inv)
            nxt = mats[:, (i + a) % n]
            acc = np.zeros_like(p)
            for j in range(dd):
                acc = add[acc, mul[nxt[:, :, j][:, :, None], p[:, j, :][:, None, :]]]
            p = acc
    return out


# ---------------------------------------------------------------------------
# numba implementations

if HAVE_NUMBA:

    @njit(cache=True)
    def _rref_nb(mat, add, mul, neg, inv):
        a = mat.copy()
        rows, cols = a.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            p = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    p = i
                    break
            if p < 0:
                continue
            if p != r:
                for j in range(cols):
                    t = a[r, j]
                    a[r, j] = a[p, j]
                    a[p, j] = t
            s = inv[a[r, c]]
            for j in range(cols):
                a[r, j] = mul[s, a[r, j]]
            for i in range(rows):
                if i != r and a[i, c] != 0:
                    f = neg[a[i, c]]
                    for j in range(cols):
                        a[i, j] = add[a[i, j], mul[f, a[r, j]]]
            pivots[r] = c
            r += 1
        return a, pivots[:r].copy()

    @njit(cache=True)
    def _rank_nb(mat, add, mul, neg, inv):
        a = mat.copy()
        rows, cols = a.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            p = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    p = i
                    break
            if p < 0:
                continue
            if p != r:
                for j in range(cols):
                    t = a[r, j]
                    a[r, j] = a[p, j]
                    a[p, j] = t
            s = inv[a[r, c]]
            for j in range(cols):
                a[r, j] = mul[s, a[r, j]]
            for i in range(r + 1, rows):
                if a[i, c] != 0:
                    f = neg[a[i, c]]
                    for j in range(c, cols):
                        a[i, j] = add[a[i, j], mul[f, a[r, j]]]
            r += 1
        return r

    @njit(cache=True)
    def _matmul_nb(a, b, add, mul):
        n, k = a.shape
        m = b.shape[1]
        out = np.zeros((n, m), dtype=np.int64)
        for i in range(n):
            for j in range(m):
                acc = 0
                for t in range(k):
                    acc = add[acc, mul[a[i, t], b[t, j]]]
                out[i, j] = acc
        return out

    @njit(cache=True)
    def _apply_rows_nb(amat, rows, add, mul):
        n_items, k, n = rows.shape
        m = amat.shape[0]
        out = np.zeros((n_items, k, m), dtype=np.int64)
        for s in range(n_items):
            for r in range(k):
                for i in range(m):
                    acc = 0
                    for j in range(n):
                        acc = add[acc, mul[amat[i, j], rows[s, r, j]]]
                    out[s, r, i] = acc
        return out

    @njit(cache=True)
    def _reduce_zero_mask_nb(vecs, bases, pivots, add, mul, neg):
        n_items, nv, m = vecs.shape
        k = bases.shape[1]
        shared = bases.shape[0] == 1
        out = np.ones(n_items, dtype=np.bool_)
        buf = np.empty(m, dtype=np.int64)
        for s in range(n_items):
            b = 0 if shared else s
            ok = True
            for r in range(nv):
                for j in range(m):
                    buf[j] = vecs[s, r, j]
                for t in range(k):
                    c = buf[pivots[b, t]]
                    if c != 0:
                        f = neg[c]
                        for j in range(m):
                            buf[j] = add[buf[j], mul[f, bases[b, t, j]]]
                for j in range(m):
                    if buf[j] != 0:
                        ok = False
                        break
                if not ok:
                    break
            out[s] = ok
        return out


    @njit(cache=True)
    def _reduce_rows_nb(vecs, bases, pivots, add, mul, neg):
        n_items, nv, m = vecs.shape
        k = bases.shape[1]
        shared = bases.shape[0] == 1
        out = vecs.copy()
        for s in range(n_items):
            b = 0 if shared else s
            for r in range(nv):
                for t in range(k):
                    c = out[s, r, pivots[b, t]]
                    if c != 0:
                        f = neg[c]
                        for j in range(m):
                            out[s, r, j] = add[out[s, r, j], mul[f, bases[b, t, j]]]
        return out

    @njit(cache=True)
    def _batch_rank_nb(mats, add, mul, neg, inv):
        n_items = mats.shape[0]
        out = np.empty(n_items, dtype=np.int64)
        for s in range(n_items):
            out[s] = _rank_nb(mats[s], add, mul, neg, inv)
        return out

    @njit(cache=True)
    def _batch_path_ranks_nb(mats, maxlen, add, mul, neg, inv):
        n_items, n, dd, _ = mats.shape
        out = np.zeros((n_items, n, maxlen), dtype=np.int64)
        p = np.empty((dd, dd), dtype=np.int64)
        acc = np.empty((dd, dd), dtype=np.int64)
        for s in range(n_items):
            for i in range(n):
                for x in range(dd):
                    for y in range(dd):
                        p[x, y] = mats[s, i, x, y]
                for a in range(1, maxlen + 1):
                    r = _rank_nb(p, add, mul, neg, inv)
                    out[s, i, a - 1] = r
                    if r == 0:
                        break
                    v = (i + a) % n
                    for x in range(dd):
                        for y in range(dd):
                            t = 0
                            for j in range(dd):
                                t = add[t, mul[mats[s, v, x, j], p[j, y]]]
                            acc[x, y] = t
                    for x in range(dd):
                        for y in range(dd):
                            p[x, y] = acc[x, y]
        return out


# ---------------------------------------------------------------------------
# dispatch


def _empty_guard(shape):
    return 0 in shape


def rref(mat, fld):
    mat = np.asarray(mat, dtype=np.int64)
    if _empty_guard(mat.shape):
        return mat.copy(), np.zeros(0, dtype=np.int64)
    if USE_NUMBA:
        return _rref_nb(mat, fld.add, fld.mul, fld.neg, fld.inv)
    return _rref_np(mat, fld.add, fld.mul, fld.neg, fld.inv)


def rank(mat, fld) -> int:
    mat = np.asarray(mat, dtype=np.int64)
    if _empty_guard(mat.shape):
        return 0
    if USE_NUMBA:
        return int(_rank_nb(mat, fld.add, fld.mul, fld.neg, fld.inv))
    return _rank_np(mat, fld.add, fld.mul, fld.neg, fld.inv)


def matmul(a, b, fld):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if _empty_guard(a.shape) or _empty_guard(b.shape):
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if USE_NUMBA:
        return _matmul_nb(a, b, fld.add, fld.mul)
    return _matmul_np(a, b, fld.add, fld.mul)


def apply_rows(amat, rows, fld):
    amat = np.asarray(amat, dtype=np.int64)
    rows = np.asarray(rows, dtype=np.int64)
    if _empty_guard(rows.shape) or amat.shape[0] == 0:
        return np.zeros(rows.shape[:2] + (amat.shape[0],), dtype=np.int64)
    if USE_NUMBA:
        return _apply_rows_nb(amat, rows, fld.add, fld.mul)
    return _apply_rows_np(amat, rows, fld.add, fld.mul)


def reduce_zero_mask(vecs, bases, pivots, fld):
    vecs = np.ascontiguousarray(vecs, dtype=np.int64)
    bases = np.ascontiguousarray(bases, dtype=np.int64)
    pivots = np.ascontiguousarray(pivots, dtype=np.int64)
    n_items = vecs.shape[0]
    if n_items == 0:
        return np.zeros(0, dtype=bool)
    if vecs.shape[1] == 0 or vecs.shape[2] == 0:
        return np.ones(n_items, dtype=bool)
    if USE_NUMBA:
        return _reduce_zero_mask_nb(vecs, bases, pivots, fld.add, fld.mul, fld.neg)
    return _reduce_zero_mask_np(vecs, bases, pivots, fld.add, fld.mul, fld.neg)


def reduce_rows(vecs, bases, pivots, fld):
    vecs = np.ascontiguousarray(vecs, dtype=np.int64)
    bases = np.ascontiguousarray(bases, dtype=np.int64)
    pivots = np.ascontiguousarray(pivots, dtype=np.int64)
    if 0 in vecs.shape or bases.shape[1] == 0:
        return vecs.copy()
    if USE_NUMBA:
        return _reduce_rows_nb(vecs, bases, pivots, fld.add, fld.mul, fld.neg)
    return _reduce_rows_np(vecs, bases, pivots, fld.add, fld.mul, fld.neg)


def batch_rank(mats, fld):
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    if mats.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if 0 in mats.shape[1:]:
        return np.zeros(mats.shape[0], dtype=np.int64)
    if USE_NUMBA:
        return _batch_rank_nb(mats, fld.add, fld.mul, fld.neg, fld.inv)
    return _batch_rank_np(mats, fld.add, fld.mul, fld.neg, fld.inv)


def batch_path_ranks(mats, maxlen, fld):
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    n_items, n, dd, _ = mats.shape
    if n_items == 0 or dd == 0 or maxlen == 0:
        return np.zeros((n_items, n, maxlen), dtype=np.int64)
    if USE_NUMBA:
        return _batch_path_ranks_nb(mats, maxlen, fld.add, fld.mul, fld.neg, fld.inv)
    return _batch_path_ranks_np(mats, maxlen, fld.add, fld.mul, fld.neg, fld.inv)
