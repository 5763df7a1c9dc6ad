"""Numba-jitted implementations of the hot exponent-matrix kernels.

Same contract as _kernels_numpy; plain nested loops with early exits,
which is where the jit pays off.
"""
import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def minimal_rows_mask(mat):
    m, n = mat.shape
    keep = np.ones(m, dtype=np.bool_)
    kept_idx = np.empty(m, dtype=np.int64)
    kc = 0
    for i in range(m):
        dominated = False
        for t in range(kc):
            r = kept_idx[t]
            divides = True
            for j in range(n):
                if mat[r, j] > mat[i, j]:
                    divides = False
                    break
            if divides:
                dominated = True
                break
        if dominated:
            keep[i] = False
        else:
            kept_idx[kc] = i
            kc += 1
    return keep


@njit(cache=True)
def divides_any(mat, w):
    m, n = mat.shape
    for i in range(m):
        ok = True
        for j in range(n):
            if mat[i, j] > w[j]:
                ok = False
                break
        if ok:
            return True
    return False


@njit(cache=True)
def membership_mask(mat, queries):
    m, n = mat.shape
    q = queries.shape[0]
    out = np.zeros(q, dtype=np.bool_)
    for t in range(q):
        for i in range(m):
            ok = True
            for j in range(n):
                if mat[i, j] > queries[t, j]:
                    ok = False
                    break
            if ok:
                out[t] = True
                break
    return out


@njit(cache=True)
def pairwise_lcm(a, b):
    ma, n = a.shape
    mb = b.shape[0]
    out = np.empty((ma * mb, n), dtype=np.int64)
    t = 0
    for i in range(ma):
        for j in range(mb):
            for c in range(n):
                x = a[i, c]
                y = b[j, c]
                out[t, c] = x if x >= y else y
            t += 1
    return out


@njit(cache=True)
def pairwise_product(a, b):
    ma, n = a.shape
    mb = b.shape[0]
    out = np.empty((ma * mb, n), dtype=np.int64)
    t = 0
    for i in range(ma):
        for j in range(mb):
            for c in range(n):
                out[t, c] = a[i, c] + b[j, c]
            t += 1
    return out
