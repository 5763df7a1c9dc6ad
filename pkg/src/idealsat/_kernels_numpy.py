"""Pure-numpy implementations of the hot exponent-matrix kernels.

The numba backend (_kernels_numba) exposes the same five functions with
identical semantics; idealsat.backend picks one of the two at runtime.
All matrices are C-contiguous int64 arrays with one exponent vector per row.
"""
import numpy as np

# Element budget per broadcast block, keeps peak memory flat.
_CHUNK = 1 << 18

NAME = "numpy"


def minimal_rows_mask(mat: np.ndarray) -> np.ndarray:
    """Mask of divisibility-minimal rows.

    Rows must be distinct and sorted by ascending total degree, so any
    divisor of a row appears before it.
    """
    m = mat.shape[0]
    keep = np.ones(m, dtype=np.bool_)
    if m <= 1:
        return keep
    kept = np.empty_like(mat)
    kc = 0
    for i in range(m):
        row = mat[i]
        if kc and bool((kept[:kc] <= row).all(axis=1).any()):
            keep[i] = False
        else:
            kept[kc] = row
            kc += 1
    return keep


def divides_any(mat: np.ndarray, w: np.ndarray) -> bool:
    """True when some row of mat divides the vector w componentwise."""
    if mat.shape[0] == 0:
        return False
    return bool((mat <= w).all(axis=1).any())


def membership_mask(mat: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """For each query row, whether some row of mat divides it."""
    q = queries.shape[0]
    out = np.zeros(q, dtype=np.bool_)
    if mat.shape[0] == 0 or q == 0:
        return out
    step = max(1, _CHUNK // mat.shape[0])
    for s in range(0, q, step):
        block = queries[s:s + step]
        out[s:s + step] = (block[:, None, :] >= mat[None, :, :]).all(axis=2).any(axis=1)
    return out


def pairwise_lcm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Componentwise maxima of every row of a with every row of b."""
    return np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, a.shape[1])


def pairwise_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Componentwise sums of every row of a with every row of b."""
    return (a[:, None, :] + b[None, :, :]).reshape(-1, a.shape[1])
