"""numpy and numba kernels must agree bit for bit."""
import os
import subprocess
import sys

import numpy as np
import pytest

from idealsat import _kernels_numpy

numba_kernels = pytest.importorskip("idealsat._kernels_numba")


def _prepared_matrix(rng, rows, cols, top):
    mat = rng.integers(0, top, size=(rows, cols)).astype(np.int64)
    mat = np.unique(mat, axis=0)
    order = np.argsort(mat.sum(axis=1), kind="stable")
    return np.ascontiguousarray(mat[order])


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_minimal_rows_mask_parity(seed):
    rng = np.random.default_rng(seed)
    mat = _prepared_matrix(rng, 200, 4, 5)
    a = _kernels_numpy.minimal_rows_mask(mat)
    b = numba_kernels.minimal_rows_mask(mat)
    assert np.array_equal(a, np.asarray(b))


@pytest.mark.parametrize("seed", [3, 4])
def test_membership_parity(seed):
    rng = np.random.default_rng(seed)
    mat = _prepared_matrix(rng, 60, 5, 4)
    queries = rng.integers(0, 8, size=(300, 5)).astype(np.int64)
    a = _kernels_numpy.membership_mask(mat, queries)
    b = numba_kernels.membership_mask(mat, queries)
    assert np.array_equal(a, np.asarray(b))
    for q in queries[:20]:
        assert _kernels_numpy.divides_any(mat, q) == bool(numba_kernels.divides_any(mat, q))


def test_pairwise_parity():
    rng = np.random.default_rng(5)
    a = rng.integers(0, 5, size=(17, 3)).astype(np.int64)
    b = rng.integers(0, 5, size=(9, 3)).astype(np.int64)
    assert np.array_equal(_kernels_numpy.pairwise_lcm(a, b), numba_kernels.pairwise_lcm(a, b))
    assert np.array_equal(_kernels_numpy.pairwise_product(a, b),
                          numba_kernels.pairwise_product(a, b))


def test_empty_inputs():
    empty = np.empty((0, 3), dtype=np.int64)
    w = np.array([1, 2, 3], dtype=np.int64)
    assert not _kernels_numpy.divides_any(empty, w)
    assert not bool(numba_kernels.divides_any(empty, w))
    assert _kernels_numpy.minimal_rows_mask(empty).shape == (0,)
    assert np.asarray(numba_kernels.minimal_rows_mask(empty)).shape == (0,)


def test_env_flag_selects_backend():
    code = "import idealsat; print(idealsat.backend_name())"
    for choice in ("numpy", "numba"):
        env = dict(os.environ, IDEALSAT_BACKEND=choice)
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True)
        assert out.returncode == 0, out.stderr
        assert out.stdout.strip() == choice


def test_set_backend_in_process():
    from idealsat import backend
    before = backend.backend_name()
    try:
        backend.set_backend("numpy")
        assert backend.backend_name() == "numpy"
        with pytest.raises(ValueError):
            backend.set_backend("fortran")
    finally:
        backend.set_backend(before)


def test_numpy_backend_end_to_end():
    # a full saturation under the fallback kernels, in a subprocess
    code = (
        "import idealsat as s; "
        "assert s.backend_name() == 'numpy'; "
        "I = s.parse_ideal('n=3; (x1*x2, x1*x3, x2*x3)') ** 4; "
        "print(s.saturate(I).sat_number)"
    )
    env = dict(os.environ, IDEALSAT_BACKEND="numpy")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "2"
