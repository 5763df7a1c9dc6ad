"""Kernel backend selection.

IDEALSAT_BACKEND controls which kernel module runs the hot loops:

  auto   (default) numba if it imports, numpy otherwise
  numba  require the jitted kernels, fail if numba is unavailable
  numpy  force the pure-numpy fallback

The choice is cached on first use; set_backend() overrides it in-process
(used by the benchmark and by tests).
"""
import os

_kernels = None


def get_kernels():
    global _kernels
    if _kernels is None:
        _kernels = _load(os.environ.get("IDEALSAT_BACKEND", "auto").strip().lower())
    return _kernels


def backend_name() -> str:
    return get_kernels().NAME


def set_backend(choice: str) -> None:
    """Force a backend ('numba' or 'numpy'), bypassing the environment."""
    global _kernels
    _kernels = _load(choice)


def _load(choice: str):
    if choice in ("", "auto"):
        try:
            from . import _kernels_numba as mod
        except ImportError:
            from . import _kernels_numpy as mod
        return mod
    if choice == "numba":
        from . import _kernels_numba as mod
        return mod
    if choice == "numpy":
        from . import _kernels_numpy as mod
        return mod
    raise ValueError(f"unknown backend {choice!r}, expected auto, numba or numpy")
