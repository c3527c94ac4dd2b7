"""Kernel selection: compiled Cython core when available, else pure Python.

Set ``VACUUM_BASIS_PURE=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
max_path_load = _pykernels.max_path_load
reduce_row = _pykernels.reduce_row

if not os.environ.get("VACUUM_BASIS_PURE"):
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        max_path_load = _kernels.max_path_load
        reduce_row = _kernels.reduce_row

__all__ = ["BACKEND", "max_path_load", "reduce_row"]
