"""Kernel selection: the compiled module when importable, else pure Python.

Set ``VERTEXLAB_PURE=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("VERTEXLAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

enum_region_6v = _impl.enum_region_6v
count_region_6v = _impl.count_region_6v
enum_dwbc_20v = _impl.enum_dwbc_20v
count_dwbc_20v = _impl.count_dwbc_20v

__all__ = [
    "BACKEND",
    "enum_region_6v",
    "count_region_6v",
    "enum_dwbc_20v",
    "count_dwbc_20v",
]
