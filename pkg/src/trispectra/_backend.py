"""Pick the kernel implementation once, at import time.

The compiled extension is preferred; set ``TRISPECTRA_PURE=1`` to force the
pure-Python kernels (the benchmark and the backend-agreement tests do this
explicitly through :func:`load`).
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType


def load(name: str | None = None) -> ModuleType:
    """Return the kernel module ``"cython"`` or ``"python"``; default: best available."""
    if name == "python":
        return importlib.import_module("trispectra._pykernels")
    if name == "cython":
        return importlib.import_module("trispectra._kernels")
    if os.environ.get("TRISPECTRA_PURE", "") not in ("", "0"):
        return importlib.import_module("trispectra._pykernels")
    try:
        return importlib.import_module("trispectra._kernels")
    except ImportError:
        return importlib.import_module("trispectra._pykernels")


kernels = load()
BACKEND = "cython" if kernels.__name__.endswith("._kernels") else "python"


def compiled_available() -> bool:
    try:
        importlib.import_module("trispectra._kernels")
    except ImportError:
        return False
    return True
