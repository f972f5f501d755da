"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``APCUBES_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernel_py

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

KERNELS: dict[str, ModuleType] = {"python": _kernel_py}
if _compiled is not None:
    KERNELS["cython"] = _compiled


def default_kernel_name() -> str:
    if os.environ.get("APCUBES_PURE_PYTHON") or _compiled is None:
        return "python"
    return "cython"


def get_kernel(name: str | None = None) -> ModuleType:
    name = name or default_kernel_name()
    try:
        return KERNELS[name]
    except KeyError:
        raise ValueError(f"kernel {name!r} unavailable; have {sorted(KERNELS)}") from None
