"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the numpy
versions take over. Setting EXTMDS_BACKEND=python forces the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None


def get_backend(name: str | None = None) -> ModuleType:
    name = name or os.environ.get("EXTMDS_BACKEND", "auto")
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernels are not available")
        return _compiled
    if name != "auto":
        raise ValueError(f"unknown backend {name!r}")
    return _compiled if _compiled is not None else _pykernels


def available_backends() -> list[str]:
    return (["compiled"] if _compiled is not None else []) + ["python"]


backend = get_backend()
BACKEND = "compiled" if backend is _compiled else "python"
