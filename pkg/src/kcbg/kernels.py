"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module is used.  Setting ``KCBG_PURE_PYTHON=1``
forces the fallback.
"""
from __future__ import annotations

import os
from types import ModuleType

from kcbg import _pykernels


def _select() -> tuple[ModuleType, str]:
    if os.environ.get("KCBG_PURE_PYTHON", "") not in ("", "0"):
        return _pykernels, "python"
    try:
        from kcbg import _ckernels
    except ImportError:
        return _pykernels, "python"
    return _ckernels, "cython"


impl, BACKEND = _select()


def backends() -> dict[str, ModuleType]:
    """All importable backends by name; used by tests and the benchmark."""
    found = {"python": _pykernels}
    try:
        from kcbg import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
