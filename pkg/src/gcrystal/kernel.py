"""Kernel selection: compiled extension when available, pure Python otherwise.

Set GCRYSTAL_PURE_PYTHON=1 to force the fallback.  Rings whose modulus p^N
exceeds the compiled kernel's 62-bit limit are routed to the pure kernel
per ring (see WittRing._pick_kernel).
"""

from __future__ import annotations

import os

from . import _kernel_py

_speedups = None
if os.environ.get("GCRYSTAL_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _speedups as _speedups  # type: ignore[no-redef]
    except ImportError:
        _speedups = None

PURE = _kernel_py
COMPILED = _speedups
ACTIVE = _speedups if _speedups is not None else _kernel_py


def kernel_for_modulus(pn: int):
    """Best kernel able to handle residues mod pn."""
    if COMPILED is not None and pn < COMPILED.MAX_MODULUS:
        return COMPILED
    return PURE
