"""Kernel selection: compiled extension when available, numpy fallback otherwise.

The default backend is picked once at import. ``QSTACK_KERNEL`` may be set to
``native`` or ``python`` to force a choice (``native`` raises if the extension
did not build).
"""

from __future__ import annotations

import os

from . import kernels_py

try:
    from . import _kernels as _native
except ImportError:
    _native = None

HAVE_NATIVE = _native is not None


def get_kernels(name: str = "auto"):
    """Resolve a kernel module by name: auto, native, or python."""
    if name == "auto":
        return _native if _native is not None else kernels_py
    if name == "native":
        if _native is None:
            raise RuntimeError("compiled kernels are not available in this install")
        return _native
    if name == "python":
        return kernels_py
    raise ValueError(f"unknown kernel backend {name!r}")


DEFAULT = get_kernels(os.environ.get("QSTACK_KERNEL", "auto"))
