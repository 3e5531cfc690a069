"""Kernel backend selection: compiled extension when available, pure Python otherwise.

The active backend is chosen once at import (honoring ``NULLFOREST_BACKEND``)
and can be switched later with :func:`set_backend`, which the benchmark CLI
uses to time both implementations against each other.
"""

from __future__ import annotations

import os

from . import _kernels as _py

try:
    from . import _speedups as _ext
except ImportError:  # extension not built; pure-Python kernels take over
    _ext = None


def _resolve(name: str):
    name = (name or "auto").strip().lower()
    if name == "auto":
        return _ext if _ext is not None else _py
    if name in ("ext", "compiled", "speedups"):
        if _ext is None:
            raise RuntimeError(
                "compiled backend requested but nullforest._speedups is not built"
            )
        return _ext
    if name in ("py", "python", "pure"):
        return _py
    raise ValueError(f"unknown backend {name!r} (expected auto, ext, or py)")


_impl = _resolve(os.environ.get("NULLFOREST_BACKEND", "auto"))


def impl():
    """The module providing the kernel functions for the active backend."""
    return _impl


def backend_name() -> str:
    return "py" if _impl is _py else "ext"


def available_backends() -> tuple[str, ...]:
    return ("py",) if _ext is None else ("py", "ext")


def set_backend(name: str) -> str:
    """Switch kernels globally; returns the resolved backend name.

    Not thread safe: intended for benchmarks and tests, not for flipping
    backends while other threads compute.
    """
    global _impl
    _impl = _resolve(name)
    return backend_name()
