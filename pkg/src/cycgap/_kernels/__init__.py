"""Kernel backend selection.

The hot loops (dense multiply, exact division, monic remainder) exist twice:
a Cython extension (`_speedups`) and a pure-Python fallback (`_pure`) with
identical semantics.  The compiled backend is preferred when importable;
set CYCGAP_BACKEND=pure or CYCGAP_BACKEND=compiled to force one.
"""

import os

from . import _pure


def _load(name):
    if name == "pure":
        return _pure
    if name == "compiled":
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown backend {name!r} (expected 'pure' or 'compiled')")


_forced = os.environ.get("CYCGAP_BACKEND")
if _forced:
    _impl = _load(_forced)
else:
    try:
        _impl = _load("compiled")
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND
INT64_MIN = _impl.INT64_MIN
INT64_MAX = _impl.INT64_MAX
mul = _impl.mul
exact_div = _impl.exact_div
rem_monic = _impl.rem_monic


def get_backend(name):
    """Return a specific backend module (for differential tests and benchmarks)."""
    return _load(name)


def available_backends():
    names = ["pure"]
    try:
        _load("compiled")
        names.append("compiled")
    except ImportError:
        pass
    return names
