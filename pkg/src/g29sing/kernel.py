"""Kernel selection: compiled extension when available, pure Python otherwise.

Set G29SING_PURE_PYTHON=1 to force the fallback (used by the parity tests
and the benchmark).
"""

import os

from . import _purekernel

BudgetExceeded = _purekernel.BudgetExceeded

if os.environ.get("G29SING_PURE_PYTHON"):
    _impl = _purekernel
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _purekernel

BACKEND = _impl.BACKEND
reduce_full = _impl.reduce_full


def backends():
    """All importable backends, for benchmarks and parity tests."""
    out = {"python": _purekernel}
    try:
        from . import _speedups
        out["compiled"] = _speedups
    except ImportError:
        pass
    return out
