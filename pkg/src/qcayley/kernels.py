"""Backend selection for the hot kernels.

The compiled ``_speedups`` extension is used when it imports; otherwise, or
when ``QCAYLEY_PURE_PYTHON`` is set to a non-empty value, the pure-Python
kernels are used. Both expose the same four functions with identical results.
"""
import os

from . import _pykernels

try:
    if os.environ.get("QCAYLEY_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _speedups as _impl
except ImportError:
    _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"

sumset = _impl.sumset
bfs_distances = _impl.bfs_distances
pair_counts = _impl.pair_counts
find_induced_odd_cycle = _impl.find_induced_odd_cycle


def available_backends():
    """Map backend name -> kernel module, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        out["compiled"] = _speedups
    return out
