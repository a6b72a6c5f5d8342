"""Kernel backend selection.

The hot loops (span enumeration, coset minimization) exist twice: a
Cython extension (qcube._kernels) and a pure-Python fallback
(qcube._kernels_py). The compiled one is used when importable; set
QCUBE_PURE_PYTHON=1 to force the fallback. benchmarks/bench_kernels.py
compares the two.
"""

import os

if os.environ.get("QCUBE_PURE_PYTHON"):
    from qcube import _kernels_py as _impl
else:
    try:
        from qcube import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from qcube import _kernels_py as _impl

span_weight_histogram = _impl.span_weight_histogram
span_mp_histogram = _impl.span_mp_histogram
coset_minima = _impl.coset_minima


def backend_name() -> str:
    """Name of the active kernel module ('qcube._kernels' when compiled)."""
    return _impl.__name__
