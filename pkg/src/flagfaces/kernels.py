"""Kernel backend selection.

The compiled ``_ckernels`` module is used when it was built; otherwise the
pure-Python reference implementations are used. Setting the environment
variable ``FLAGFACES_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _pykernels

if os.environ.get("FLAGFACES_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

series_mul = _impl.series_mul
series_inverse = _impl.series_inverse
series_log = _impl.series_log
series_pow = _impl.series_pow
power_sums = _impl.power_sums
count_cliques = _impl.count_cliques
exact_div = _pykernels.exact_div

__all__ = [
    "BACKEND",
    "series_mul",
    "series_inverse",
    "series_log",
    "series_pow",
    "power_sums",
    "count_cliques",
    "exact_div",
]
