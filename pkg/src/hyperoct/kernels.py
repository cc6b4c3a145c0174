"""Backend selection for the integer kernels.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
pure-Python module is used.  Setting ``HYPEROCT_PURE_PYTHON=1`` forces the
fallback.
"""
import os

from . import _kernels_py

if os.environ.get("HYPEROCT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

compose = _impl.compose
inverse = _impl.inverse
cycle_lengths = _impl.cycle_lengths
hat_partner = _impl.hat_partner
sym_cycle_stats = _impl.sym_cycle_stats
matching_cycles = _impl.matching_cycles
drake_counts = _impl.drake_counts
int_psd = _impl.int_psd

__all__ = [
    "BACKEND",
    "compose",
    "inverse",
    "cycle_lengths",
    "hat_partner",
    "sym_cycle_stats",
    "matching_cycles",
    "drake_counts",
    "int_psd",
]
