"""Kernel backend selection.

The compiled extension is used when importable; ``POSTSEL_PURE=1`` forces the
numpy fallback.  ``BACKEND`` names the active choice.
"""
import os

from . import _pykernels

if os.environ.get("POSTSEL_PURE"):
    _ext = None
else:
    try:
        from . import _kernels as _ext
    except ImportError:
        _ext = None

if _ext is not None:
    BACKEND = "cython"
    displace_step = _ext.displace_step
    squeezed_coherent_series = _ext.squeezed_coherent_series
else:
    BACKEND = "python"
    displace_step = _pykernels.displace_step
    squeezed_coherent_series = _pykernels.squeezed_coherent_series

__all__ = ["BACKEND", "displace_step", "squeezed_coherent_series"]
