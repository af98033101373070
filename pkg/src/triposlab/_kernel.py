"""Kernel selection: compiled extension when available, pure Python otherwise.

Set TRIPOSLAB_PURE=1 to force the pure kernels (used by the parity tests and
the benchmark). All kernel arguments are flat array('i') buffers plus plain
ints, so both implementations accept identical calls.
"""

import os

from . import _speedups_py

if os.environ.get("TRIPOSLAB_PURE"):
    _impl = _speedups_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _speedups_py

IMPLEMENTATION = "compiled" if _impl is not _speedups_py else "pure"

entails = _impl.entails
entail_matrix = _impl.entail_matrix
entails_masks = _impl.entails_masks
entail_matrix_masks = _impl.entail_matrix_masks
