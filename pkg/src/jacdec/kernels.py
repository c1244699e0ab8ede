"""Kernel backend selector.

Imports the compiled Cython kernels when they are built, falling back to the
pure-Python twin otherwise.  Set JACDEC_PURE_PYTHON=1 to force the fallback
(useful for benchmarking and for debugging the compiled path).
"""

import os

if os.environ.get("JACDEC_PURE_PYTHON") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
int_matmul = _impl.int_matmul
is_symplectic = _impl.is_symplectic
hnf_transform = _impl.hnf_transform
snf_transform = _impl.snf_transform
