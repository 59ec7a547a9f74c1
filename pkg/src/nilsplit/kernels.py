"""Kernel selection: compiled extension when available, pure Python otherwise.

Set NILSPLIT_PURE_PYTHON=1 before import to force the fallback; the
benchmark and the kernel equivalence tests rely on this switch.
"""

import os

if os.environ.get("NILSPLIT_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
merge_monomials = _impl.merge_monomials
bareiss_rank = _impl.bareiss_rank
