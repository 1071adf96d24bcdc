"""Hot-loop kernels with two interchangeable backends.

The compiled Cython backend is used when it imported successfully; setting
HADALAB_PURE=1 (or a failed build) selects the pure-Python fallback.  Both
expose the same functions with identical semantics, bit for bit.
"""

import os

from . import _pykernels

if os.environ.get("HADALAB_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _cykernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND

invariant_scan = _impl.invariant_scan
difference_scan = _impl.difference_scan
hadamard_scan = _impl.hadamard_scan
barker_branch = _impl.barker_branch
includes_exhaustive = _impl.includes_exhaustive
reversal_audit = _impl.reversal_audit
