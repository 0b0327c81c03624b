"""Kernel backend selection.

The compiled extension is used when it imports; setting
``GREEDY_CROSSINGS_PURE=1`` forces the pure-Python fallback.
"""

import os

from . import _pykernels

python_kernels = _pykernels

try:
    from . import _ckernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and os.environ.get("GREEDY_CROSSINGS_PURE", "") in ("", "0"):
    kernels = compiled_kernels
else:
    kernels = python_kernels

BACKEND = kernels.NAME


def available():
    """All importable kernel modules, compiled first."""
    return [k for k in (compiled_kernels, python_kernels) if k is not None]
