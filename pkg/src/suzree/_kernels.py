"""Pick the matrix kernel backend at import time.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``SUZREE_PURE_PYTHON`` is set to a non-empty value, the
pure-Python kernels are used. Both expose the same ``Kernel`` class.
"""

import os

from . import _pykernels

PyKernel = _pykernels.Kernel

try:
    from ._ckernels import Kernel as CKernel
except ImportError:  # extension not built
    CKernel = None

if CKernel is not None and not os.environ.get("SUZREE_PURE_PYTHON"):
    Kernel = CKernel
else:
    Kernel = PyKernel

BACKEND = Kernel.backend
