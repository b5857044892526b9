"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``TWISTEDTORSION_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels as python_kernels

compiled_kernels = None
if not os.environ.get("TWISTEDTORSION_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_kernels
    except ImportError:  # extension not built
        compiled_kernels = None

BACKEND = "cython" if compiled_kernels is not None else "python"
MAX_FAST_PRIME = python_kernels.MAX_FAST_PRIME


def det_poly_mod(entries, n, npoints, p, backend=None):
    """Dispatch to the selected backend; primes past 31 bits always use Python."""
    use = backend or BACKEND
    if use == "cython" and compiled_kernels is not None and p < MAX_FAST_PRIME:
        return compiled_kernels.det_poly_mod(entries, n, npoints, p)
    return python_kernels.det_poly_mod(entries, n, npoints, p)


def det_mod(rows, p, backend=None):
    use = backend or BACKEND
    if use == "cython" and compiled_kernels is not None and p < MAX_FAST_PRIME:
        return compiled_kernels.det_mod(rows, p)
    return python_kernels.det_mod(rows, p)
