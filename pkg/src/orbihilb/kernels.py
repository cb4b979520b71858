"""Backend selection for the hot loops.

The compiled ``_kernels`` extension is used when it is importable; setting
``ORBIHILB_PURE_PYTHON=1`` forces the pure-Python implementation.  Both expose
``convolve`` and ``theta_counts`` with identical semantics.
"""

from __future__ import annotations

import os

from . import _kernels_py as python_impl

compiled_impl = None
if os.environ.get("ORBIHILB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled_impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled_impl = None

_impl = compiled_impl if compiled_impl is not None else python_impl
BACKEND = "cython" if compiled_impl is not None else "python"


def convolve(xa, xb, size):
    return _impl.convolve(xa, xb, size)


def theta_counts(cartan, lin, k, order, diag, mu, shift, bound):
    return _impl.theta_counts(cartan, lin, k, order, diag, mu, shift, bound)
