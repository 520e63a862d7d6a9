"""Kernel dispatch: compiled int64 loops when available, exact Python otherwise.

The compiled module is picked at import. Set ``DNLATTICE_PURE=1`` to force
the pure-Python kernels. A compiled call that overflows int64 is rerun on the
pure path, so results never depend on which backend ran.
"""

import os

from . import _pure

try:
    if os.environ.get("DNLATTICE_PURE", "") not in ("", "0"):
        raise ImportError("pure kernels requested")
    from . import _ext
except ImportError:
    _ext = None

BACKEND = "cython" if _ext is not None else "python"


def _dispatch(name):
    pure = getattr(_pure, name)
    if _ext is None:
        return pure
    fast = getattr(_ext, name)

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return pure(*args)

    call.__name__ = name
    call.__doc__ = pure.__doc__
    return call


matmul = _dispatch("matmul")
bareiss_det = _dispatch("bareiss_det")
hnf_rows = _dispatch("hnf_rows")
smith = _dispatch("smith")

__all__ = ["BACKEND", "matmul", "bareiss_det", "hnf_rows", "smith"]
