"""Backend selection for the hot kernel evaluations.

The jitted implementations are used by default. Set ``PCCHAIN_BACKEND=numpy``
to force the pure-numpy fallback (the fallback is also picked automatically
when numba cannot be imported). ``PCCHAIN_BACKEND=numba`` makes a numba
import failure fatal instead of silent.
"""

import os

_choice = os.environ.get("PCCHAIN_BACKEND", "auto").lower()
if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"PCCHAIN_BACKEND must be 'numba' or 'numpy', got {_choice!r}"
    )

if _choice == "numpy":
    from . import _impl_numpy as _impl

    _ACTIVE = "numpy"
else:
    try:
        from . import _impl_numba as _impl

        _ACTIVE = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from . import _impl_numpy as _impl

        _ACTIVE = "numpy"

xk1 = _impl.xk1
k1 = _impl.k1
matern1_matrix = _impl.matern1_matrix
gaussian_matrix = _impl.gaussian_matrix


def active_backend() -> str:
    """Name of the backend in use, 'numba' or 'numpy'."""
    return _ACTIVE
