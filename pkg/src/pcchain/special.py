"""Modified Bessel function K1, the transcendental core of the inertial smoother."""

import numpy as np

from . import _backend


def bessel_k1(x):
    """Modified Bessel function of the second kind, order 1.

    Accepts a scalar or array of strictly positive values; relative accuracy
    is a few ulp across [1e-3, 20] and degrades gracefully outside. For the
    x -> 0 limit of x*K1(x) use :func:`bessel_xk1`, which is finite there.

    Raises
    ------
    ValueError
        If any input is non-positive or non-finite.
    """
    arr = np.asarray(x, dtype=np.float64)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr <= 0.0)):
        raise ValueError("bessel_k1 requires finite x > 0")
    out = _backend.k1(np.atleast_1d(arr))
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def bessel_xk1(x):
    """x * K1(x) for x >= 0, continuously extended to 1 at x = 0."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr < 0.0)):
        raise ValueError("bessel_xk1 requires finite x >= 0")
    out = _backend.xk1(np.atleast_1d(arr))
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)
