"""Pure-numpy implementations of the hot kernel evaluations.

Mirrors the numba backend function-for-function; selected when
``PCCHAIN_BACKEND=numpy`` or when numba is unavailable.
"""

import numpy as np

from ._coeffs import I1_SERIES, K1_SERIES, K1_TAIL_CHEB


def xk1(x: np.ndarray) -> np.ndarray:
    """Elementwise x*K1(x) for x >= 0, with the analytic value 1 at x = 0."""
    x = np.asarray(x, dtype=np.float64)
    out = np.empty(x.shape)
    lo = x <= 2.0
    xl = x[lo]
    q = 0.25 * xl * xl
    i1 = np.zeros_like(xl)
    s = np.zeros_like(xl)
    for k in range(len(I1_SERIES) - 1, -1, -1):
        i1 = i1 * q + I1_SERIES[k]
        s = s * q + K1_SERIES[k]
    # x*log(x/2)*I1(x) with the x->0 limit handled via x*log(x) -> 0
    xlog = np.where(xl > 0.0, xl * np.log(0.5 * xl), 0.0)
    out[lo] = xlog * (0.5 * xl * i1) + 1.0 - q * s

    hi = ~lo
    xh = x[hi]
    t = 4.0 / xh - 1.0
    # Clenshaw recurrence for the Chebyshev tail
    b0 = np.zeros_like(xh)
    b1 = np.zeros_like(xh)
    for k in range(len(K1_TAIL_CHEB) - 1, 0, -1):
        b0, b1 = 2.0 * t * b0 - b1 + K1_TAIL_CHEB[k], b0
    f = t * b0 - b1 + K1_TAIL_CHEB[0]
    out[hi] = np.sqrt(xh) * np.exp(-xh) * f
    return out


def k1(x: np.ndarray) -> np.ndarray:
    """Elementwise modified Bessel function K1 for x > 0."""
    x = np.asarray(x, dtype=np.float64)
    return xk1(x) / x


def matern1_matrix(targets: np.ndarray, sources: np.ndarray, phi: float) -> np.ndarray:
    """Matern (smoothness 1) correlation matrix (|t-s|/phi) K1(|t-s|/phi)."""
    d = np.abs(targets[:, None] - sources[None, :]) / phi
    return xk1(d)


def gaussian_matrix(targets: np.ndarray, sources: np.ndarray, phi: float) -> np.ndarray:
    """Squared-exponential kernel matrix exp(-(t-s)^2 / phi^2)."""
    d = (targets[:, None] - sources[None, :]) / phi
    return np.exp(-d * d)
