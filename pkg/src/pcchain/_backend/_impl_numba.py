"""Numba-jitted implementations of the hot kernel evaluations."""

import numpy as np
from numba import njit

from ._coeffs import I1_SERIES, K1_SERIES, K1_TAIL_CHEB

_NSER = len(I1_SERIES)
_NCHEB = len(K1_TAIL_CHEB)


@njit(cache=True, fastmath=True)
def _xk1_scalar(x: float) -> float:
    if x <= 2.0:
        q = 0.25 * x * x
        i1 = 0.0
        s = 0.0
        for k in range(_NSER - 1, -1, -1):
            i1 = i1 * q + I1_SERIES[k]
            s = s * q + K1_SERIES[k]
        xlog = x * np.log(0.5 * x) if x > 0.0 else 0.0
        return xlog * (0.5 * x * i1) + 1.0 - q * s
    t = 4.0 / x - 1.0
    b0 = 0.0
    b1 = 0.0
    for k in range(_NCHEB - 1, 0, -1):
        tmp = 2.0 * t * b0 - b1 + K1_TAIL_CHEB[k]
        b1 = b0
        b0 = tmp
    f = t * b0 - b1 + K1_TAIL_CHEB[0]
    return np.sqrt(x) * np.exp(-x) * f


@njit(cache=True, fastmath=True)
def xk1(x: np.ndarray) -> np.ndarray:
    flat = x.ravel()
    out = np.empty(flat.size)
    for i in range(flat.size):
        out[i] = _xk1_scalar(flat[i])
    return out.reshape(x.shape)


@njit(cache=True, fastmath=True)
def k1(x: np.ndarray) -> np.ndarray:
    flat = x.ravel()
    out = np.empty(flat.size)
    for i in range(flat.size):
        out[i] = _xk1_scalar(flat[i]) / flat[i]
    return out.reshape(x.shape)


@njit(cache=True, fastmath=True)
def matern1_matrix(targets: np.ndarray, sources: np.ndarray, phi: float) -> np.ndarray:
    out = np.empty((targets.size, sources.size))
    for i in range(targets.size):
        for j in range(sources.size):
            out[i, j] = _xk1_scalar(abs(targets[i] - sources[j]) / phi)
    return out


@njit(cache=True, fastmath=True)
def gaussian_matrix(targets: np.ndarray, sources: np.ndarray, phi: float) -> np.ndarray:
    out = np.empty((targets.size, sources.size))
    for i in range(targets.size):
        for j in range(sources.size):
            d = (targets[i] - sources[j]) / phi
            out[i, j] = np.exp(-d * d)
    return out
