"""Time grids: the quadrature backbone for every discretized convolution."""

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class TimeGrid:
    """Ordered knot times spanning a study interval.

    ``spacings[i]`` is ``knots[i+1] - knots[i]``; uniform grids expose the
    common spacing through :attr:`delta`.
    """

    start: float
    end: float
    knots: np.ndarray
    spacings: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        knots = np.asarray(self.knots, dtype=np.float64)
        if knots.ndim != 1 or knots.size < 2:
            raise ValueError("a grid needs at least two knots")
        if not np.all(np.isfinite(knots)):
            raise ValueError("grid knots must be finite")
        spacings = np.diff(knots)
        if np.any(spacings <= 0.0):
            raise ValueError("grid knots must be strictly increasing")
        knots.flags.writeable = False
        spacings.flags.writeable = False
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "spacings", spacings)

    @property
    def m(self) -> int:
        return self.knots.size

    @property
    def is_uniform(self) -> bool:
        sp = self.spacings
        return bool(np.all(np.abs(sp - sp[0]) <= 1e-12 * abs(sp[0])))

    @property
    def delta(self) -> float:
        """Common knot spacing; requires a uniform grid."""
        if not self.is_uniform:
            raise ValueError("grid spacing is not uniform")
        return float(self.spacings.mean())

    def contains(self, times: np.ndarray) -> bool:
        times = np.asarray(times, dtype=np.float64)
        tol = 1e-12 * max(abs(self.start), abs(self.end), 1.0)
        return bool(
            np.all(times >= self.start - tol) and np.all(times <= self.end + tol)
        )


def make_grid(start: float, end: float, m: int) -> TimeGrid:
    """Uniform grid of ``m`` knots spanning ``[start, end]`` inclusive."""
    if not (np.isfinite(start) and np.isfinite(end)):
        raise ValueError("grid endpoints must be finite")
    if end <= start:
        raise ValueError("grid requires end > start")
    if m < 2:
        raise ValueError("grid requires m >= 2 knots")
    return TimeGrid(float(start), float(end), np.linspace(start, end, int(m)))


def grid_from_knots(knots) -> TimeGrid:
    """Grid on explicitly supplied (strictly increasing) knot times."""
    knots = np.asarray(knots, dtype=np.float64)
    return TimeGrid(float(knots[0]), float(knots[-1]), knots)
