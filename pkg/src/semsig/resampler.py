"""Natural cubic spline reconstruction, resampling and shape runs."""
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from .analysis import config_histogram
from .encoder import symbolize
from .errors import EmptySymbols, TooShort
from .signal import make_signal

SMOOTH_SYMBOLS = frozenset({1, 2, 3, 4, 7, 8, 9})
BREAK_SYMBOLS = frozenset({5, 6, 10, 11, 12, 13})


@dataclass(frozen=True, eq=False)
class SplineModel:
    """Piecewise cubic with natural end conditions.

    On ``[knots[i], knots[i+1]]`` the value is
    ``c[0,i] + c[1,i] h + c[2,i] h**2 + c[3,i] h**3`` with ``h = t - knots[i]``.
    """

    knots: np.ndarray
    coefficients: np.ndarray
    boundary: str = "natural"

    @property
    def t_min(self):
        return float(self.knots[0])

    @property
    def t_max(self):
        return float(self.knots[-1])

    def __call__(self, t, nu=0):
        """Evaluate the spline (or its ``nu``-th derivative, ``nu <= 3``) at ``t``.

        Points outside the knot range are extrapolated from the end pieces.
        """
        t = np.asarray(t, dtype=float)
        i = np.clip(np.searchsorted(self.knots, t, side="right") - 1,
                    0, len(self.knots) - 2)
        h = t - self.knots[i]
        c0, c1, c2, c3 = self.coefficients[:, i]
        if nu == 0:
            return c0 + h * (c1 + h * (c2 + h * c3))
        if nu == 1:
            return c1 + h * (2 * c2 + 3 * h * c3)
        if nu == 2:
            return 2 * c2 + 6 * h * c3
        if nu == 3:
            return 6 * c3 + 0 * h
        raise ValueError("nu must be 0..3")


def natural_spline(t, y):
    """Natural cubic spline through ``(t[i], y[i])``; ``t`` strictly increasing."""
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    n = len(t)
    if n < 3:
        raise TooShort(n, 3)
    h = np.diff(t)
    if np.any(h <= 0):
        raise ValueError("knots must be strictly increasing")
    slope = np.diff(y) / h

    # tridiagonal system for the interior second derivatives m[1..n-2];
    # m[0] = m[n-1] = 0 (natural ends)
    ab = np.zeros((3, n - 2))
    ab[0, 1:] = h[1:-1]
    ab[1, :] = 2 * (h[:-1] + h[1:])
    ab[2, :-1] = h[1:-1]
    rhs = 6 * np.diff(slope)
    m = np.zeros(n)
    m[1:-1] = solve_banded((1, 1), ab, rhs)

    coeffs = np.empty((4, n - 1))
    coeffs[0] = y[:-1]
    coeffs[1] = slope - h * (2 * m[:-1] + m[1:]) / 6
    coeffs[2] = m[:-1] / 2
    coeffs[3] = (m[1:] - m[:-1]) / (6 * h)
    return SplineModel(t, coeffs)


def fit_cubic_spline(signal):
    """Natural cubic spline through the samples, placed at ``t = n / F_s``."""
    n = len(signal)
    if n < 3:
        raise TooShort(n, 3)
    return natural_spline(np.arange(n) / signal.sample_rate_hz, signal.samples)


def resample(spline, new_rate_hz):
    """Evaluate ``spline`` at every ``k / new_rate_hz`` inside its knot range."""
    if not new_rate_hz > 0:
        raise ValueError("new_rate_hz must be positive")
    # small slack so that a knot-aligned end point is not lost to rounding
    k_lo = int(np.ceil(spline.t_min * new_rate_hz - 1e-9))
    k_hi = int(np.floor(spline.t_max * new_rate_hz + 1e-9))
    t = np.arange(k_lo, k_hi + 1) / new_rate_hz
    t = np.clip(t, spline.t_min, spline.t_max)
    return make_signal(spline(t), new_rate_hz)


@dataclass(frozen=True)
class ShapeRun:
    symbol: int
    start_index: int
    length: int

    @property
    def kind(self):
        return "smooth" if self.symbol in SMOOTH_SYMBOLS else "break"


def shape_runs(symbols):
    """Run-length encode a symbol string into maximal :class:`ShapeRun` s."""
    s = np.asarray(symbols, dtype=np.int64).reshape(-1)
    if s.size == 0:
        raise EmptySymbols()
    edges = np.flatnonzero(np.diff(s)) + 1
    starts = np.concatenate([[0], edges])
    ends = np.concatenate([edges, [s.size]])
    return [ShapeRun(int(s[a]), int(a), int(b - a)) for a, b in zip(starts, ends)]


def resample_study(signal, rates_hz, epsilon=0.0):
    """Configuration histogram of ``signal`` re-sampled at each rate.

    The spline is fitted once at the source rate. Rates below the signal's
    Nyquist rate are allowed. Returns ``{rate: ConfigHistogram}`` in the
    order the rates were given.
    """
    spline = fit_cubic_spline(signal)
    out = {}
    for rate in rates_hz:
        resampled = resample(spline, rate)
        out[rate] = config_histogram(symbolize(resampled, epsilon))
    return out
