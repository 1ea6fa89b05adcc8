"""Weighted transducer and amplitude-calibrated spike detection.

Each step ``s[n] -> s[n+1]`` is weighted by ``|atan(b / a)|`` in degrees
divided by 90, where ``b`` is the amplitude increment and ``a`` the horizontal
run of one step (1 by default). Over a monotone stretch sampled finely enough
that every ``|b / a|`` is small, the weights add up to ``2 / (pi * a)`` times
the amplitude change, which is what makes the spike test below work.

Amplitudes should be scaled (or ``a`` chosen) so that per-sample increments
are well below ``a``; with raw millivolt spikes at ~10 kHz they are not, and
the arctangent saturates.
"""
from dataclasses import dataclass
import math

import numpy as np

from .encoder import PEAK, TROUGH, sign_of, symbolize
from .errors import TooShort


def edge_weight(b, a=1.0):
    """Normalised angle of one step: ``|atan(b / a)|`` in degrees over 90."""
    if not a > 0:
        raise ValueError("a must be positive")
    return abs(math.degrees(math.atan(b / a))) / 90.0


def weight_vector(signal, a=1.0):
    """Edge weights for every consecutive pair of samples (length ``n - 1``)."""
    if not a > 0:
        raise ValueError("a must be positive")
    x = signal.samples
    if len(x) < 2:
        raise TooShort(len(x), 2)
    return np.abs(np.degrees(np.arctan(np.diff(x) / a))) / 90.0


@dataclass(frozen=True)
class DetectorConfig:
    threshold: float
    tolerance: float = 0.02
    max_duration_s: float = 0.01
    epsilon: float = 0.0
    step: float = 1.0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not self.max_duration_s > 0:
            raise ValueError("max_duration_s must be positive")
        if self.epsilon < 0:
            raise ValueError("epsilon must be nonnegative")
        if not self.step > 0:
            raise ValueError("step must be positive")


@dataclass(frozen=True)
class SpikeEvent:
    """A detected spike.

    ``w1`` accumulates from the threshold crossing to the peak, ``w2`` from
    the peak to the trough and ``w3`` from the trough back up to the
    threshold (or to where the recovery stops rising).
    """

    onset_index: int
    peak_index: int
    trough_index: int
    offset_index: int
    w1: float
    w2: float
    w3: float
    duration_s: float

    @property
    def residual(self):
        return abs(self.w2 - self.w1 - self.w3)


def _first(symbols, start, stop, wanted, extra=None):
    # symbols[j - 1] describes sample j
    for j in range(start, stop):
        if symbols[j - 1] == wanted and (extra is None or extra(j)):
            return j
    return None


def _candidate(x, w, symbols, onset, cfg):
    n = len(x)
    thr = cfg.threshold
    peak = _first(symbols, onset + 1, n - 1, PEAK)
    if peak is None:
        return None
    trough = _first(symbols, peak + 1, n - 1, TROUGH, lambda j: x[j] < thr)
    if trough is None:
        return None

    frac_on = (x[onset + 1] - thr) / (x[onset + 1] - x[onset])
    w1 = frac_on * w[onset] + w[onset + 1:peak].sum()
    w2 = w[peak:trough].sum()

    offset = n - 1
    frac_off = 1.0
    for k in range(trough + 1, n):
        if x[k] >= thr:
            offset = k
            frac_off = (thr - x[k - 1]) / (x[k] - x[k - 1])
            break
        if sign_of(x[k] - x[k - 1], cfg.epsilon) < 0:
            offset = k - 1
            break
    w3 = w[trough:offset - 1].sum() + frac_off * w[offset - 1]
    return onset, peak, trough, offset, float(w1), float(w2), float(w3)


def detect_spikes(signal, config):
    """Find spikes whose cumulative weights satisfy ``w2 - w1 ~= w3``.

    Starting at every upward threshold crossing, the first peak window and
    then the first trough window below threshold are located; ``w1``, ``w2``
    and ``w3`` are accumulated as described on :class:`SpikeEvent`. A
    candidate becomes an event when ``|w2 - w1 - w3| <= config.tolerance``
    and it lasts no longer than ``config.max_duration_s`` (and ``w2 >= w1``,
    which can only fail when a flat-topped bump precedes the peak). Accepted events do
    not overlap: scanning resumes at the previous offset.
    """
    x = signal.samples
    if len(x) < 3:
        raise TooShort(len(x), 3)
    symbols = symbolize(signal, config.epsilon)
    w = weight_vector(signal, config.step)
    thr = config.threshold

    events = []
    i = 0
    while i < len(x) - 1:
        if not (x[i] <= thr < x[i + 1]):
            i += 1
            continue
        cand = _candidate(x, w, symbols, i, config)
        if cand is None:
            break
        onset, peak, trough, offset, w1, w2, w3 = cand
        duration = (offset - onset) / signal.sample_rate_hz
        if (w2 >= w1 and abs(w2 - w1 - w3) <= config.tolerance
                and duration <= config.max_duration_s):
            events.append(SpikeEvent(onset, peak, trough, offset, w1, w2, w3, duration))
            i = offset
        else:
            i += 1
    return events
