"""Signal container, test-signal generators and shuffle surrogates."""
from dataclasses import dataclass
import math

import numpy as np

from .errors import AliasedFrequency, DegeneratePhase, NonFiniteSample, NonPositiveRate

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True, eq=False)
class Signal:
    """Uniformly sampled real-valued signal.

    ``samples`` is stored as a read-only float64 array; the sample period is
    ``1 / sample_rate_hz``.
    """

    samples: np.ndarray
    sample_rate_hz: float

    def __len__(self):
        return len(self.samples)

    @property
    def period(self):
        return 1.0 / self.sample_rate_hz

    @property
    def duration_s(self):
        return len(self.samples) / self.sample_rate_hz

    def __eq__(self, other):
        if not isinstance(other, Signal):
            return NotImplemented
        return (self.sample_rate_hz == other.sample_rate_hz
                and np.array_equal(self.samples, other.samples))

    __hash__ = None


def make_signal(samples, sample_rate_hz):
    """Validate ``samples`` and wrap them in a :class:`Signal`."""
    rate = float(sample_rate_hz)
    if not rate > 0 or not math.isfinite(rate):
        raise NonPositiveRate(sample_rate_hz)
    arr = np.array(samples, dtype=float).reshape(-1)
    bad = np.flatnonzero(~np.isfinite(arr))
    if bad.size:
        raise NonFiniteSample(int(bad[0]), float(arr[bad[0]]))
    arr.setflags(write=False)
    return Signal(arr, rate)


def gen_sine(freq_hz, amplitude, sample_rate_hz, duration_s):
    if freq_hz >= sample_rate_hz / 2:
        raise AliasedFrequency(freq_hz, sample_rate_hz)
    n = np.arange(int(math.floor(duration_s * sample_rate_hz)))
    return make_signal(amplitude * np.sin(2 * np.pi * freq_hz * n / sample_rate_hz),
                       sample_rate_hz)


def _half_cosine(start, stop, n):
    # n samples after ``start``, the last one landing exactly on ``stop``
    k = np.arange(1, n + 1) / n
    ramp = start + (stop - start) * (1 - np.cos(np.pi * k)) / 2
    ramp[-1] = stop
    return ramp


def gen_synthetic_ap(sample_rate_hz, peak_amp, trough_amp, threshold,
                     rise_ms, fall_ms, recover_ms, baseline=None):
    """Action-potential-like waveform built from half-cosine ramps.

    The waveform starts at ``baseline`` (default: halfway between threshold
    and trough), rises to ``peak_amp`` over ``rise_ms``, falls to
    ``trough_amp`` over ``fall_ms`` and recovers to ``threshold`` over
    ``recover_ms``. Ramps have zero slope at both ends, so the only
    non-smooth points are the phase joins.

    Raises
    ------
    DegeneratePhase
        If any phase would contain fewer than 3 samples.
    """
    if not trough_amp < threshold < peak_amp:
        raise ValueError("need trough_amp < threshold < peak_amp")
    if baseline is None:
        baseline = threshold - 0.5 * (threshold - trough_amp)
    if not trough_amp <= baseline < threshold:
        raise ValueError("baseline must lie in [trough_amp, threshold)")

    phases = []
    for name, ms in (("rise", rise_ms), ("fall", fall_ms), ("recover", recover_ms)):
        n = int(round(ms * 1e-3 * sample_rate_hz))
        if n < 3:
            raise DegeneratePhase(name, n)
        phases.append(n)

    n_rise, n_fall, n_rec = phases
    x = np.concatenate([
        [baseline],
        _half_cosine(baseline, peak_amp, n_rise),
        _half_cosine(peak_amp, trough_amp, n_fall),
        _half_cosine(trough_amp, threshold, n_rec),
    ])
    return make_signal(x, sample_rate_hz)


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood 2014).

    Chosen because the algorithm is a handful of integer operations, so the
    stream for a given seed is identical in any language.
    """

    def __init__(self, seed):
        self.state = seed & _MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound):
        """Uniform integer in ``[0, bound)`` by rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


def permutation(n, seed):
    """Fisher-Yates permutation of ``range(n)`` driven by :class:`SplitMix64`."""
    rng = SplitMix64(seed)
    order = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        order[i], order[j] = order[j], order[i]
    return order


def shuffle_surrogate(signal, seed):
    """Randomly reorder the samples of ``signal``; the amplitude multiset is kept."""
    idx = permutation(len(signal), seed)
    return make_signal(signal.samples[idx] if idx else [], signal.sample_rate_hz)
