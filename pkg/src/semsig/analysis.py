"""Configuration histograms, semantic entropy and related measures."""
from dataclasses import dataclass
import math

import numpy as np

from .encoder import SYMBOLS, symbolize
from .errors import BadRange, BadWindow, EmptySymbols, TooShort

MAX_ENTROPY = math.log2(len(SYMBOLS))


@dataclass(frozen=True, eq=False)
class ConfigHistogram:
    """Counts of the 13 configurations; ``counts[i]`` belongs to symbol ``i + 1``."""

    counts: np.ndarray

    @classmethod
    def from_densities(cls, densities, total=10**12):
        """Histogram whose densities approximate ``densities`` (sum to 1)."""
        p = np.asarray(densities, dtype=float)
        if p.shape != (13,) or np.any(p < 0) or not math.isclose(p.sum(), 1.0):
            raise ValueError("need 13 nonnegative densities summing to 1")
        counts = np.rint(p * total).astype(np.int64)
        return cls(counts)

    @property
    def total(self):
        return int(self.counts.sum())

    @property
    def densities(self):
        return self.counts / self.total

    def p(self, symbol):
        return self.counts[symbol - 1] / self.total

    def __eq__(self, other):
        return isinstance(other, ConfigHistogram) and np.array_equal(self.counts, other.counts)

    __hash__ = None


def config_histogram(symbols):
    s = np.asarray(symbols, dtype=np.int64).reshape(-1)
    if s.size == 0:
        raise EmptySymbols()
    if s.min() < 1 or s.max() > 13:
        raise ValueError("symbols must lie in 1..13")
    return ConfigHistogram(np.bincount(s - 1, minlength=13).astype(np.int64))


def entropy_bits(p):
    """Shannon entropy in bits, taking ``0 log 0 = 0``."""
    p = np.asarray(p, dtype=float)
    nz = p[p > 0]
    return float(-(nz * np.log2(nz)).sum()) + 0.0


def semantic_entropy(hist):
    return entropy_bits(hist.densities)


@dataclass(frozen=True)
class EntropySeries:
    window_len: int
    hop: int
    values: tuple
    start_indices: tuple


def sliding_entropy(signal, window_len, hop, epsilon=0.0):
    """Semantic entropy of consecutive windows of ``window_len`` samples.

    Each window is symbolized on its own, so it contributes
    ``window_len - 2`` symbols. Windows start every ``hop`` samples; a
    trailing partial window is dropped.
    """
    if window_len < 3 or hop < 1:
        raise BadWindow(f"need window_len >= 3 and hop >= 1, got {window_len}, {hop}")
    n = len(signal)
    if n < window_len:
        raise TooShort(n, window_len)
    symbols = symbolize(signal, epsilon)
    # the window starting at sample i covers symbols i .. i + window_len - 3
    width = window_len - 2
    starts = range(0, n - window_len + 1, hop)
    values = tuple(
        semantic_entropy(config_histogram(symbols[i:i + width])) for i in starts
    )
    return EntropySeries(window_len, hop, values, tuple(starts))


def bhattacharyya(p, q):
    """Bhattacharyya distance ``-ln sum(sqrt(p_i q_i))``; ``inf`` for disjoint supports."""
    pd, qd = p.densities, q.densities
    if np.array_equal(pd, qd):
        return 0.0
    coeff = float(np.sqrt(pd * qd).sum())
    if coeff <= 0.0:
        return math.inf
    # coefficient can exceed 1 by rounding when p == q
    return max(0.0, -math.log(min(coeff, 1.0)))


def semantic_information(signal, start_index, end_index, mode="raw"):
    """Total absolute P-operator over the samples ``[start_index, end_index)``.

    ``mode="raw"`` sums ``|s''[n] s'[n]| * T`` with plain sample differences.
    ``mode="analog"`` first rescales the differences to derivatives
    (``s' / T`` and ``s'' / T**2``), which approximates the integral of
    ``|s''(t) s'(t)|`` over the range.
    """
    n = len(signal)
    if not (0 <= start_index < end_index <= n) or end_index - start_index < 3:
        raise BadRange(f"invalid range [{start_index}, {end_index}) for {n} samples")
    if mode not in ("raw", "analog"):
        raise ValueError(f"unknown mode {mode!r}")
    x = signal.samples[start_index:end_index]
    T = signal.period
    d = np.diff(x)
    power = np.abs((d[1:] - d[:-1]) * d[:-1])
    if mode == "analog":
        power = power / T**3
    return float(power.sum() * T)
