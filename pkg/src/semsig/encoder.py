"""Three-point shape encoding.

Every interior sample ``n`` is classified by the signs of the backward
difference ``s[n] - s[n-1]``, the second difference
``s[n+1] - 2 s[n] + s[n-1]`` and the forward difference ``s[n+1] - s[n]``.
Only 13 of the 27 sign triples can be produced by real samples; they are
numbered 1..13 as follows::

    id  back  second  fwd   shape
     1   -      +      -    falling, convex
     2   +      -      +    rising, concave
     3   +      +      +    rising, convex
     4   -      -      -    falling, concave
     5   -      +      +    trough
     6   +      -      -    peak
     7   +      0      +    rising line
     8   -      0      -    falling line
     9   0      0      0    flat
    10   0      +      +    flat, then rise
    11   0      -      -    flat, then fall
    12   +      -      0    rise, then flat
    13   -      +      0    fall, then flat
"""
from typing import NamedTuple

import numpy as np

from .errors import InconsistentTriple, TooShort


class SignTriple(NamedTuple):
    d_back: int
    dd: int
    d_fwd: int


SYMBOLS = tuple(range(1, 14))

TRIPLES = {
    1: SignTriple(-1, 1, -1),
    2: SignTriple(1, -1, 1),
    3: SignTriple(1, 1, 1),
    4: SignTriple(-1, -1, -1),
    5: SignTriple(-1, 1, 1),
    6: SignTriple(1, -1, -1),
    7: SignTriple(1, 0, 1),
    8: SignTriple(-1, 0, -1),
    9: SignTriple(0, 0, 0),
    10: SignTriple(0, 1, 1),
    11: SignTriple(0, -1, -1),
    12: SignTriple(1, -1, 0),
    13: SignTriple(-1, 1, 0),
}
SYMBOL_OF = {t: s for s, t in TRIPLES.items()}

PEAK = 6
TROUGH = 5

# flat lookup over (d_back+1)*9 + (dd+1)*3 + (d_fwd+1); 0 marks unrealizable
_LOOKUP = np.zeros(27, dtype=np.int8)
for _s, (_a, _b, _c) in TRIPLES.items():
    _LOOKUP[(_a + 1) * 9 + (_b + 1) * 3 + (_c + 1)] = _s


def sign_of(x, epsilon=0.0):
    if epsilon < 0:
        raise ValueError("epsilon must be nonnegative")
    if abs(x) <= epsilon:
        return 0
    return 1 if x > 0 else -1


def _differences(x0, x1, x2):
    d_back = x1 - x0
    d_fwd = x2 - x1
    # difference of the rounded differences, not x2 - 2*x1 + x0: keeps the
    # three signs jointly consistent on floating-point data
    return d_back, d_fwd - d_back, d_fwd


def p_products(x0, x1, x2):
    """Left and right products of the P-operator at the middle sample.

    Returns ``(s''[n] * s'[n], s''[n] * s'[n+1])`` with ``s'[n]`` the backward
    difference and ``s'[n+1]`` the forward one.
    """
    d_back, dd, d_fwd = _differences(x0, x1, x2)
    return dd * d_back, dd * d_fwd


def sign_triple(x0, x1, x2, epsilon=0.0):
    return SignTriple(*(sign_of(v, epsilon) for v in _differences(x0, x1, x2)))


def classify_window(x0, x1, x2, epsilon=0.0):
    """Configuration number (1..13) of the window ``(x0, x1, x2)``."""
    triple = sign_triple(x0, x1, x2, epsilon)
    try:
        return SYMBOL_OF[triple]
    except KeyError:
        raise InconsistentTriple(triple) from None


def _signs(values, epsilon):
    out = np.sign(values).astype(np.int8)
    if epsilon > 0:
        out[np.abs(values) <= epsilon] = 0
    return out


def symbolize(signal, epsilon=0.0):
    """Encode a signal as its string of configuration numbers.

    Parameters
    ----------
    signal : Signal
        At least 3 samples.
    epsilon : float
        Differences with magnitude ``<= epsilon`` count as zero.

    Returns
    -------
    numpy.ndarray
        ``len(signal) - 2`` integers in 1..13; entry ``k`` describes the
        window centred on sample ``k + 1``.
    """
    if epsilon < 0:
        raise ValueError("epsilon must be nonnegative")
    x = signal.samples
    if len(x) < 3:
        raise TooShort(len(x), 3)
    d = np.diff(x)
    d_back, d_fwd = d[:-1], d[1:]
    a = _signs(d_back, epsilon)
    b = _signs(d_fwd - d_back, epsilon)
    c = _signs(d_fwd, epsilon)
    codes = _LOOKUP[(a.astype(int) + 1) * 9 + (b + 1) * 3 + (c + 1)]
    bad = np.flatnonzero(codes == 0)
    if bad.size:
        i = int(bad[0])
        raise InconsistentTriple((int(a[i]), int(b[i]), int(c[i])), index=i + 1)
    return codes.astype(np.int64)


def semantic_power(signal):
    """Discrete P-operator ``s''[n] * s'[n]`` at every interior sample."""
    x = signal.samples
    if len(x) < 3:
        raise TooShort(len(x), 3)
    d = np.diff(x)
    return (d[1:] - d[:-1]) * d[:-1]
