import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from semsig import (DetectorConfig, detect_spikes, edge_weight, gen_synthetic_ap, make_signal,
                    weight_vector)
from semsig.errors import TooShort

# millivolt-scale spikes need a = 100 to keep per-sample |b / a| small
STEP = 100.0


@pytest.fixture
def ap():
    return gen_synthetic_ap(10000, 40, -15, 0, 1, 2, 3)


@pytest.mark.parametrize("b, expected", [(1, 0.5), (0, 0.0), (math.sqrt(3), 2 / 3), (-1, 0.5)])
def test_edge_weight(b, expected):
    assert edge_weight(b, 1) == pytest.approx(expected, abs=1e-12)


@given(st.floats(-1e9, 1e9), st.floats(1e-3, 1e3))
def test_edge_weight_range(b, a):
    assert 0 <= edge_weight(b, a) <= 1


@given(st.floats(-0.05, 0.05))
def test_small_angle_regime(b):
    # 90 w approximates |b| expressed in degrees of arctan
    w = edge_weight(b, 1)
    assert w * 90 == pytest.approx(math.degrees(abs(b)), rel=1e-3, abs=1e-300)


def test_weight_vector():
    np.testing.assert_allclose(weight_vector(make_signal([0, 1, 2], 1)), [0.5, 0.5])
    assert not weight_vector(make_signal([3] * 10, 1)).any()
    np.testing.assert_allclose(
        weight_vector(make_signal([0, math.sqrt(3), math.sqrt(3) + 1], 1)), [2 / 3, 0.5],
        atol=1e-12)
    with pytest.raises(TooShort):
        weight_vector(make_signal([1], 1))


def test_cumulative_weight_tracks_amplitude():
    # monotone ramp with small steps: sum of weights ~ 2 * rise / (pi * a)
    x = np.linspace(0, 3, 3001)
    total = weight_vector(make_signal(x, 1)).sum()
    assert total == pytest.approx(2 * 3 / math.pi, rel=1e-3)


def test_single_spike(ap):
    events = detect_spikes(ap, DetectorConfig(threshold=0, step=STEP))
    assert len(events) == 1
    e = events[0]
    assert e.residual <= 0.02
    assert e.onset_index < e.peak_index < e.trough_index < e.offset_index
    assert e.w2 >= e.w1
    # amplitude arithmetic: weight ~ 2 * excursion / (pi * a)
    k = 2 / (math.pi * STEP)
    assert e.w1 == pytest.approx(40 * k, rel=0.01)
    assert e.w2 == pytest.approx(55 * k, rel=0.01)
    assert e.w3 == pytest.approx(15 * k, rel=0.01)
    assert ap.samples[e.peak_index] == 40
    assert ap.samples[e.trough_index] == -15


def test_raw_millivolts_saturate(ap):
    # without rescaling the arctangent saturates and the weight identity fails
    assert detect_spikes(ap, DetectorConfig(threshold=0)) == []


def test_stretched_spike_rejected_by_duration():
    slow = gen_synthetic_ap(10000, 40, -15, 0, 20, 40, 60)
    assert detect_spikes(slow, DetectorConfig(threshold=0, step=STEP)) == []
    # the weights themselves still balance: only the duration guard rejects it
    loose = DetectorConfig(threshold=0, step=STEP, max_duration_s=1.0)
    assert len(detect_spikes(slow, loose)) == 1


def test_constant_below_threshold():
    sig = make_signal(np.full(100, -1.0), 1000)
    assert detect_spikes(sig, DetectorConfig(threshold=0)) == []


def test_rate_doubling_changes_weights_little():
    a = detect_spikes(gen_synthetic_ap(10000, 40, -15, 0, 1, 2, 3),
                      DetectorConfig(threshold=0, step=STEP))[0]
    b = detect_spikes(gen_synthetic_ap(20000, 40, -15, 0, 1, 2, 3),
                      DetectorConfig(threshold=0, step=STEP))[0]
    for name in ("w1", "w2", "w3"):
        assert getattr(b, name) == pytest.approx(getattr(a, name), rel=0.01)


def test_spike_train():
    one = gen_synthetic_ap(10000, 40, -15, 0, 1, 2, 3).samples
    gap = np.zeros(50)
    sig = make_signal(np.concatenate([one, gap, one, gap, one]), 10000)
    events = detect_spikes(sig, DetectorConfig(threshold=0, step=STEP))
    assert len(events) == 3
    for prev, nxt in zip(events, events[1:]):
        assert prev.offset_index <= nxt.onset_index


def test_truncated_spike_not_reported():
    x = gen_synthetic_ap(10000, 40, -15, 0, 1, 2, 3).samples[:25]
    assert detect_spikes(make_signal(x, 10000), DetectorConfig(threshold=0, step=STEP)) == []


def test_detector_config_validation():
    with pytest.raises(ValueError):
        DetectorConfig(threshold=0, tolerance=0)
    with pytest.raises(ValueError):
        DetectorConfig(threshold=0, max_duration_s=-1)


@given(st.lists(st.floats(-50, 50), min_size=3, max_size=300), st.floats(-10, 10))
def test_event_invariants(values, thr):
    cfg = DetectorConfig(threshold=thr, tolerance=0.05, step=STEP, max_duration_s=1.0)
    for e in detect_spikes(make_signal(values, 1000), cfg):
        assert e.onset_index < e.peak_index < e.trough_index < e.offset_index
        assert e.residual <= cfg.tolerance
        assert min(e.w1, e.w2, e.w3) >= 0
        assert e.w2 >= e.w1


def test_flat_top_bump_before_peak():
    # crossing, flat-topped bump (no peak symbol), dip, then the real spike
    x = [-1, 0.2, 0.2, 0.1, 0.15, 0.3, 0.1, -0.5, -0.2, 0.0]
    sig = make_signal(x, 1000)
    for e in detect_spikes(sig, DetectorConfig(threshold=0, tolerance=0.5, step=1.0)):
        assert e.w2 >= e.w1
