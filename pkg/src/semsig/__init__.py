"""Encode 1-D signals as strings of three-point shape configurations."""

__version__ = "0.1.0"

from .analysis import (ConfigHistogram, EntropySeries, bhattacharyya, config_histogram,
                       semantic_entropy, semantic_information, sliding_entropy)
from .automaton import AcceptanceResult, State, compatible, dfa_accept, dfa_step
from .encoder import (SignTriple, classify_window, p_products, semantic_power, sign_of,
                      symbolize)
from .resampler import (ShapeRun, SplineModel, fit_cubic_spline, resample, resample_study,
                        shape_runs)
from .signal import Signal, gen_sine, gen_synthetic_ap, make_signal, shuffle_surrogate
from .transducer import DetectorConfig, SpikeEvent, detect_spikes, edge_weight, weight_vector
