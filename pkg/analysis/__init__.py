from analysis.latency_histogram import LatencyHistogram, build_histogram, histogram_to_dict, POPULATIONS
from analysis.refresh_estimate import (
    RefreshEstimate,
    detect_refresh_interval,
    default_spike_threshold,
    estimate_to_dict,
)
from analysis.classify_trace import classify_trace, classify_latency, latency_levels
from analysis.summarize_sweep import summarize_sweep, pivot_by_policy, SWEEP_COLUMNS
