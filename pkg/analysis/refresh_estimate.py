from dataclasses import dataclass

import numpy as np

from analysis.latency_histogram import build_histogram
from helpers.errors import InsufficientDataError
from helpers.units import cycles_to_ns

THRESHOLD_MARGIN = 10


@dataclass
class RefreshEstimate:
    interval_ns: float
    spike_count: int
    spike_threshold: int
    interval_cycles: float = 0.0


def default_spike_threshold(trace):
    modal = build_histogram(trace.latencies).modal_latency
    return modal + trace.miss_penalty + THRESHOLD_MARGIN


def detect_refresh_interval(trace, clock_mhz=None, spike_threshold=None, merge_cycles=None):
    """
    Estima o período de refresh pelos picos de latência de um trace serial.

    Picos separados por menos de `merge_cycles` (padrão: t_rfc + latência de
    miss, gravado no trace) são a mesma janela e contam uma vez, pelo primeiro.
    O período é o espaçamento médio entre janelas consecutivas.
    """
    clock_mhz = clock_mhz or trace.clock_mhz
    threshold = default_spike_threshold(trace) if spike_threshold is None else spike_threshold
    merge = trace.refresh_merge_cycles if merge_cycles is None else merge_cycles
    spikes = np.asarray([e.issue for e in trace.entries if e.latency > threshold], dtype=np.float64)
    if spikes.size:
        starts = np.concatenate(([True], np.diff(spikes) >= merge))
        spikes = spikes[starts]
    if spikes.size < 2:
        raise InsufficientDataError(
            f"Só {spikes.size} pico(s) acima de {threshold} ciclos; são necessários 2",
            [{"spike_count": int(spikes.size), "spike_threshold": threshold}],
        )

    interval_cycles = float(np.diff(spikes).mean())
    return RefreshEstimate(
        interval_ns=cycles_to_ns(interval_cycles, clock_mhz),
        spike_count=int(spikes.size),
        spike_threshold=int(threshold),
        interval_cycles=interval_cycles,
    )


def estimate_to_dict(estimate):
    return {
        "interval_ns": estimate.interval_ns,
        "interval_cycles": estimate.interval_cycles,
        "spike_count": estimate.spike_count,
        "spike_threshold": estimate.spike_threshold,
    }
