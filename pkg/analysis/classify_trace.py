from analysis.latency_histogram import build_histogram

TOLERANCE = 1


def latency_levels(params, route_extra=0, burst_bytes=None):
    """Latências ociosas de hit/closed/miss vistas pelo motor, com rota e beats extras."""
    beats = max(1, (burst_bytes or params.bus_bytes_per_cycle) // params.bus_bytes_per_cycle)
    shift = route_extra + beats - 1
    return {
        "hit": params.hit_latency + shift,
        "closed": params.closed_latency + shift,
        "miss": params.miss_latency + shift,
    }


def classify_latency(latency, levels):
    for name, level in levels.items():
        if abs(latency - level) <= TOLERANCE:
            return name
    return "refresh"


def classify_trace(trace, params, route_extra=None):
    """Atribui cada entrada a hit/closed/miss pela proximidade (±1 ciclo); o resto é refresh."""
    extra = trace.route_extra if route_extra is None else route_extra
    levels = latency_levels(params, extra, trace.burst_bytes)
    hist = build_histogram(trace.latencies)
    for entry in trace.entries:
        label = classify_latency(entry.latency, levels)
        hist.populations[label] += 1
        hist.labels.append(label)
    return hist
