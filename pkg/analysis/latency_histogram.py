from dataclasses import dataclass, field

import numpy as np

POPULATIONS = ("hit", "closed", "miss", "refresh")


@dataclass
class LatencyHistogram:
    buckets: dict = field(default_factory=dict)
    modal_latency: int = 0
    populations: dict = field(default_factory=lambda: {name: 0 for name in POPULATIONS})
    labels: list = field(default_factory=list)

    @property
    def total(self):
        return sum(self.buckets.values())

    def fraction(self, population):
        return self.populations[population] / self.total if self.total else 0.0


def build_histogram(latencies):
    """Contagem por latência e latência modal (empate fica com a menor)."""
    values = np.asarray(list(latencies), dtype=np.int64)
    if values.size == 0:
        return LatencyHistogram()
    uniques, counts = np.unique(values, return_counts=True)
    modal = int(uniques[int(np.argmax(counts))])
    buckets = {int(u): int(c) for u, c in zip(uniques, counts)}
    return LatencyHistogram(buckets=buckets, modal_latency=modal)


def histogram_to_dict(hist):
    return {
        "buckets": {str(k): v for k, v in sorted(hist.buckets.items())},
        "modal_latency": hist.modal_latency,
        "populations": dict(hist.populations),
        "total": hist.total,
    }
