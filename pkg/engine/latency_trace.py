from dataclasses import dataclass, field
from typing import NamedTuple, Optional

DEFAULT_TRACE_CAPACITY = 1024
MAX_8BIT = 255


class TraceEntry(NamedTuple):
    index: int
    issue: int
    latency: int
    # preenchidos só em modo debug
    truth: Optional[str] = None
    refresh_stall: Optional[int] = None


@dataclass
class LatencyTrace:
    """Lista de latências de leitura serial, como a memória de latências do módulo de hardware."""

    capacity: int = DEFAULT_TRACE_CAPACITY
    burst_bytes: int = 32
    route_extra: int = 0
    clock_mhz: float = 450.0
    miss_penalty: int = 0
    # picos mais próximos que isso caem na mesma janela de refresh
    refresh_merge_cycles: float = 0
    entries: list = field(default_factory=list)

    def record(self, entry):
        if len(self.entries) < self.capacity:
            self.entries.append(entry)
            return True
        return False

    @property
    def full(self):
        return len(self.entries) >= self.capacity

    @property
    def latencies(self):
        return [e.latency for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def export_rows(self, clamp_8bit=False):
        rows = []
        for e in self.entries:
            latency = min(e.latency, MAX_8BIT) if clamp_8bit else e.latency
            row = {"index": e.index, "issue_cycle": e.issue, "latency_cycles": latency}
            if e.truth is not None:
                row["truth"] = e.truth
                row["refresh_stall"] = e.refresh_stall
            rows.append(row)
        return rows
