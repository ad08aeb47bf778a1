from dataclasses import dataclass, field
from typing import Optional

from helpers.units import gbps as to_gbps


@dataclass
class ThroughputReport:
    transactions: int = 0
    bytes: int = 0
    cycles: float = 0.0
    gbps: float = 0.0
    clock_mhz: float = 0.0
    access_counts: dict = field(default_factory=dict)
    rst: Optional[object] = None

    @classmethod
    def measured(cls, transactions, burst_bytes, cycles, clock_mhz, factor=1.0, access_counts=None, rst=None):
        total = transactions * burst_bytes
        return cls(
            transactions=transactions,
            bytes=total,
            cycles=cycles,
            gbps=to_gbps(total, cycles, clock_mhz) * factor,
            clock_mhz=clock_mhz,
            access_counts=dict(access_counts or {}),
            rst=rst,
        )

    def to_dict(self):
        doc = {
            "transactions": self.transactions,
            "bytes": self.bytes,
            "cycles": self.cycles,
            "gbps": self.gbps,
            "access_counts": dict(sorted(self.access_counts.items())),
        }
        if self.rst is not None:
            doc["rst"] = self.rst.model_dump()
        return doc
