from dataclasses import dataclass
from enum import Enum


class Field(str, Enum):
    ROW = "Row"
    BANK_GROUP = "BankGroup"
    BANK = "Bank"
    COLUMN = "Column"


# letras usadas na notação das políticas ("14R-2BG-2B-5C")
FIELD_LETTERS = {"R": Field.ROW, "BG": Field.BANK_GROUP, "B": Field.BANK, "C": Field.COLUMN}


@dataclass(frozen=True)
class MemoryKind:
    """Tipo de memória: faixa de bits da aplicação decodificada, burst mínimo e clock."""

    kind: str
    addr_field_lo: int
    addr_field_hi: int
    min_burst_bytes: int
    bus_bytes_per_cycle: int
    clock_mhz: float
    # totais por campo exigidos das políticas embutidas (None = só soma de larguras)
    field_totals: tuple = None

    @property
    def field_bits(self):
        return self.addr_field_hi - self.addr_field_lo + 1

    @property
    def capacity_bytes(self):
        return 1 << (self.addr_field_hi + 1)

    def __str__(self):
        return self.kind


HBM = MemoryKind(
    kind="HBM",
    addr_field_lo=5,
    addr_field_hi=27,
    min_burst_bytes=32,
    bus_bytes_per_cycle=32,
    clock_mhz=450.0,
    field_totals=((Field.ROW, 14), (Field.BANK_GROUP, 2), (Field.BANK, 2), (Field.COLUMN, 5)),
)

DDR4 = MemoryKind(
    kind="DDR4",
    addr_field_lo=6,
    addr_field_hi=33,
    min_burst_bytes=64,
    bus_bytes_per_cycle=64,
    clock_mhz=300.0,
    field_totals=((Field.ROW, 17), (Field.BANK_GROUP, 2), (Field.BANK, 2), (Field.COLUMN, 7)),
)

MEMORY_KINDS = {"HBM": HBM, "DDR4": DDR4}


def get_memory_kind(name):
    from helpers.errors import PolicyError

    key = str(name).upper()
    if key not in MEMORY_KINDS:
        raise PolicyError(f"Tipo de memória desconhecido: {name}", [{"valid": sorted(MEMORY_KINDS)}])
    return MEMORY_KINDS[key]
