from typing import NamedTuple, Optional

from pydantic import BaseModel, ConfigDict, Field

NUM_CHANNELS = 32
NUM_MINI_SWITCHES = 8
PORTS_PER_MINI_SWITCH = 4
SWITCH_BASE_CYCLES = 7
# os mini-switches 0-3 ficam numa pilha HBM e 4-7 na outra
STACK_BOUNDARY = 4
STACK_CROSSING_CYCLES = 9


def mini_switch_of(channel):
    return channel // PORTS_PER_MINI_SWITCH


def extrapolated_penalty(src_ms, dst_ms):
    """Penalidade entre dois mini-switches: 2 ciclos por salto, 1 no primeiro, +9 ao cruzar de pilha."""
    if src_ms == dst_ms:
        return 0
    hops = abs(src_ms - dst_ms)
    crosses = (src_ms < STACK_BOUNDARY) != (dst_ms < STACK_BOUNDARY)
    return 2 * hops - 1 + (STACK_CROSSING_CYCLES if crosses else 0)


class SwitchTopology(BaseModel):
    """Switch entre os 32 canais AXI e os 32 pseudo canais: 8 mini-switches de 4 portas."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    enabled: bool = False
    num_mini_switches: int = Field(default=NUM_MINI_SWITCHES, ge=1)
    ports_per_mini_switch: int = Field(default=PORTS_PER_MINI_SWITCH, ge=1)
    # chaves "origem,destino" (mini-switches) -> ciclos; sobrescreve a extrapolação
    latency_penalty: Optional[dict[str, int]] = None

    def penalty(self, src_ms, dst_ms):
        if self.latency_penalty:
            key = f"{src_ms},{dst_ms}"
            if key in self.latency_penalty:
                return self.latency_penalty[key]
        return extrapolated_penalty(src_ms, dst_ms)


class Route(NamedTuple):
    axi: int
    hbm: int
    extra_cycles: int
    throughput_factor: float
