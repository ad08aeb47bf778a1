import math

from addrmap import decode
from engine.gen_address import gen_address
from engine.latency_trace import DEFAULT_TRACE_CAPACITY, LatencyTrace, TraceEntry
from engine.rst_config import validate_rst
from helpers.logger import get_logger

logger = get_logger("engine")


def run_read_latency(cfg, channel, route, capacity=DEFAULT_TRACE_CAPACITY, debug=False):
    """
    Modo latência: cada leitura só é emitida quando a anterior devolve os dados.

    A latência de cada transação é conclusão - emissão, já incluindo os ciclos
    extras da rota. Só as primeiras `capacity` entradas ficam no trace.
    """
    policy = channel.policy
    validate_rst(cfg, policy.kind)
    timing = channel.timing
    trace = LatencyTrace(
        capacity=capacity,
        burst_bytes=cfg.B,
        route_extra=route.extra_cycles,
        clock_mhz=timing.clock_mhz,
        miss_penalty=timing.t_rp + timing.t_rcd,
        refresh_merge_cycles=timing.rfc_cycles + timing.miss_latency,
    )

    issue = 0
    for i in range(cfg.N):
        coords = decode(policy, gen_address(cfg, i))
        result = channel.service_read(coords, cfg.B, issue + route.extra_cycles)
        completion = int(math.ceil(result.completion_cycle))
        trace.record(
            TraceEntry(
                index=i,
                issue=issue,
                latency=completion - issue,
                truth=result.classification.value if debug else None,
                refresh_stall=channel.last_refresh_stall if debug else None,
            )
        )
        issue = completion
        if trace.full:
            # o resto da execução não muda nada que o trace registre
            break

    logger.debug(f"Latência: {len(trace)} entradas, canal {route.axi}->{route.hbm}")
    return trace
