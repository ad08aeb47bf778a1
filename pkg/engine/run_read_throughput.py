from collections import deque

from addrmap import decode
from engine.gen_address import gen_address
from engine.rst_config import validate_rst
from engine.throughput_report import ThroughputReport
from helpers.logger import get_logger

logger = get_logger("engine")

DEFAULT_MAX_OUTSTANDING = 64


def saturate(cfg, channel, route, service, max_outstanding=DEFAULT_MAX_OUTSTANDING):
    """
    Emissor saturado: uma nova transação entra assim que o controlador aceita
    (min_issue_gap) e existe vaga entre as `max_outstanding` pendentes.
    """
    policy = channel.policy
    validate_rst(cfg, policy.kind)
    timing = channel.timing
    if cfg.N == 0:
        return ThroughputReport(clock_mhz=timing.clock_mhz, rst=cfg)

    in_flight = deque()
    issue = 0
    last_completion = 0
    for i in range(cfg.N):
        if i:
            issue += timing.min_issue_gap
        if len(in_flight) >= max_outstanding:
            issue = max(issue, in_flight.popleft())
        coords = decode(policy, gen_address(cfg, i))
        completion = service(coords, cfg.B, issue + route.extra_cycles)
        in_flight.append(completion)
        last_completion = max(last_completion, completion)

    cycles = last_completion + 1
    report = ThroughputReport.measured(
        transactions=cfg.N,
        burst_bytes=cfg.B,
        cycles=cycles,
        clock_mhz=timing.clock_mhz,
        factor=route.throughput_factor,
        access_counts=channel.access_counts,
        rst=cfg,
    )
    logger.debug(f"Vazão {report.gbps:.3f} GB/s em {cycles:.0f} ciclos (B={cfg.B}, S={cfg.S}, W={cfg.W})")
    return report


def run_read_throughput(cfg, channel, route, max_outstanding=DEFAULT_MAX_OUTSTANDING):
    def service(coords, burst, cycle):
        return channel.service_read(coords, burst, cycle).completion_cycle

    return saturate(cfg, channel, route, service, max_outstanding)
