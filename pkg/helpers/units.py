import math


def cycles_to_ns(cycles, clock_mhz):
    """Converte ciclos do clock AXI em nanossegundos."""
    return cycles * 1000.0 / clock_mhz


def ns_to_cycles(ns, clock_mhz):
    # arredonda para cima: uma janela nunca fica menor que o tempo pedido
    return int(math.ceil(ns * clock_mhz / 1000.0 - 1e-9))


def gbps(num_bytes, cycles, clock_mhz):
    """GB/s (10^9 bytes por segundo) para `num_bytes` movidos em `cycles`."""
    if cycles <= 0:
        return 0.0
    return num_bytes * clock_mhz / (cycles * 1000.0)
