from interconnect.route_latency import check_route, route_latency
from interconnect.switch_topology import Route


def route_throughput_factor(topo, axi_ch, hbm_ch):
    # um fluxo isolado tem a mesma vazão em qualquer distância; disputa entre fluxos não é modelada
    check_route(topo, axi_ch, hbm_ch)
    return 1.0


def make_route(topo, axi_ch, hbm_ch):
    return Route(
        axi=axi_ch,
        hbm=hbm_ch,
        extra_cycles=route_latency(topo, axi_ch, hbm_ch),
        throughput_factor=route_throughput_factor(topo, axi_ch, hbm_ch),
    )


def local_route(channel):
    """Rota direta, sem switch (DDR4 ou HBM com switch desligado)."""
    return Route(axi=channel, hbm=channel, extra_cycles=0, throughput_factor=1.0)
