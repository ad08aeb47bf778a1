from helpers.errors import RoutingError
from interconnect.switch_topology import SWITCH_BASE_CYCLES


def check_route(topo, axi_ch, hbm_ch):
    channels = topo.num_mini_switches * topo.ports_per_mini_switch
    for label, value in (("AXI", axi_ch), ("HBM", hbm_ch)):
        if not 0 <= value < channels:
            raise RoutingError(f"Canal {label} {value} fora de 0..{channels - 1}")
    if not topo.enabled and axi_ch != hbm_ch:
        raise RoutingError(
            f"Switch desligado: AXI {axi_ch} só acessa o HBM {axi_ch}, não o {hbm_ch}",
            [{"axi": axi_ch, "hbm": hbm_ch, "hint": "habilite switch.enabled para endereçamento global"}],
        )


def route_latency(topo, axi_ch, hbm_ch):
    """Ciclos extras somados a toda transação no caminho AXI -> pseudo canal."""
    check_route(topo, axi_ch, hbm_ch)
    if not topo.enabled:
        return 0
    src = axi_ch // topo.ports_per_mini_switch
    dst = hbm_ch // topo.ports_per_mini_switch
    return SWITCH_BASE_CYCLES + topo.penalty(src, dst)
