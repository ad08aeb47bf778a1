import pytest

from interconnect import (
    SwitchTopology,
    extrapolated_penalty,
    local_route,
    make_route,
    mini_switch_of,
    route_latency,
    route_throughput_factor,
)
from helpers.errors import RoutingError

ON = SwitchTopology(enabled=True)
OFF = SwitchTopology()


def test_penalties_to_mini_switch_zero():
    assert [extrapolated_penalty(src, 0) for src in range(8)] == [0, 1, 3, 5, 16, 18, 20, 22]


def test_mini_switch_membership():
    assert [mini_switch_of(ch) for ch in (0, 3, 4, 7, 28, 31)] == [0, 0, 1, 1, 7, 7]


def test_route_latency_examples():
    assert route_latency(ON, 0, 0) == 7
    assert route_latency(ON, 31, 0) == 7 + 22
    assert route_latency(OFF, 5, 5) == 0


def test_ports_in_one_mini_switch_are_equivalent():
    for dst in (0, 13, 30):
        for ms in range(8):
            values = {route_latency(ON, 4 * ms + port, dst) for port in range(4)}
            assert len(values) == 1


def test_switch_adds_seven_cycles_locally():
    for ch in range(32):
        assert route_latency(ON, ch, ch) - route_latency(OFF, ch, ch) == 7


def test_penalty_is_symmetric():
    for src in range(8):
        for dst in range(8):
            assert ON.penalty(src, dst) == ON.penalty(dst, src)


def test_disabled_switch_rejects_global_addressing():
    with pytest.raises(RoutingError):
        route_latency(OFF, 0, 4)
    with pytest.raises(RoutingError):
        route_throughput_factor(OFF, 0, 4)


def test_channel_index_range():
    with pytest.raises(RoutingError):
        route_latency(ON, 32, 0)
    with pytest.raises(RoutingError):
        route_latency(ON, 0, -1)


def test_throughput_factor_is_flat():
    assert route_throughput_factor(OFF, 3, 3) == 1.0
    assert {route_throughput_factor(ON, axi, 0) for axi in range(32)} == {1.0}


def test_penalty_override():
    topo = SwitchTopology(enabled=True, latency_penalty={"7,0": 30})
    assert route_latency(topo, 28, 0) == 37
    assert route_latency(topo, 24, 0) == 7 + 20


def test_make_route_bundles_values():
    route = make_route(ON, 31, 0)
    assert (route.axi, route.hbm, route.extra_cycles, route.throughput_factor) == (31, 0, 29, 1.0)
    assert local_route(1).extra_cycles == 0


def test_channel_range_follows_topology_size():
    small = SwitchTopology(enabled=True, num_mini_switches=2)
    assert route_latency(small, 7, 0) == 7 + 1
    with pytest.raises(RoutingError):
        route_latency(small, 8, 0)
