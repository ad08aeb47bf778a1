from interconnect.switch_topology import (
    SwitchTopology,
    Route,
    NUM_CHANNELS,
    SWITCH_BASE_CYCLES,
    mini_switch_of,
    extrapolated_penalty,
)
from interconnect.route_latency import route_latency, check_route
from interconnect.route_throughput_factor import route_throughput_factor, make_route, local_route
