import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addrmap import DDR4, HBM, get_policy, list_policies
from dram_model import PseudoChannel, timing_preset
from engine import (
    RstConfig,
    gen_address,
    run_read_latency,
    run_read_throughput,
    run_write_throughput,
    validate_rst,
)
from helpers.errors import RstValidationError
from helpers.units import gbps
from interconnect import SwitchTopology, local_route, make_route

SEQ_N = 20_000


def rst(**kw):
    base = {"A": 0, "B": 32, "S": 64, "W": 0x1000000, "N": 1024}
    base.update(kw)
    return RstConfig(**base)


def test_gen_address_examples():
    assert gen_address(rst(S=64, W=256), 5) == 64
    assert gen_address(rst(A=0x1000, S=128, W=1024), 0) == 0x1000
    assert gen_address(rst(A=0x1000, S=0x100, W=0x100), 7) == 0x1000


@settings(max_examples=10_000, deadline=None)
@given(
    a=st.integers(0, 1 << 10).map(lambda v: v * 64),
    w_exp=st.integers(5, 24),
    s_exp=st.integers(0, 24),
    n=st.integers(1, 300),
)
def test_gen_address_matches_iterative_oracle(a, w_exp, s_exp, n):
    W = 1 << w_exp
    S = 1 << min(s_exp, w_exp)
    cfg = RstConfig(A=a, B=32, S=S, W=W, N=n)
    addr = a
    for i in range(n):
        assert gen_address(cfg, i) == addr
        addr += S
        if addr >= a + W:
            addr -= W


@pytest.mark.parametrize(
    "kind,kw,field",
    [
        (HBM, {"B": 48}, "B"),
        (HBM, {"B": 16}, "B"),
        (DDR4, {"B": 32}, "B"),
        (HBM, {"S": 96}, "S"),
        (HBM, {"W": 16, "S": 16}, "W"),
        (HBM, {"S": 0x2000000}, "S"),
        (HBM, {"A": 16}, "A"),
        (HBM, {"A": 0x8000000, "W": 0x8000000 * 2}, "W"),
        (HBM, {"N": 200_001}, "N"),
    ],
)
def test_validate_rst_names_violation(kind, kw, field):
    with pytest.raises(RstValidationError) as exc:
        validate_rst(rst(**kw), kind)
    assert field in {issue["field"] for issue in exc.value.details}


def _hbm(policy="RGBCG", **overrides):
    return PseudoChannel(get_policy(policy, HBM), timing_preset("hbm-u280", **overrides))


def _ddr4(policy="RCB", **overrides):
    return PseudoChannel(get_policy(policy, DDR4), timing_preset("ddr4-u280", **overrides))


def test_latency_trace_page_miss_stride(route0):
    trace = run_read_latency(rst(S=128 * 1024), _hbm(), route0, debug=True)
    assert len(trace) == 1024
    assert trace.entries[0].latency == 55
    latencies = trace.latencies
    assert max(set(latencies), key=latencies.count) == 62
    assert latencies.count(62) / len(latencies) > 0.9
    assert all(e.latency == 62 for e in trace.entries if e.truth == "miss" and not e.refresh_stall)


def test_latency_trace_page_hit_stride(route0):
    trace = run_read_latency(rst(S=128), _hbm(), route0, debug=True)
    latencies = trace.latencies
    assert max(set(latencies), key=latencies.count) == 48
    assert max(latencies) > 62


def test_ddr4_page_miss_latency(route0):
    trace = run_read_latency(rst(B=64, S=128 * 1024), _ddr4(), route0)
    latencies = trace.latencies
    assert max(set(latencies), key=latencies.count) == 32


def test_serial_issue_ordering(route0):
    trace = run_read_latency(rst(S=4096, N=500), _hbm(), route0)
    for prev, nxt in zip(trace.entries, trace.entries[1:]):
        assert nxt.issue >= prev.issue + prev.latency


def test_trace_capacity_and_clamp(route0):
    trace = run_read_latency(rst(S=128, N=2000), _hbm(), route0, capacity=100)
    assert len(trace) == 100
    rows = trace.export_rows(clamp_8bit=True)
    assert all(row["latency_cycles"] <= 255 for row in rows)
    assert "truth" not in rows[0]


def test_switch_route_adds_to_latency():
    route = make_route(SwitchTopology(enabled=True), 31, 0)
    trace = run_read_latency(rst(S=128 * 1024), _hbm(), route)
    latencies = trace.latencies
    assert max(set(latencies), key=latencies.count) == 62 + 29


def test_hbm_sequential_read_throughput(route0):
    report = run_read_throughput(rst(B=64, S=64, W=0x10000000, N=SEQ_N), _hbm(), route0)
    assert report.bytes == report.transactions * 64
    assert report.gbps == pytest.approx(13.27, rel=0.05)


def test_ddr4_sequential_read_throughput(route0):
    report = run_read_throughput(rst(B=64, S=64, W=0x10000000, N=SEQ_N), _ddr4(), route0)
    assert report.gbps == pytest.approx(18.0, rel=0.05)


def test_hbm_small_burst_large_stride(route0):
    report = run_read_throughput(rst(B=32, S=4096, W=0x10000000, N=4000), _hbm(), route0)
    assert report.gbps == pytest.approx(2.4, rel=0.15)


def test_write_throughput_tracks_read(route0):
    cfg = rst(B=64, S=64, W=0x10000000, N=SEQ_N)
    read = run_read_throughput(cfg, _hbm(), route0)
    write = run_write_throughput(cfg, _hbm(), route0)
    assert write.gbps == pytest.approx(read.gbps, rel=0.05)


def test_write_rejects_small_burst(route0):
    with pytest.raises(RstValidationError):
        run_write_throughput(rst(B=16), _hbm(), route0)


def test_zero_transactions(route0):
    report = run_write_throughput(rst(N=0), _hbm(), route0)
    assert report.transactions == 0
    assert report.bytes == 0
    assert report.gbps == 0.0


@pytest.mark.parametrize("B,S", [(32, 32), (64, 64), (128, 128), (64, 1024)])
def test_throughput_dominance(route0, B, S):
    timing = timing_preset("hbm-u280")
    cfg = rst(B=B, S=S, W=0x10000000, N=2000)
    report = run_read_throughput(cfg, _hbm(), route0)
    trace = run_read_latency(cfg, _hbm(), route0, capacity=cfg.N)
    serial_cycles = trace.entries[-1].issue + trace.entries[-1].latency
    serial = gbps(cfg.N * B, serial_cycles, timing.clock_mhz)
    floor = gbps(B, timing.miss_latency, timing.clock_mhz)
    peak = gbps(timing.bus_bytes_per_cycle, 1, timing.clock_mhz)
    assert floor <= report.gbps <= peak
    assert report.gbps > serial


def test_refresh_amortization(route0):
    cfg = rst(B=64, S=64, W=0x10000000, N=SEQ_N)
    with_refresh = run_read_throughput(cfg, _hbm(), route0)
    without = run_read_throughput(cfg, _hbm(t_refi=1e9), route0)
    t = timing_preset("hbm-u280")
    # a janela de refresh mais a reabertura de uma linha
    bound = (t.rfc_cycles + t.miss_latency) / t.refi_cycles
    assert without.gbps >= with_refresh.gbps
    assert 1 - with_refresh.gbps / without.gbps <= bound


def test_outstanding_limit_sixteen_still_saturates(route0):
    cfg = rst(B=64, S=64, W=0x10000000, N=4000)
    deep = run_read_throughput(cfg, _hbm(), route0, max_outstanding=64)
    shallow = run_read_throughput(cfg, _hbm(), route0, max_outstanding=16)
    assert shallow.gbps <= deep.gbps
    assert shallow.gbps > 0.5 * deep.gbps


KINDS = {"HBM": (HBM, "hbm-u280", 32), "DDR4": (DDR4, "ddr4-u280", 64)}


def _serial_trace(kind_name, policy_index, s_exp, n):
    kind, preset, burst = KINDS[kind_name]
    policy = list_policies(kind)[policy_index % len(list_policies(kind))]
    timing = timing_preset(preset)
    cfg = rst(B=burst, S=1 << max(s_exp, burst.bit_length() - 1), N=n)
    trace = run_read_latency(cfg, PseudoChannel(policy, timing), local_route(0), capacity=n, debug=True)
    return trace, timing


@given(
    kind_name=st.sampled_from(sorted(KINDS)),
    policy_index=st.integers(0, 4),
    s_exp=st.integers(5, 17),
    n=st.integers(1, 600),
)
def test_latencies_never_below_t_cas(kind_name, policy_index, s_exp, n):
    trace, timing = _serial_trace(kind_name, policy_index, s_exp, n)
    assert len(trace) == n
    assert min(trace.latencies) >= timing.t_cas


@given(
    kind_name=st.sampled_from(sorted(KINDS)),
    policy_index=st.integers(0, 4),
    s_exp=st.integers(5, 17),
)
def test_refresh_spikes_are_spaced_by_t_refi(kind_name, policy_index, s_exp):
    trace, timing = _serial_trace(kind_name, policy_index, s_exp, 1024)
    spikes = [e.issue for e in trace.entries if e.refresh_stall]
    assert len(spikes) >= 3
    slack = max(trace.latencies)
    for prev, nxt in zip(spikes, spikes[1:]):
        assert abs((nxt - prev) - timing.refi_cycles) <= slack


def test_access_counts_match_transactions(route0):
    report = run_read_throughput(rst(B=64, S=64, W=0x10000000, N=4000), _hbm(), route0)
    assert sum(report.access_counts.values()) == report.transactions == 4000
