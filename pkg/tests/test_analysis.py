import pandas as pd
import pytest

from addrmap import HBM, get_policy
from analysis import (
    build_histogram,
    classify_trace,
    detect_refresh_interval,
    estimate_to_dict,
    histogram_to_dict,
    latency_levels,
    pivot_by_policy,
    summarize_sweep,
)
from dram_model import PseudoChannel, timing_preset
from engine import LatencyTrace, RstConfig, ThroughputReport, TraceEntry, run_read_latency, run_read_throughput
from helpers.errors import InsufficientDataError
from interconnect import local_route


def synthetic(latencies, issues=None, route_extra=0, burst=32):
    issues = issues or [i * 100 for i in range(len(latencies))]
    trace = LatencyTrace(
        capacity=len(latencies) or 1,
        burst_bytes=burst,
        route_extra=route_extra,
        clock_mhz=450.0,
        miss_penalty=14,
        refresh_merge_cycles=72 + 62,
    )
    for i, (issue, latency) in enumerate(zip(issues, latencies)):
        trace.record(TraceEntry(index=i, issue=issue, latency=latency))
    return trace


def serial_trace(S=128, N=1024, policy="RGBCG", **overrides):
    timing = timing_preset("hbm-u280", **overrides)
    channel = PseudoChannel(get_policy(policy, HBM), timing)
    cfg = RstConfig(A=0, B=32, S=S, W=0x1000000, N=N)
    return run_read_latency(cfg, channel, local_route(0), capacity=N, debug=True), timing


def test_histogram_counts_sum_to_length():
    hist = build_histogram([48, 48, 55, 62, 48])
    assert hist.buckets == {48: 3, 55: 1, 62: 1}
    assert hist.modal_latency == 48
    assert hist.total == 5


def test_two_spikes_one_interval_apart():
    latencies = [48] * 50
    issues = list(range(0, 5000, 100))
    latencies[1] = 200
    latencies[36] = 200
    estimate = detect_refresh_interval(synthetic(latencies, issues), 450.0)
    # picos em 100 e 3600
    assert estimate.spike_count == 2
    assert estimate.interval_cycles == 3500
    assert estimate.interval_ns == pytest.approx(3500 * 1000 / 450)


def test_exact_3510_cycle_spacing_is_7800_ns():
    trace = synthetic([48, 300, 48, 300, 48], issues=[0, 90, 1000, 3600, 4000])
    estimate = detect_refresh_interval(trace, 450.0)
    assert estimate.interval_ns == pytest.approx(7800.0)


def test_constant_trace_has_no_spikes():
    with pytest.raises(InsufficientDataError):
        detect_refresh_interval(synthetic([48] * 200), 450.0)


def test_spikes_in_one_window_count_once():
    trace = synthetic([300] * 4, issues=[0, 100, 3510, 7020])
    estimate = detect_refresh_interval(trace, 450.0, spike_threshold=100)
    assert estimate.spike_count == 3
    assert estimate.interval_cycles == pytest.approx(3510)


def test_two_windows_with_a_doubled_first_spike():
    trace = synthetic([300] * 3, issues=[0, 100, 3610])
    estimate = detect_refresh_interval(trace, 450.0, spike_threshold=100)
    assert estimate.spike_count == 2
    assert estimate.interval_cycles == pytest.approx(3610)


def test_interval_is_mean_spacing_between_windows():
    trace = synthetic([300] * 3, issues=[0, 3500, 7040])
    estimate = detect_refresh_interval(trace, 450.0, spike_threshold=100)
    assert estimate.interval_cycles == pytest.approx(3520)
    # sem agrupamento, 100 ciclos já separam janelas
    close = synthetic([300] * 3, issues=[0, 100, 3610])
    assert detect_refresh_interval(close, 450.0, spike_threshold=100, merge_cycles=0).interval_cycles == pytest.approx(1805)


def test_simulated_refresh_interval_within_two_percent():
    trace, timing = serial_trace(S=128)
    estimate = detect_refresh_interval(trace, timing.clock_mhz)
    assert estimate.spike_count >= 3
    assert estimate.interval_ns == pytest.approx(timing.t_refi, rel=0.02)
    assert abs(estimate.interval_cycles - timing.refi_cycles) <= timing.miss_latency + timing.rfc_cycles
    assert estimate_to_dict(estimate)["spike_count"] == estimate.spike_count


def test_classify_all_miss():
    hist = classify_trace(synthetic([62] * 40), timing_preset("hbm-u280"), 0)
    assert hist.populations["miss"] == 40
    assert hist.fraction("miss") == 1.0


def test_classify_switch_local_hits():
    hist = classify_trace(synthetic([55] * 40), timing_preset("hbm-u280"), 7)
    assert hist.populations["hit"] == 40


def test_classify_empty_trace():
    hist = classify_trace(synthetic([]), timing_preset("hbm-u280"), 0)
    assert hist.total == 0
    assert sum(hist.populations.values()) == 0
    assert histogram_to_dict(hist)["buckets"] == {}


def test_unmatched_latency_counts_as_refresh():
    hist = classify_trace(synthetic([48, 51, 55, 140]), timing_preset("hbm-u280"), 0)
    assert hist.populations == {"hit": 1, "closed": 1, "miss": 0, "refresh": 2}


def test_levels_shift_with_route_and_beats():
    timing = timing_preset("hbm-u280")
    assert latency_levels(timing, 7, 64) == {"hit": 56, "closed": 63, "miss": 70}


@pytest.mark.parametrize("S", [128, 4096, 128 * 1024])
def test_classifier_matches_ground_truth(S):
    trace, timing = serial_trace(S=S)
    hist = classify_trace(trace, timing, trace.route_extra)
    miss_level = latency_levels(timing, 0, 32)["miss"]
    assert sum(hist.populations.values()) == len(trace)
    for entry, label in zip(trace.entries, hist.labels):
        if not entry.refresh_stall:
            assert label == entry.truth
        elif entry.latency > miss_level + 1:
            assert label == "refresh"


def _report(gbps, W=0x10000000):
    return ThroughputReport(transactions=1, bytes=64, cycles=1, gbps=gbps, rst=RstConfig(A=0, B=64, S=64, W=W, N=1))


def test_summarize_single_report():
    table = summarize_sweep([("RGBCG", 64, 64, _report(13.27))])
    assert list(table.columns) == ["policy", "B", "S", "W", "gbps"]
    assert len(table) == 1
    assert table.iloc[0]["gbps"] == 13.27


def test_summarize_orders_policy_burst_stride():
    rows = [
        ("BRC", 128, 32, _report(1.0)),
        ("RBC", 4096, 64, _report(2.0)),
        ("RBC", 64, 64, _report(3.0)),
        ("RBC", 64, 32, _report(4.0)),
    ]
    table = summarize_sweep(rows)
    assert list(zip(table["policy"], table["B"], table["S"])) == [
        ("RBC", 32, 64),
        ("RBC", 64, 64),
        ("RBC", 64, 4096),
        ("BRC", 32, 128),
    ]


def _seq_gbps(policy, B, S, W=0x10000000, N=4000):
    channel = PseudoChannel(get_policy(policy, HBM), timing_preset("hbm-u280"))
    cfg = RstConfig(A=0, B=B, S=S, W=W, N=N)
    return run_read_throughput(cfg, channel, local_route(0))


def test_default_policy_beats_brc_by_far():
    table = summarize_sweep(
        [(p, 1024, 32, _seq_gbps(p, 32, 1024)) for p in ("RGBCG", "BRC")]
    )
    by_policy = dict(zip(table["policy"], table["gbps"]))
    assert by_policy["RGBCG"] / by_policy["BRC"] >= 5


def test_locality_pair():
    small = _seq_gbps("RGBCG", 32, 4096, W=8192)
    large = _seq_gbps("RGBCG", 32, 4096, W=0x10000000)
    assert small.gbps / large.gbps >= 2


def test_rbc_bank_group_effect():
    assert _seq_gbps("RBC", 64, 2048).gbps > _seq_gbps("RBC", 64, 128).gbps


def test_pivot_by_policy_one_curve_per_policy_and_working_set():
    table = pd.DataFrame(
        {
            "policy": ["RBC", "RBC", "BRC", "BRC", "RBC"],
            "B": [64, 64, 64, 64, 128],
            "S": [64, 128, 64, 128, 64],
            "W": [1024] * 5,
            "gbps": [10.0, 9.0, 3.0, 2.5, 12.0],
        }
    )
    curves = pivot_by_policy(table, 64)
    assert list(curves.columns) == ["RBC", "BRC"]
    assert list(curves.index) == [64, 128]
    assert curves.loc[128, "BRC"] == 2.5

    table.loc[1, "W"] = 4096
    assert set(pivot_by_policy(table, 64).columns) == {"RBC W=1024", "RBC W=4096", "BRC W=1024"}
