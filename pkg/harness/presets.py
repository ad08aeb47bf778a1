from dataclasses import dataclass
from typing import Callable

from addrmap import DEFAULT_POLICY, POLICY_LAYOUTS
from harness.experiment_config import build_config
from helpers.errors import PresetNotFoundError
from helpers.units import cycles_to_ns

LATENCY_N = 1024
TABLE6_N = 20_000
SWEEP_N = 4_000

MISS_STRIDE = 128 * 1024
HIT_STRIDE = 128
LATENCY_W = 0x1000000
SEQUENTIAL_W = 0x10000000
MIN_BURST = {"HBM": 32, "DDR4": 64}
SWEEP_STRIDES = [64 * 2**k for k in range(10)]


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    build: Callable
    results: Callable

    def configs(self):
        return [build_config(data) for data in self.build()]


def _latency_cfg(name, memory, stride, **extra):
    data = {
        "name": name,
        "memory": memory,
        "mode": "latency",
        "rst": {"A": 0, "B": MIN_BURST[memory], "S": stride, "W": LATENCY_W, "N": LATENCY_N},
    }
    data.update(extra)
    return data


def _only(runs):
    return runs[0]


def _idle_levels(hit_run, miss_run, clock_mhz):
    cycles = {
        "hit": hit_run.histogram.modal_latency,
        "closed": miss_run.trace.entries[0].latency,
        "miss": miss_run.histogram.modal_latency,
    }
    return {
        "cycles": cycles,
        "ns": {key: cycles_to_ns(value, clock_mhz) for key, value in cycles.items()},
    }


# table4 ---------------------------------------------------------------


def _table4_build():
    return [
        _latency_cfg("hbm_hit", "HBM", HIT_STRIDE),
        _latency_cfg("hbm_miss", "HBM", MISS_STRIDE),
        _latency_cfg("ddr4_hit", "DDR4", HIT_STRIDE),
        _latency_cfg("ddr4_miss", "DDR4", MISS_STRIDE),
    ]


def _table4_results(runs, configs):
    out = {}
    for memory, prefix in (("HBM", "hbm"), ("DDR4", "ddr4")):
        clock = configs[f"{prefix}_hit"].timing().clock_mhz
        out[memory] = _idle_levels(_only(runs[f"{prefix}_hit"]), _only(runs[f"{prefix}_miss"]), clock)
    return out


# table5 ---------------------------------------------------------------


def _switch_channels():
    return [{"axi": 4 * ms, "hbm": 0} for ms in range(8)]


def _table5_build():
    switch = {"switch": {"enabled": True}, "channels": _switch_channels()}
    return [
        _latency_cfg("switch_hit", "HBM", HIT_STRIDE, **switch),
        _latency_cfg("switch_miss", "HBM", MISS_STRIDE, **switch),
    ]


def _table5_results(runs, configs):
    clock = configs["switch_hit"].timing().clock_mhz
    rows = []
    for hit_run, miss_run in zip(runs["switch_hit"], runs["switch_miss"]):
        ms = hit_run.axi // 4
        levels = _idle_levels(hit_run, miss_run, clock)
        rows.append({"mini_switch": ms, "axi_channels": f"{4 * ms}-{4 * ms + 3}", **levels})
    spread = {
        key: max(r["cycles"][key] for r in rows) - min(r["cycles"][key] for r in rows)
        for key in ("hit", "closed", "miss")
    }
    return {"matrix": rows, "spread_cycles": spread}


# table6 ---------------------------------------------------------------


def _sequential_cfg(name, memory, channels, n):
    return {
        "name": name,
        "memory": memory,
        "mode": "read_throughput",
        "rst": {"A": 0, "B": 64, "S": 64, "W": SEQUENTIAL_W, "N": n},
        "channels": [{"axi": ch, "hbm": ch} for ch in range(channels)],
    }


def _table6_build():
    return [_sequential_cfg("hbm_sequential", "HBM", 32, TABLE6_N), _sequential_cfg("ddr4_sequential", "DDR4", 2, TABLE6_N)]


def _table6_results(runs, configs):
    out = {}
    for memory, name in (("HBM", "hbm_sequential"), ("DDR4", "ddr4_sequential")):
        values = [run.report.gbps for run in runs[name]]
        out[memory] = {
            "channels": len(values),
            "per_channel_gbps": sum(values) / len(values),
            "aggregate_gbps": sum(values),
        }
    return out


# fig4-refresh ---------------------------------------------------------


def _fig4_build():
    return [
        _latency_cfg("hbm_refresh", "HBM", HIT_STRIDE, debug=True),
        _latency_cfg("ddr4_refresh", "DDR4", HIT_STRIDE, debug=True),
    ]


def _fig4_results(runs, configs):
    out = {}
    for memory, name in (("HBM", "hbm_refresh"), ("DDR4", "ddr4_refresh")):
        run = _only(runs[name])
        configured = configs[name].timing().t_refi
        estimate = run.estimate
        out[memory] = {
            "configured_refi_ns": configured,
            "estimated_refi_ns": estimate.interval_ns if estimate else None,
            "spike_count": estimate.spike_count if estimate else 0,
            "error_pct": abs(estimate.interval_ns - configured) / configured * 100 if estimate else None,
        }
    return out


# fig5-policy-sweep ----------------------------------------------------


def _policy_sweep_cfg(name, memory, bursts):
    return {
        "name": name,
        "memory": memory,
        "mode": "read_throughput",
        "policy": list(POLICY_LAYOUTS[memory]),
        "rst": {"A": 0, "B": bursts, "S": SWEEP_STRIDES, "W": SEQUENTIAL_W, "N": SWEEP_N},
    }


def _fig5_build():
    return [
        _policy_sweep_cfg("hbm_policies", "HBM", [32, 64, 128, 256]),
        _policy_sweep_cfg("ddr4_policies", "DDR4", [64, 128, 256, 512]),
    ]


def _gbps_table(runs):
    return {(r.policy, r.rst.B, r.rst.S, r.rst.W): r.report.gbps for r in runs}


def _fig5_results(runs, configs):
    out = {}
    for memory, name in (("HBM", "hbm_policies"), ("DDR4", "ddr4_policies")):
        table = _gbps_table(runs[name])
        default = DEFAULT_POLICY[memory]
        points = sorted({(B, S) for _, B, S, _ in table})
        ratios = []
        for B, S in points:
            best = max(table[(p, B, S, SEQUENTIAL_W)] for p in POLICY_LAYOUTS[memory])
            ratios.append({"B": B, "S": S, "default_over_best": table[(default, B, S, SEQUENTIAL_W)] / best})
        peak = max(table.values())
        out[memory] = {
            "default_policy": default,
            "points": len(points),
            "default_over_best": ratios,
            "min_default_over_best": min(r["default_over_best"] for r in ratios),
            "sequential_peak_gbps": peak,
        }
        large = [g for (_, _, S, _), g in table.items() if S > 8192]
        out[memory]["large_stride_max_fraction"] = max(large) / peak
        if memory == "HBM":
            out[memory]["rgbcg_over_brc_s1024_b32"] = (
                table[("RGBCG", 32, 1024, SEQUENTIAL_W)] / table[("BRC", 32, 1024, SEQUENTIAL_W)]
            )
            out[memory]["rbc_b64_s2048_over_s128"] = (
                table[("RBC", 64, 2048, SEQUENTIAL_W)] / table[("RBC", 64, 128, SEQUENTIAL_W)]
            )
    return out


# fig7-locality --------------------------------------------------------

LOCALITY_W = [8192, 65536, 1048576, 16777216, SEQUENTIAL_W]


def _locality_cfg(name, memory, bursts):
    return {
        "name": name,
        "memory": memory,
        "mode": "read_throughput",
        "rst": {"A": 0, "B": bursts, "S": [64, 1024, 4096], "W": LOCALITY_W, "N": SWEEP_N},
    }


def _fig7_build():
    return [_locality_cfg("hbm_locality", "HBM", [32, 64]), _locality_cfg("ddr4_locality", "DDR4", [64, 128])]


def _locality_ratios(table, memory):
    policy = DEFAULT_POLICY[memory]
    B = MIN_BURST[memory]
    small = table[(policy, B, 4096, 8192)]
    large = table[(policy, B, 4096, SEQUENTIAL_W)]
    return {
        "gbps_w8k": small,
        "gbps_w256m": large,
        "locality_ratio": small / large,
        "small_stride_ratio": table[(policy, B, 64, 8192)] / table[(policy, B, 64, SEQUENTIAL_W)],
    }


def _fig7_results(runs, configs):
    out = _locality_ratios(_gbps_table(runs["hbm_locality"]), "HBM")
    out["DDR4"] = _locality_ratios(_gbps_table(runs["ddr4_locality"]), "DDR4")
    return out


# fig8-switch-throughput -----------------------------------------------


def _fig8_build():
    return [
        {
            "name": "switch_throughput",
            "memory": "HBM",
            "mode": "read_throughput",
            "switch": {"enabled": True},
            "channels": _switch_channels(),
            "rst": {"A": 0, "B": 64, "S": [64, 256, 1024, 4096], "W": LATENCY_W, "N": TABLE6_N},
        }
    ]


def _fig8_results(runs, configs):
    by_stride = {}
    for run in runs["switch_throughput"]:
        by_stride.setdefault(run.rst.S, {})[f"axi{run.axi}"] = run.report.gbps
    return {
        str(S): {"gbps": values, "relative_spread": (max(values.values()) - min(values.values())) / max(values.values())}
        for S, values in sorted(by_stride.items())
    }


PRESETS = {
    p.name: p
    for p in (
        Preset("table4", "Latência ociosa de hit/closed/miss, HBM e DDR4 (switch desligado)", _table4_build, _table4_results),
        Preset("table5", "Latência do AXI de cada mini-switch até o HBM 0 (switch ligado)", _table5_build, _table5_results),
        Preset("table6", "Vazão sequencial por canal e agregada, HBM (32) e DDR4 (2)", _table6_build, _table6_results),
        Preset("fig4-refresh", "Picos de latência por refresh e intervalo estimado", _fig4_build, _fig4_results),
        Preset("fig5-policy-sweep", "Vazão por política de mapeamento, stride e burst", _fig5_build, _fig5_results),
        Preset("fig7-locality", "Efeito do working set (localidade) na vazão", _fig7_build, _fig7_results),
        Preset("fig8-switch-throughput", "Vazão do AXI de cada mini-switch até o HBM 0", _fig8_build, _fig8_results),
    )
}


def list_presets():
    return [(p.name, p.description) for p in PRESETS.values()]


def get_preset(name):
    if name not in PRESETS:
        raise PresetNotFoundError(f"Preset desconhecido: {name}", [{"valid": list(PRESETS)}])
    return PRESETS[name]
