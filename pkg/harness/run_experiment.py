from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from analysis import (
    classify_trace,
    detect_refresh_interval,
    estimate_to_dict,
    histogram_to_dict,
    summarize_sweep,
)
from dram_model import PseudoChannel
from engine import run_read_latency, run_read_throughput, run_write_throughput
from harness.experiment_config import Mode, build_config
from harness.write_artifacts import write_artifacts
from helpers.errors import InsufficientDataError
from helpers.logger import get_logger
from interconnect import local_route, make_route

logger = get_logger("harness")


@dataclass
class ChannelRun:
    label: str
    policy: str
    axi: int
    hbm: int
    rst: object
    mode: Mode
    route_extra: int = 0
    trace: Optional[object] = None
    report: Optional[object] = None
    histogram: Optional[object] = None
    estimate: Optional[object] = None

    def to_dict(self):
        doc = {
            "label": self.label,
            "policy": self.policy,
            "axi": self.axi,
            "hbm": self.hbm,
            "mode": self.mode.value,
            "route_extra": self.route_extra,
            "rst": self.rst.model_dump(),
        }
        if self.report is not None:
            doc["report"] = self.report.to_dict()
        if self.trace is not None:
            doc["entries"] = len(self.trace)
            doc["first_latency"] = self.trace.entries[0].latency if len(self.trace) else None
            doc["histogram"] = histogram_to_dict(self.histogram)
            doc["refresh_estimate"] = estimate_to_dict(self.estimate) if self.estimate else None
        return doc


@dataclass
class RunArtifact:
    """Resultado de uma execução: resumo JSON, traces e tabelas prontas para gráficos."""

    summary: dict
    runs: list = field(default_factory=list)
    traces: dict = field(default_factory=dict)
    sweep: Optional[pd.DataFrame] = None
    plot_data: dict = field(default_factory=dict)
    out_dir: Optional[Path] = None
    exit_status: int = 0


def run_label(policy, rst, axi, hbm, prefix=""):
    label = f"{policy}_B{rst.B}_S{rst.S}_W{rst.W}_axi{axi}_hbm{hbm}"
    return f"{prefix}{label}" if prefix else label


def capped(cfg, max_transactions):
    """Cópia da config com N limitado; a cópia continua válida e re-executável."""
    if max_transactions is None or cfg.rst.N <= max_transactions:
        return cfg
    data = cfg.model_dump(mode="json")
    data["rst"]["N"] = max_transactions
    return build_config(data)


def run_channel(cfg, point, pair, prefix=""):
    """Executa um motor num canal: instancia o pseudo canal, a rota e o laço do modo pedido."""
    policy = next(p for p in cfg.policies() if p.name == point.policy)
    timing = cfg.timing()
    channel = PseudoChannel(policy, timing)
    if cfg.memory == "HBM":
        route = make_route(cfg.switch, pair.axi, pair.hbm)
    else:
        route = local_route(pair.axi)

    run = ChannelRun(
        label=run_label(point.policy, point.rst, pair.axi, pair.hbm, prefix),
        policy=point.policy,
        axi=pair.axi,
        hbm=pair.hbm,
        rst=point.rst,
        mode=cfg.mode,
        route_extra=route.extra_cycles,
    )
    if cfg.mode == Mode.LATENCY:
        run.trace = run_read_latency(point.rst, channel, route, capacity=cfg.trace_capacity, debug=cfg.debug)
        run.histogram = classify_trace(run.trace, timing, route.extra_cycles)
        try:
            run.estimate = detect_refresh_interval(run.trace, timing.clock_mhz)
        except InsufficientDataError:
            run.estimate = None
    elif cfg.mode == Mode.READ_THROUGHPUT:
        run.report = run_read_throughput(point.rst, channel, route, cfg.max_outstanding)
    else:
        run.report = run_write_throughput(point.rst, channel, route, cfg.max_outstanding)
    return run


def execute(cfg, prefix="", progress=False):
    """Roda todos os pares (ponto, canal); a ordem do resultado segue a config, não a conclusão."""
    jobs = [(point, pair) for point in cfg.expand() for pair in cfg.channels]
    logger.info(f"{cfg.name}: {len(jobs)} execução(ões) em modo {cfg.mode.value}")
    tasks = (delayed(run_channel)(cfg, point, pair, prefix) for point, pair in jobs)
    return Parallel(n_jobs=cfg.n_jobs)(
        tqdm(tasks, total=len(jobs), desc=cfg.name, disable=not progress, leave=False)
    )


def aggregate_throughput(runs):
    """Soma e média de GB/s entre canais para cada ponto (política, B, S, W)."""
    groups = {}
    for run in runs:
        if run.report is None:
            continue
        key = (run.policy, run.rst.B, run.rst.S, run.rst.W)
        groups.setdefault(key, []).append(run.report.gbps)
    return [
        {
            "policy": policy,
            "B": B,
            "S": S,
            "W": W,
            "channels": len(values),
            "total_gbps": sum(values),
            "mean_gbps": sum(values) / len(values),
        }
        for (policy, B, S, W), values in groups.items()
    ]


def collect(cfg, runs):
    """Monta o resumo JSON, os traces e as tabelas de gráfico a partir das execuções."""
    summary = {
        "config": cfg.echo(),
        "runs": [run.to_dict() for run in runs],
    }
    traces = {}
    plot_data = {}
    sweep = None
    if cfg.mode == Mode.LATENCY:
        for run in runs:
            rows = run.trace.export_rows(clamp_8bit=cfg.output.clamp_8bit)
            traces[run.label] = rows
            plot_data[f"latency_{run.label}"] = pd.DataFrame(rows, columns=["index", "issue_cycle", "latency_cycles"])
    else:
        summary["aggregate"] = aggregate_throughput(runs)
        plot_data["channels"] = pd.DataFrame(
            [
                {
                    "policy": run.policy,
                    "B": run.rst.B,
                    "S": run.rst.S,
                    "W": run.rst.W,
                    "axi": run.axi,
                    "hbm": run.hbm,
                    "gbps": round(run.report.gbps, 6),
                }
                for run in runs
            ]
        )
        if cfg.is_sweep:
            sweep = summarize_sweep([(r.policy, r.rst.S, r.rst.B, r.report) for r in runs]).round(6)
            plot_data["throughput_vs_stride"] = sweep
    return summary, traces, sweep, plot_data


def run_experiment(cfg, out_dir=None, max_transactions=None, progress=False):
    """Executa a experiência inteira e, se `out_dir` for dado, grava os artefatos."""
    cfg = capped(cfg, max_transactions)
    runs = execute(cfg, progress=progress)
    summary, traces, sweep, plot_data = collect(cfg, runs)
    artifact = RunArtifact(summary=summary, runs=runs, traces=traces, sweep=sweep, plot_data=plot_data)
    if out_dir is not None:
        write_artifacts(artifact, out_dir, write_traces=cfg.output.write_traces)
    return artifact
