import pandas as pd

from harness.experiment_config import build_config
from harness.presets import get_preset
from harness.run_experiment import RunArtifact, capped, collect, execute
from harness.write_artifacts import write_artifacts
from helpers.logger import get_logger

logger = get_logger("harness")


def run_preset(name, out_dir=None, max_transactions=None, n_jobs=None, progress=False):
    """
    Executa todas as experiências de um preset e junta tudo num único artefato.

    `max_transactions` limita o N de cada execução e `n_jobs` substitui o
    paralelismo de cada configuração.
    """
    preset = get_preset(name)
    configs = {}
    for cfg in preset.configs():
        cfg = capped(cfg, max_transactions)
        if n_jobs is not None:
            cfg = build_config({**cfg.model_dump(mode="json"), "n_jobs": n_jobs})
        configs[cfg.name] = cfg

    runs_by_name = {}
    experiments = []
    traces = {}
    plot_data = {}
    sweeps = []
    all_runs = []
    for cfg_name, cfg in configs.items():
        runs = execute(cfg, prefix=f"{cfg_name}_", progress=progress)
        runs_by_name[cfg_name] = runs
        all_runs.extend(runs)
        summary, cfg_traces, sweep, cfg_plots = collect(cfg, runs)
        experiments.append({"name": cfg_name, **summary})
        traces.update(cfg_traces)
        plot_data.update({f"{cfg_name}_{key}": frame for key, frame in cfg_plots.items()})
        if sweep is not None:
            sweeps.append(sweep.assign(experiment=cfg_name))

    summary = {
        "preset": preset.name,
        "description": preset.description,
        "experiments": experiments,
        "results": preset.results(runs_by_name, configs),
    }
    sweep = pd.concat(sweeps, ignore_index=True) if sweeps else None
    artifact = RunArtifact(summary=summary, runs=all_runs, traces=traces, sweep=sweep, plot_data=plot_data)
    if out_dir is not None:
        write_traces = all(cfg.output.write_traces for cfg in configs.values())
        write_artifacts(artifact, out_dir, write_traces=write_traces)
    logger.info(f"Preset {name} concluído ({len(all_runs)} execuções)")
    return artifact
