import json
import logging
import sys
from functools import wraps
from pathlib import Path

import click
import pandas as pd

from harness import list_presets, load_config, read_plot_data, read_summary, run_experiment, run_preset, sweep
from helpers.errors import (
    ArtifactWriteError,
    ConfigValidationError,
    PolicyError,
    PresetNotFoundError,
    RoutingError,
    RstValidationError,
    SimulatorError,
    TimingParamsError,
)
from helpers.logger import configure_logging, get_logger
from reporting import build_pdf_report, render_plots

logger = get_logger("cli")

# erros de entrada do usuário saem com 2; falhas de execução/escrita com 1
USAGE_ERRORS = (
    ConfigValidationError,
    RstValidationError,
    PolicyError,
    TimingParamsError,
    RoutingError,
    PresetNotFoundError,
)


def _json_errors(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except SimulatorError as exc:
            click.echo(json.dumps(exc.to_dict(), ensure_ascii=False, sort_keys=True), err=True)
            sys.exit(2 if isinstance(exc, USAGE_ERRORS) else 1)

    return wrapper


def _print_summary(artifact):
    if artifact.sweep is not None:
        click.echo(artifact.sweep.to_markdown(index=False))
    elif artifact.summary.get("aggregate"):
        click.echo(pd.DataFrame(artifact.summary["aggregate"]).to_markdown(index=False))
    if artifact.out_dir is not None:
        click.echo(f"Artefatos em {artifact.out_dir}")


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Logs de depuração.")
@click.option("--quiet", "-q", is_flag=True, help="Só avisos e erros.")
def cli(verbose, quiet):
    """Simulador de benchmark de memória HBM/DDR4."""
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    configure_logging(level)


@cli.command()
@click.argument("config", type=click.Path(dir_okay=False))
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None, help="Diretório de saída.")
@click.option("--max-transactions", type=click.IntRange(min=0), default=None, help="Limita o N de cada execução.")
@_json_errors
def run(config, out_dir, max_transactions):
    """Executa um experimento descrito em CONFIG (JSON)."""
    cfg = load_config(config)
    artifact = run_experiment(cfg, out_dir=out_dir or cfg.output.dir, max_transactions=max_transactions, progress=True)
    _print_summary(artifact)


@cli.command("sweep")
@click.argument("config", type=click.Path(dir_okay=False))
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None)
@click.option("--max-transactions", type=click.IntRange(min=0), default=None)
@_json_errors
def sweep_cmd(config, out_dir, max_transactions):
    """Varredura (política x B x S x W) em modo de vazão; grava sweep.csv."""
    cfg = load_config(config)
    artifact = sweep(cfg, out_dir=out_dir or cfg.output.dir, max_transactions=max_transactions, progress=True)
    _print_summary(artifact)


@cli.command()
@click.argument("name")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None)
@click.option("--max-transactions", type=click.IntRange(min=0), default=None)
@click.option("--jobs", "n_jobs", type=int, default=None, help="Execuções em paralelo (joblib).")
@_json_errors
def preset(name, out_dir, max_transactions, n_jobs):
    """Reproduz um preset (tabela ou figura) pelo nome."""
    artifact = run_preset(
        name,
        out_dir=out_dir or str(Path("results") / name),
        max_transactions=max_transactions,
        n_jobs=n_jobs,
        progress=True,
    )
    click.echo(json.dumps(artifact.summary["results"], ensure_ascii=False, sort_keys=True, indent=2))
    click.echo(f"Artefatos em {artifact.out_dir}")


@cli.command("list-presets")
def list_presets_cmd():
    """Lista os presets disponíveis."""
    for name, description in list_presets():
        click.echo(f"{name}\t{description}")


@cli.command()
@click.argument("artifact_dir", type=click.Path(file_okay=False))
@_json_errors
def plot(artifact_dir):
    """Gera PNGs em ARTIFACT_DIR/plots a partir de plot_data/*.csv."""
    images = render_plots(read_plot_data(artifact_dir))
    plots_dir = Path(artifact_dir) / "plots"
    try:
        plots_dir.mkdir(exist_ok=True)
        for name, img_bytes in images.items():
            (plots_dir / f"{name}.png").write_bytes(img_bytes)
    except OSError as exc:
        raise ArtifactWriteError(f"Falha ao gravar gráficos em {plots_dir}", [{"error": str(exc)}]) from exc
    click.echo(f"{len(images)} gráfico(s) em {plots_dir}")


@cli.command()
@click.argument("artifact_dir", type=click.Path(file_okay=False))
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Arquivo PDF (padrão: report.pdf).")
@_json_errors
def report(artifact_dir, output):
    """Gera um relatório PDF dos artefatos em ARTIFACT_DIR."""
    summary = read_summary(artifact_dir)
    images = render_plots(read_plot_data(artifact_dir))
    target = Path(output) if output else Path(artifact_dir) / "report.pdf"
    pdf = build_pdf_report(summary, images)
    try:
        target.write_bytes(pdf)
    except OSError as exc:
        raise ArtifactWriteError(f"Falha ao gravar o relatório em {target}", [{"error": str(exc)}]) from exc
    click.echo(f"Relatório em {target}")


if __name__ == "__main__":
    cli()
