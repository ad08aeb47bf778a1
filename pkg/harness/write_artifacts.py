import json
from pathlib import Path

import pandas as pd

from helpers.canonical_json import canonical_dumps
from helpers.errors import ArtifactWriteError
from helpers.logger import get_logger

logger = get_logger("harness")

SUMMARY_FILE = "summary.json"
SWEEP_FILE = "sweep.csv"
TRACES_DIR = "traces"
PLOT_DATA_DIR = "plot_data"


def _write_csv(frame, path):
    frame.to_csv(path, index=False, lineterminator="\n")


def write_artifacts(artifact, out_dir, write_traces=True):
    """
    Grava summary.json, traces/*.csv, sweep.csv e plot_data/*.csv em `out_dir`.

    A saída é determinística: mesma configuração, mesmos bytes.
    """
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / SUMMARY_FILE).write_text(canonical_dumps(artifact.summary), encoding="utf-8", newline="\n")

        if write_traces and artifact.traces:
            traces_dir = out_dir / TRACES_DIR
            traces_dir.mkdir(exist_ok=True)
            for label, rows in artifact.traces.items():
                _write_csv(pd.DataFrame(rows), traces_dir / f"{label}.csv")

        if artifact.sweep is not None:
            _write_csv(artifact.sweep, out_dir / SWEEP_FILE)

        if artifact.plot_data:
            plot_dir = out_dir / PLOT_DATA_DIR
            plot_dir.mkdir(exist_ok=True)
            for name, frame in artifact.plot_data.items():
                _write_csv(frame, plot_dir / f"{name}.csv")
    except OSError as exc:
        raise ArtifactWriteError(f"Falha ao gravar artefatos em {out_dir}", [{"error": str(exc)}]) from exc

    artifact.out_dir = out_dir
    logger.info(f"Artefatos gravados em {out_dir}")
    return out_dir


def read_summary(out_dir):
    path = Path(out_dir) / SUMMARY_FILE
    if not path.exists():
        raise ArtifactWriteError(f"{path} não existe; rode um experimento antes")
    return json.loads(path.read_text(encoding="utf-8"))


def read_plot_data(out_dir):
    plot_dir = Path(out_dir) / PLOT_DATA_DIR
    if not plot_dir.exists():
        return {}
    return {path.stem: pd.read_csv(path) for path in sorted(plot_dir.glob("*.csv"))}
