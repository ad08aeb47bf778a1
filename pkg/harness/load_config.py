import json
from pathlib import Path

from harness.experiment_config import build_config
from helpers.errors import ConfigValidationError


def load_config(path):
    """Lê um JSON de experimento e devolve a ExperimentConfig já validada."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ConfigValidationError(f"Arquivo de configuração não encontrado: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigValidationError(
            f"JSON inválido em {path}",
            [{"field": "", "message": f"linha {exc.lineno}, coluna {exc.colno}: {exc.msg}"}],
        ) from exc
    return build_config(data)
