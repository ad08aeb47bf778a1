import logging

from rich.console import Console
from rich.logging import RichHandler

_ROOT = "hbmsim"


def configure_logging(level=logging.INFO):
    """Configura o logger raiz do projeto (saída no stderr, formatada pelo Rich)."""
    logger = logging.getLogger(_ROOT)
    logger.handlers.clear()
    handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


def get_logger(name):
    return logging.getLogger(f"{_ROOT}.{name}")
