from harness.experiment_config import Mode
from harness.run_experiment import run_experiment
from helpers.errors import ConfigValidationError


def sweep(cfg, out_dir=None, max_transactions=None, progress=False):
    """Varredura cartesiana (política, B, S, W) em modo de vazão; gera sweep.csv."""
    if cfg.mode == Mode.LATENCY:
        raise ConfigValidationError(
            "sweep exige modo de vazão",
            [{"field": "mode", "message": "use read_throughput ou write_throughput"}],
        )
    cfg = cfg.model_copy(update={"policy": cfg.policy_names()}) if not isinstance(cfg.policy, list) else cfg
    return run_experiment(cfg, out_dir=out_dir, max_transactions=max_transactions, progress=progress)
