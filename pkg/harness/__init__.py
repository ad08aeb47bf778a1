from harness.experiment_config import (
    ExperimentConfig,
    ChannelPair,
    RstSweep,
    OutputSettings,
    RunPoint,
    Mode,
    build_config,
)
from harness.load_config import load_config
from harness.write_artifacts import write_artifacts, read_summary, read_plot_data
from harness.run_experiment import RunArtifact, ChannelRun, run_experiment, execute, collect, capped
from harness.sweep import sweep
from harness.presets import PRESETS, Preset, list_presets, get_preset
from harness.run_preset import run_preset
from harness.describe_registers import describe_registers, REGISTER_FIELDS
