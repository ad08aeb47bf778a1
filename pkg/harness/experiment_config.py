import itertools
from enum import Enum
from typing import NamedTuple, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from addrmap import DEFAULT_POLICY, get_memory_kind, get_policy
from dram_model import DEFAULT_TIMING_PRESET, timing_preset
from engine import DEFAULT_MAX_OUTSTANDING, DEFAULT_TRACE_CAPACITY, RstConfig, validate_rst
from helpers.errors import ConfigValidationError
from interconnect import NUM_CHANNELS, SwitchTopology

CHANNELS_PER_KIND = {"HBM": NUM_CHANNELS, "DDR4": 2}

IntOrList = Union[int, list[int]]


class Mode(str, Enum):
    LATENCY = "latency"
    READ_THROUGHPUT = "read_throughput"
    WRITE_THROUGHPUT = "write_throughput"


class ChannelPair(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    axi: int = Field(ge=0)
    hbm: int = Field(ge=0)


class RstSweep(BaseModel):
    """RST com listas opcionais em B, S e W; cada combinação vira uma execução."""

    model_config = ConfigDict(extra="forbid")

    A: int = Field(default=0, ge=0)
    B: IntOrList
    S: IntOrList
    W: IntOrList
    N: int = Field(ge=0)

    @field_validator("B", "S", "W")
    @classmethod
    def _non_empty(cls, value):
        if isinstance(value, list) and not value:
            raise ValueError("lista de varredura vazia")
        return value

    def values(self, name):
        value = getattr(self, name)
        return list(value) if isinstance(value, list) else [value]

    @property
    def is_sweep(self):
        return any(isinstance(getattr(self, n), list) for n in ("B", "S", "W"))


class OutputSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dir: str = "results"
    write_traces: bool = True
    clamp_8bit: bool = False


class RunPoint(NamedTuple):
    policy: str
    rst: RstConfig


class ExperimentConfig(BaseModel):
    """Uma configuração completa de experimento, sem necessidade de recompilar nada entre tarefas."""

    model_config = ConfigDict(extra="forbid")

    name: str = "experimento"
    memory: str = "HBM"
    policy: Optional[Union[str, list[str]]] = None
    custom_policies: dict[str, str] = Field(default_factory=dict)
    timing_preset: Optional[str] = None
    timing_overrides: dict[str, Union[int, float]] = Field(default_factory=dict)
    switch: SwitchTopology = Field(default_factory=SwitchTopology)
    mode: Mode = Mode.LATENCY
    rst: RstSweep
    channels: list[ChannelPair] = Field(default_factory=lambda: [ChannelPair(axi=0, hbm=0)])
    trace_capacity: int = Field(default=DEFAULT_TRACE_CAPACITY, ge=1)
    max_outstanding: int = Field(default=DEFAULT_MAX_OUTSTANDING, ge=1)
    debug: bool = False
    n_jobs: int = 1
    output: OutputSettings = Field(default_factory=OutputSettings)

    @field_validator("n_jobs")
    @classmethod
    def _joblib_workers(cls, value):
        # joblib aceita negativos (todas as CPUs menos k), mas não zero
        if value == 0:
            raise ValueError("n_jobs não pode ser 0")
        return value

    @field_validator("memory")
    @classmethod
    def _known_memory(cls, value):
        value = value.upper()
        if value not in CHANNELS_PER_KIND:
            raise ValueError(f"memória deve ser uma de {sorted(CHANNELS_PER_KIND)}")
        return value

    @field_validator("policy")
    @classmethod
    def _non_empty_policy(cls, value):
        if isinstance(value, list) and not value:
            raise ValueError("lista de políticas vazia")
        return value

    @model_validator(mode="after")
    def _check_channels(self):
        if not self.channels:
            raise ValueError("channels não pode ser vazio")
        if self.memory == "DDR4" and self.switch.enabled:
            raise ValueError("DDR4 não tem switch; switch.enabled deve ser false")
        limit = CHANNELS_PER_KIND[self.memory]
        for pair in self.channels:
            if pair.axi >= limit or pair.hbm >= limit:
                raise ValueError(f"canal ({pair.axi}, {pair.hbm}) fora de 0..{limit - 1} para {self.memory}")
            if not self.switch.enabled and pair.axi != pair.hbm:
                raise ValueError(
                    f"par ({pair.axi}, {pair.hbm}) exige o switch habilitado (acesso não local)"
                )
        return self

    @property
    def kind(self):
        return get_memory_kind(self.memory)

    def policy_names(self):
        if self.policy is None:
            return [DEFAULT_POLICY[self.memory]]
        names = self.policy if isinstance(self.policy, list) else [self.policy]
        return [name.upper() for name in names]

    def policies(self):
        return [get_policy(name, self.kind, self.custom_policies) for name in self.policy_names()]

    def timing(self):
        preset = self.timing_preset or DEFAULT_TIMING_PRESET[self.memory]
        return timing_preset(preset, **self.timing_overrides)

    @property
    def is_sweep(self):
        return self.rst.is_sweep or isinstance(self.policy, list)

    def expand(self):
        """Produto cartesiano (política, B, S, W) na ordem da config; valida cada RST."""
        kind = self.kind
        points = []
        for policy, B, S, W in itertools.product(
            self.policy_names(), self.rst.values("B"), self.rst.values("S"), self.rst.values("W")
        ):
            rst = RstConfig(A=self.rst.A, B=B, S=S, W=W, N=self.rst.N)
            points.append(RunPoint(policy=policy, rst=validate_rst(rst, kind)))
        return points

    def check(self):
        """Validação que depende de outros módulos: políticas, temporização e cada expansão RST."""
        self.policies()
        timing = self.timing()
        if timing.bus_bytes_per_cycle != self.kind.bus_bytes_per_cycle:
            raise ConfigValidationError(
                "Preset de temporização incompatível com a memória",
                [{"field": "timing_preset", "message": f"barramento de {timing.bus_bytes_per_cycle} B em {self.memory}"}],
            )
        self.expand()
        return self

    def echo(self):
        return self.model_dump(mode="json")


def build_config(data):
    """Dicionário -> ExperimentConfig validada, com erros de pydantic convertidos em ConfigValidationError."""
    try:
        cfg = ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigValidationError.from_pydantic(exc) from exc
    return cfg.check()
