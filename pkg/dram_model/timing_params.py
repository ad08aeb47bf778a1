from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from helpers.errors import ConfigValidationError, TimingParamsError
from helpers.units import ns_to_cycles


class TimingParams(BaseModel):
    """
    Constantes de clock e de temporização DRAM de um tipo de memória.

    Tudo em ciclos do clock AXI, exceto t_ccd_s/t_ccd_l, contados no clock de
    comando da memória (`command_clock_ratio` vezes o AXI).
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    clock_mhz: float = Field(gt=0)
    t_cas: int = Field(ge=0, description="latência de leitura com page hit em canal ocioso")
    t_rcd: int = Field(ge=0, description="activate -> comando de coluna")
    t_rp: int = Field(ge=0, description="precharge")
    t_ras: int = Field(ge=0, description="activate -> precharge mínimo")
    t_rtp: int = Field(
        ge=1,
        description="coluna -> precharge de um banco que a transação imediatamente anterior leu",
    )
    t_ccd_s: int = Field(ge=1, description="coluna -> coluna, bank groups diferentes (clock de comando)")
    t_ccd_l: int = Field(ge=1, description="coluna -> coluna, mesmo bank group (clock de comando)")
    command_clock_ratio: int = Field(ge=1, description="clock de comando / clock AXI")
    t_refi: float = Field(gt=0, description="intervalo de refresh (ns)")
    t_rfc: float = Field(ge=0, description="duração do refresh (ns)")
    bus_bytes_per_cycle: int = Field(gt=0)
    efficiency_overhead: float = Field(ge=0, description="ciclos extras de barramento por transação")
    min_issue_gap: float = Field(gt=0, description="ciclos entre duas transações aceitas")

    @model_validator(mode="after")
    def _check_relations(self):
        if self.t_ccd_l < self.t_ccd_s:
            raise ValueError("t_ccd_l deve ser >= t_ccd_s")
        if self.t_refi <= self.t_rfc:
            raise ValueError("t_refi deve ser maior que t_rfc")
        return self

    @property
    def ccd_s_cycles(self):
        return self.t_ccd_s / self.command_clock_ratio

    @property
    def ccd_l_cycles(self):
        return self.t_ccd_l / self.command_clock_ratio

    @property
    def refi_cycles(self):
        return ns_to_cycles(self.t_refi, self.clock_mhz)

    @property
    def rfc_cycles(self):
        return ns_to_cycles(self.t_rfc, self.clock_mhz)

    @property
    def hit_latency(self):
        return self.t_cas

    @property
    def closed_latency(self):
        return self.t_cas + self.t_rcd

    @property
    def miss_latency(self):
        return self.t_cas + self.t_rp + self.t_rcd


# Calibração: latências ociosas 48/55/62 (HBM) e 22/27/32 (DDR4) ciclos;
# t_ras, t_rtp, t_ccd_*, efficiency_overhead e min_issue_gap são parâmetros
# livres ajustados para as tendências de vazão (ver DESIGN.md).
TIMING_PRESETS = {
    "hbm-u280": dict(
        clock_mhz=450.0,
        t_cas=48,
        t_rcd=7,
        t_rp=7,
        t_ras=17,
        t_rtp=48,
        t_ccd_s=2,
        t_ccd_l=4,
        command_clock_ratio=2,
        t_refi=7800.0,
        t_rfc=160.0,
        bus_bytes_per_cycle=32,
        efficiency_overhead=0.17,
        min_issue_gap=2.17,
    ),
    "ddr4-u280": dict(
        clock_mhz=300.0,
        t_cas=22,
        t_rcd=5,
        t_rp=5,
        t_ras=10,
        t_rtp=1,
        t_ccd_s=1,
        t_ccd_l=1,
        command_clock_ratio=4,
        t_refi=7800.0,
        t_rfc=350.0,
        bus_bytes_per_cycle=64,
        efficiency_overhead=0.04,
        min_issue_gap=1.0,
    ),
}

DEFAULT_TIMING_PRESET = {"HBM": "hbm-u280", "DDR4": "ddr4-u280"}


def timing_preset(name, **overrides):
    """Instancia um preset de temporização, aplicando sobrescritas campo a campo."""
    if name not in TIMING_PRESETS:
        raise TimingParamsError(
            f"Preset de temporização desconhecido: {name}", [{"valid": sorted(TIMING_PRESETS)}]
        )
    try:
        return TimingParams(**{**TIMING_PRESETS[name], **overrides})
    except ValidationError as exc:
        raise ConfigValidationError.from_pydantic(exc, prefix="timing_overrides") from exc
