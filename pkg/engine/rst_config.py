from pydantic import BaseModel, ConfigDict, Field

from helpers.errors import RstValidationError

MAX_TRANSACTIONS = 200_000


class RstConfig(BaseModel):
    """Parâmetros de execução de um motor: endereço inicial, burst, stride, working set e nº de transações."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    A: int = Field(default=0, ge=0, description="endereço inicial (bytes)")
    B: int = Field(gt=0, description="tamanho do burst (bytes)")
    S: int = Field(gt=0, description="stride (bytes)")
    W: int = Field(gt=0, description="working set (bytes)")
    N: int = Field(ge=0, description="número de transações")


def _is_pow2(value):
    return value > 0 and value & (value - 1) == 0


def validate_rst(cfg, kind):
    """Confere as restrições dos parâmetros para o tipo de memória; devolve a própria cfg."""
    problems = []
    if not _is_pow2(cfg.B):
        problems.append({"field": "B", "constraint": "B deve ser potência de 2", "value": cfg.B})
    if not _is_pow2(cfg.S):
        problems.append({"field": "S", "constraint": "S deve ser potência de 2", "value": cfg.S})
    if not _is_pow2(cfg.W) or cfg.W <= 16:
        problems.append({"field": "W", "constraint": "W deve ser potência de 2 maior que 16", "value": cfg.W})
    if cfg.B < kind.min_burst_bytes:
        problems.append(
            {"field": "B", "constraint": f"B >= {kind.min_burst_bytes} para {kind.kind}", "value": cfg.B}
        )
    if cfg.S > cfg.W:
        problems.append({"field": "S", "constraint": "S <= W", "value": cfg.S})
    if cfg.A % kind.min_burst_bytes:
        problems.append(
            {"field": "A", "constraint": f"A alinhado a {kind.min_burst_bytes} bytes", "value": cfg.A}
        )
    if cfg.A + cfg.W > kind.capacity_bytes:
        problems.append(
            {"field": "W", "constraint": f"A + W <= {kind.capacity_bytes} (capacidade do canal)", "value": cfg.W}
        )
    if cfg.N > MAX_TRANSACTIONS:
        problems.append({"field": "N", "constraint": f"N <= {MAX_TRANSACTIONS}", "value": cfg.N})

    if problems:
        names = "; ".join(p["constraint"] for p in problems)
        raise RstValidationError(f"Parâmetros RST inválidos: {names}", problems)
    return cfg
