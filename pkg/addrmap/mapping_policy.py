import re
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from addrmap.memory_kind import DDR4, FIELD_LETTERS, HBM, Field
from helpers.errors import PolicyError


class DecodedAddress(NamedTuple):
    row: int
    bank_group: int
    bank: int
    column: int


@dataclass(frozen=True)
class MappingPolicy:
    """Política de mapeamento: segmentos (campo, largura) do mais para o menos significativo."""

    name: str
    kind: object
    segments: tuple

    @cached_property
    def slices(self):
        # (campo, deslocamento dentro do campo decodificado, largura), MSB primeiro
        out = []
        shift = sum(width for _, width in self.segments)
        for field, width in self.segments:
            shift -= width
            out.append((field, shift, width))
        return tuple(out)

    @cached_property
    def field_widths(self):
        widths = {field: 0 for field in Field}
        for field, width in self.segments:
            widths[field] += width
        return widths

    def field_width(self, field):
        return self.field_widths[field]


_SEGMENT_RE = re.compile(r"^(\d+)(BG|R|B|C)$")


def parse_layout(text, kind, name="CUSTOM"):
    """Converte uma string no formato da tabela de políticas ("14R-1BG-2B-5C-1BG") em MappingPolicy."""
    segments = []
    for token in str(text).upper().replace(" ", "").split("-"):
        match = _SEGMENT_RE.match(token)
        if not match or int(match.group(1)) <= 0:
            raise PolicyError(f"Segmento inválido '{token}' no layout '{text}'")
        segments.append((FIELD_LETTERS[match.group(2)], int(match.group(1))))

    total = sum(width for _, width in segments)
    if total != kind.field_bits:
        raise PolicyError(
            f"Layout '{text}' soma {total} bits; {kind} exige {kind.field_bits}",
        )
    policy = MappingPolicy(name=name.upper(), kind=kind, segments=tuple(segments))
    for field, expected in kind.field_totals or ():
        got = policy.field_width(field)
        if got != expected:
            raise PolicyError(
                f"Layout '{text}' tem {got} bits de {field.value}; {kind} exige {expected}",
            )
    return policy


# Tabela de políticas de mapeamento, na ordem em que são listadas
POLICY_LAYOUTS = {
    "HBM": {
        "RBC": "14R-2BG-2B-5C",
        "RCB": "14R-5C-2BG-2B",
        "BRC": "2BG-2B-14R-5C",
        "RGBCG": "14R-1BG-2B-5C-1BG",
        "BRGCG": "2B-14R-1BG-5C-1BG",
    },
    "DDR4": {
        "RBC": "17R-2BG-2B-7C",
        "RCB": "17R-7C-2B-2BG",
        "BRC": "2BG-2B-17R-7C",
        "RCBI": "17R-6C-2B-1C-2BG",
    },
}

DEFAULT_POLICY = {"HBM": "RGBCG", "DDR4": "RCB"}

POLICY_ORDER = ("RBC", "RCB", "BRC", "RGBCG", "BRGCG", "RCBI")

_KINDS = {"HBM": HBM, "DDR4": DDR4}
_BUILTIN = {
    (kind_name, name): parse_layout(layout, _KINDS[kind_name], name)
    for kind_name, table in POLICY_LAYOUTS.items()
    for name, layout in table.items()
}


def list_policies(kind):
    return [_BUILTIN[(kind.kind, name)] for name in POLICY_LAYOUTS.get(kind.kind, {})]


def get_policy(name, kind, custom=None):
    """Busca uma política pelo nome (sem diferenciar maiúsculas), incluindo as definidas na config."""
    key = str(name).upper()
    for custom_name, layout in (custom or {}).items():
        if custom_name.upper() == key:
            return parse_layout(layout, kind, key)
    policy = _BUILTIN.get((kind.kind, key))
    if policy is None:
        valid = list(POLICY_LAYOUTS.get(kind.kind, {})) + [n.upper() for n in (custom or {})]
        raise PolicyError(f"Política '{name}' não existe para {kind}", [{"valid": valid}])
    return policy


def default_policy(kind):
    return get_policy(DEFAULT_POLICY[kind.kind], kind)


def policy_sort_key(name):
    key = str(name).upper()
    if key in POLICY_ORDER:
        return (0, POLICY_ORDER.index(key), key)
    return (1, 0, key)
