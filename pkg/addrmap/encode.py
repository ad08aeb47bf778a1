from addrmap.memory_kind import Field
from helpers.errors import CoordinateRangeError


def encode(policy, coords):
    """Inverso de `decode`: monta o endereço de bytes a partir das coordenadas."""
    remaining = {
        Field.ROW: coords.row,
        Field.BANK_GROUP: coords.bank_group,
        Field.BANK: coords.bank,
        Field.COLUMN: coords.column,
    }
    for field, value in remaining.items():
        width = policy.field_width(field)
        if value < 0 or value >> width:
            raise CoordinateRangeError(
                f"{field.value}={value} não cabe em {width} bits ({policy.name}/{policy.kind})"
            )

    value = 0
    # do segmento menos significativo para o mais significativo
    for field, shift, width in reversed(policy.slices):
        value |= (remaining[field] & ((1 << width) - 1)) << shift
        remaining[field] >>= width
    return value << policy.kind.addr_field_lo
