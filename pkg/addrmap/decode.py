from addrmap.mapping_policy import DecodedAddress
from addrmap.memory_kind import Field
from helpers.errors import AddressAlignmentError, AddressRangeError


def decode(policy, byte_addr):
    """Decodifica um endereço de bytes da aplicação em (row, bank group, bank, column)."""
    kind = policy.kind
    if byte_addr < 0 or byte_addr >> (kind.addr_field_hi + 1):
        raise AddressRangeError(
            f"Endereço {byte_addr:#x} fora do espaço de {kind} (limite {kind.capacity_bytes:#x})"
        )
    if byte_addr & (kind.min_burst_bytes - 1):
        raise AddressAlignmentError(
            f"Endereço {byte_addr:#x} não alinhado a {kind.min_burst_bytes} bytes"
        )

    value = byte_addr >> kind.addr_field_lo
    fields = {Field.ROW: 0, Field.BANK_GROUP: 0, Field.BANK: 0, Field.COLUMN: 0}
    # segmentos anteriores viram os bits mais significativos de campos divididos
    for field, shift, width in policy.slices:
        fields[field] = (fields[field] << width) | ((value >> shift) & ((1 << width) - 1))
    return DecodedAddress(
        row=fields[Field.ROW],
        bank_group=fields[Field.BANK_GROUP],
        bank=fields[Field.BANK],
        column=fields[Field.COLUMN],
    )
