REGISTER_BITS = 256
# ordem de campos a partir do bit 0; o registrador não é serializado, só documentado.
# O campo reservado ocupa o que sobra até REGISTER_BITS.
REGISTER_FIELDS = (
    ("W", 32, "working set (bytes)"),
    ("S", 32, "stride (bytes)"),
    ("N", 64, "número de transações"),
    ("B", 32, "tamanho do burst (bytes)"),
    ("A", 64, "endereço inicial"),
)


def describe_registers():
    """Layout do registrador de controle de 256 bits de cada módulo (leitura e escrita) de um motor."""
    layout = []
    lo = 0
    for name, width, description in REGISTER_FIELDS:
        layout.append({"field": name, "lo": lo, "hi": lo + width - 1, "bits": width, "description": description})
        lo += width
    reserved = REGISTER_BITS - lo
    layout.append({"field": "reserved", "lo": lo, "hi": REGISTER_BITS - 1, "bits": reserved, "description": "reservado"})
    return layout
