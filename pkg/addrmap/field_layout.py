def field_layout(policy):
    """Lista de segmentos (campo, largura) usada por decode/encode, MSB primeiro."""
    return list(policy.segments)
