def gen_address(cfg, i):
    """Endereço da i-ésima transação: A + (i*S) mod W."""
    return cfg.A + (i * cfg.S) % cfg.W
