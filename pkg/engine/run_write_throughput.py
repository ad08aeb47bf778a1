from engine.run_read_throughput import DEFAULT_MAX_OUTSTANDING, saturate


def run_write_throughput(cfg, channel, route, max_outstanding=DEFAULT_MAX_OUTSTANDING):
    return saturate(cfg, channel, route, channel.service_write, max_outstanding)
