from engine.rst_config import RstConfig, validate_rst, MAX_TRANSACTIONS
from engine.gen_address import gen_address
from engine.latency_trace import LatencyTrace, TraceEntry, DEFAULT_TRACE_CAPACITY
from engine.throughput_report import ThroughputReport
from engine.run_read_latency import run_read_latency
from engine.run_read_throughput import run_read_throughput, saturate, DEFAULT_MAX_OUTSTANDING
from engine.run_write_throughput import run_write_throughput
