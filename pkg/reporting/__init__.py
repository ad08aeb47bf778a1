from reporting.render_plots import (
    render_plots,
    render_latency_scatter,
    render_throughput_lines,
    render_channel_bars,
)
from reporting.build_pdf_report import build_pdf_report, results_tables
