import io

import matplotlib

from analysis import pivot_by_policy

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _figure_bytes(fig):
    buf = io.BytesIO()
    try:
        fig.tight_layout()
    except Exception:
        pass
    fig.savefig(buf, format="png")
    plt.close(fig)
    return buf.getvalue()


def render_latency_scatter(frame, title="Latência por transação"):
    """Latência de cada leitura serial; os picos periódicos são os refreshes."""
    fig, ax = plt.subplots(figsize=(8, 3.5))
    ax.scatter(frame["index"], frame["latency_cycles"], s=4)
    ax.set_xlabel("transação")
    ax.set_ylabel("latência (ciclos)")
    ax.set_title(title)
    return _figure_bytes(fig)


def render_throughput_lines(sweep, title="Vazão por stride"):
    """Uma curva por política em cada burst: GB/s x stride (escala log2)."""
    bursts = sorted(sweep["B"].unique())
    fig, axes = plt.subplots(1, len(bursts), figsize=(4 * len(bursts), 3.5), squeeze=False)
    for ax, B in zip(axes[0], bursts):
        curves = pivot_by_policy(sweep, B)
        for label in curves.columns:
            series = curves[label].dropna()
            ax.plot(series.index, series.values, marker="o", label=label)
        ax.set_xscale("log", base=2)
        ax.set_xlabel("stride S (bytes)")
        ax.set_ylabel("GB/s")
        ax.set_title(f"B={B}")
        ax.legend(fontsize="small")
    fig.suptitle(title)
    return _figure_bytes(fig)


def render_channel_bars(frame, title="Vazão por canal AXI"):
    fig, ax = plt.subplots(figsize=(8, 3.5))
    for S, group in frame.groupby("S"):
        ax.bar([f"{a}->{h}" for a, h in zip(group["axi"], group["hbm"])], group["gbps"], alpha=0.6, label=f"S={S}")
    ax.set_xlabel("AXI -> HBM")
    ax.set_ylabel("GB/s")
    ax.set_title(title)
    if frame["S"].nunique() > 1:
        ax.legend(fontsize="small")
    return _figure_bytes(fig)


def render_plots(plot_data):
    """Gera PNGs a partir das tabelas de plot_data, pelo nome de cada tabela."""
    images = {}
    for name, frame in plot_data.items():
        if frame.empty:
            continue
        if "latency_cycles" in frame.columns:
            images[name] = render_latency_scatter(frame, name)
        elif name.endswith("throughput_vs_stride"):
            images[name] = render_throughput_lines(frame, name)
        elif {"axi", "hbm", "gbps"} <= set(frame.columns):
            images[name] = render_channel_bars(frame, name)
    return images
